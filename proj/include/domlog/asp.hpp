/*
 *  Copyright (c) 2026 The domlog authors.
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "domlog/program.hpp"

namespace domlog::asp {

/// Classical (strong) literal: a propositional variable or its negation.
struct Literal {
    std::uint32_t var = 0;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Disjunctive rule `h1 | .. | hk :- p1, .., pa, not n1, .., not nb` over
/// classical literals.  Empty head = constraint, empty body = fact.
struct ClassicalRule {
    std::vector<Literal> head;
    std::vector<Literal> pos;
    std::vector<Literal> neg;

    friend bool operator==(const ClassicalRule&, const ClassicalRule&) = default;
};

struct ClassicalProgram {
    std::vector<std::string> vars;
    std::vector<ClassicalRule> rules;

    bool neg_free() const {
        for (const ClassicalRule& r : rules)
            if (!r.neg.empty())
                return false;
        return true;
    }

    friend bool operator==(const ClassicalProgram&, const ClassicalProgram&) = default;
};

/// Set of classical literals over up to 16 variables: bit 2v holds variable
/// v, bit 2v+1 holds its negation.
using LiteralMask = std::uint32_t;

inline constexpr std::size_t kMaxLiteralVars = 16;

inline LiteralMask literal_bit(Literal l) {
    return LiteralMask{1} << (2 * l.var + (l.negated ? 1 : 0));
}

/// No variable together with its negation.
inline bool consistent_mask(LiteralMask x) {
    return (x & (x >> 1) & 0x55555555u) == 0;
}

/// The set of all 2|V| literals; the only inconsistent set the semantics
/// ever admits.
inline LiteralMask total_mask(std::size_t nvars) {
    return nvars == 0 ? 0 : static_cast<LiteralMask>((std::uint64_t{1} << (2 * nvars)) - 1);
}

inline std::string literal_name(const std::vector<std::string>& vars, Literal l) {
    return (l.negated ? "-" : "") + vars[l.var];
}

/// Renders a literal set as "{p, -q}".
inline std::string literal_set_string(const std::vector<std::string>& vars, LiteralMask x) {
    std::string out = "{";
    bool first = true;
    for (std::size_t v = 0; v < vars.size(); ++v)
        for (int s = 0; s < 2; ++s)
            if (x & (LiteralMask{1} << (2 * v + s))) {
                if (!first)
                    out += ", ";
                first = false;
                out += literal_name(vars, Literal{static_cast<std::uint32_t>(v), s == 1});
            }
    return out + "}";
}

namespace detail {

struct RuleMasks {
    LiteralMask head = 0, pos = 0, neg = 0;
};

inline std::vector<RuleMasks> rule_masks(const ClassicalProgram& p) {
    if (p.vars.size() > kMaxLiteralVars)
        throw BoundError("too many variables for literal masks (" + std::to_string(p.vars.size()) +
                         " > " + std::to_string(kMaxLiteralVars) + ")");
    std::vector<RuleMasks> out;
    out.reserve(p.rules.size());
    for (const ClassicalRule& r : p.rules) {
        RuleMasks m;
        for (Literal l : r.head) {
            if (l.var >= p.vars.size())
                throw Error("literal refers to an undeclared variable");
            m.head |= literal_bit(l);
        }
        for (Literal l : r.pos) {
            if (l.var >= p.vars.size())
                throw Error("literal refers to an undeclared variable");
            m.pos |= literal_bit(l);
        }
        for (Literal l : r.neg) {
            if (l.var >= p.vars.size())
                throw Error("literal refers to an undeclared variable");
            m.neg |= literal_bit(l);
        }
        out.push_back(m);
    }
    return out;
}

/// Every consistent literal set, in increasing mask order.
inline std::vector<LiteralMask> consistent_masks(std::size_t nvars) {
    std::vector<LiteralMask> out;
    const LiteralMask full = total_mask(nvars);
    for (LiteralMask x = 0;; ++x) {
        if (consistent_mask(x))
            out.push_back(x);
        if (x == full)
            break;
    }
    return out;
}

} // namespace detail

/// X is closed under the rules of a negation-free program when every rule
/// whose positive body X contains has a head literal in X.  Defined for any
/// literal set, including the inconsistent total one.
inline bool closed_by_rules(LiteralMask x, const ClassicalProgram& p) {
    if (!p.neg_free())
        throw Error("closedness is only defined for negation-free programs");
    for (const detail::RuleMasks& m : detail::rule_masks(p))
        if ((m.pos & ~x) == 0 && (m.head & x) == 0)
            return false;
    return true;
}

/// An answer set of a negation-free program, or a candidate for one: either
/// a consistent literal set or, exceptionally, the total set.
struct AnswerSetResult {
    LiteralMask literals = 0;
    bool inconsistent_total = false;

    friend bool operator==(const AnswerSetResult&, const AnswerSetResult&) = default;
};

struct AspOptions {
    /// Candidate enumeration costs 3^|V|, so cap the variable count.
    std::size_t max_vars = 10;
};

namespace detail {

inline void check_var_bound(const ClassicalProgram& p, const AspOptions& opts) {
    const std::size_t cap = std::min(opts.max_vars, kMaxLiteralVars);
    if (p.vars.size() > cap)
        throw BoundError("too many variables for exhaustive search (" +
                         std::to_string(p.vars.size()) + " > " + std::to_string(cap) + ")");
}

inline std::vector<LiteralMask> minimal_closed_masks(const std::vector<RuleMasks>& rules,
                                                     std::size_t nvars) {
    auto closed = [&](LiteralMask x) {
        for (const RuleMasks& m : rules)
            if ((m.pos & ~x) == 0 && (m.head & x) == 0)
                return false;
        return true;
    };
    std::vector<LiteralMask> closed_consistent;
    for (LiteralMask x : consistent_masks(nvars))
        if (closed(x))
            closed_consistent.push_back(x);
    std::sort(closed_consistent.begin(), closed_consistent.end(), [](LiteralMask a, LiteralMask b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<LiteralMask> minimal;
    for (LiteralMask x : closed_consistent) {
        bool has_smaller = false;
        for (LiteralMask y : minimal)
            if ((y & ~x) == 0) {
                has_smaller = true;
                break;
            }
        if (!has_smaller)
            minimal.push_back(x);
    }
    std::sort(minimal.begin(), minimal.end());
    if (minimal.empty() && nvars > 0) {
        // No consistent closed set: the total set is the answer set, if it
        // is closed itself (a constraint can rule even it out).
        const LiteralMask total = total_mask(nvars);
        if (closed(total))
            return {total};
    }
    return minimal;
}

} // namespace detail

/// Minimally closed literal sets of a negation-free program: the minimal
/// consistent sets closed under the rules, or the total set when no
/// consistent closed set exists and the total set is closed.  These are the
/// program's answer sets.
inline std::vector<AnswerSetResult> alpha(const ClassicalProgram& p, const AspOptions& opts = {}) {
    if (!p.neg_free())
        throw Error("alpha is only defined for negation-free programs");
    detail::check_var_bound(p, opts);
    const LiteralMask total = total_mask(p.vars.size());
    std::vector<AnswerSetResult> out;
    for (LiteralMask x : detail::minimal_closed_masks(detail::rule_masks(p), p.vars.size()))
        out.push_back(AnswerSetResult{x, p.vars.size() > 0 && x == total});
    return out;
}

/// The reduct: drop rules whose negative body meets X, strip negation from
/// the rest.
inline ClassicalProgram gl_transform(const ClassicalProgram& p, LiteralMask x) {
    std::vector<detail::RuleMasks> masks = detail::rule_masks(p);
    ClassicalProgram out;
    out.vars = p.vars;
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        if (masks[i].neg & x)
            continue;
        out.rules.push_back(ClassicalRule{p.rules[i].head, p.rules[i].pos, {}});
    }
    return out;
}

/// Answer sets of a program with default negation: the literal sets that are
/// answer sets of their own reduct.  Exhaustive over 3^|V| candidates plus
/// the total set; reducts recur across candidates, so their answer sets are
/// cached per surviving-rule pattern.
inline std::vector<AnswerSetResult> answer_sets(const ClassicalProgram& p,
                                                const AspOptions& opts = {}) {
    detail::check_var_bound(p, opts);
    const std::vector<detail::RuleMasks> masks = detail::rule_masks(p);
    const std::size_t nvars = p.vars.size();
    const LiteralMask total = total_mask(nvars);

    std::map<std::vector<bool>, std::vector<LiteralMask>> alpha_cache;
    auto alpha_of_reduct = [&](LiteralMask x) -> const std::vector<LiteralMask>& {
        std::vector<bool> key(masks.size());
        std::vector<detail::RuleMasks> kept;
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (!(masks[i].neg & x)) {
                key[i] = true;
                kept.push_back(detail::RuleMasks{masks[i].head, masks[i].pos, 0});
            }
        auto it = alpha_cache.find(key);
        if (it == alpha_cache.end())
            it = alpha_cache.emplace(std::move(key), detail::minimal_closed_masks(kept, nvars)).first;
        return it->second;
    };

    std::vector<AnswerSetResult> out;
    std::vector<LiteralMask> candidates = detail::consistent_masks(nvars);
    if (nvars > 0)
        candidates.push_back(total);
    for (LiteralMask x : candidates) {
        const std::vector<LiteralMask>& a = alpha_of_reduct(x);
        if (std::binary_search(a.begin(), a.end(), x))
            out.push_back(AnswerSetResult{x, nvars > 0 && x == total});
    }
    return out;
}

/// The domain of partial interpretations of a variable set: one element per
/// consistent literal set, ordered by inclusion.  Carries the translation
/// tables between elements and literal masks.
struct TvDomain {
    std::vector<std::string> vars;
    Domain domain;
    std::vector<LiteralMask> mask_of;  // element -> literal set
    std::vector<ElementId> elem_of;    // literal set -> element (dense, ~0 when inconsistent)

    ElementId element_of_mask(LiteralMask x) const {
        if (x >= elem_of.size() || elem_of[x] == static_cast<ElementId>(-1))
            throw Error("no interpretation element for an inconsistent literal set");
        return elem_of[x];
    }
};

struct TvOptions {
    /// The domain has 3^|V| elements and a bit matrix over their square.
    std::size_t max_vars = 10;
};

/// Builds the interpretation domain for a variable list.  Element names join
/// the literals with '.' ("p.-q"); the empty interpretation is "_bot_".
inline TvDomain tv_domain(std::vector<std::string> vars, const TvOptions& opts = {}) {
    const std::size_t cap = std::min(opts.max_vars, kMaxLiteralVars);
    if (vars.size() > cap)
        throw BoundError("too many variables for an interpretation domain (" +
                         std::to_string(vars.size()) + " > " + std::to_string(cap) + ")");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty())
            throw Error("empty variable name");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw Error("duplicate variable name '" + vars[i] + "'");
    }

    TvDomain tv;
    tv.vars = vars;
    std::vector<LiteralMask> masks = detail::consistent_masks(vars.size());
    const std::size_t n = masks.size();

    std::vector<std::string> names;
    names.reserve(n);
    for (LiteralMask x : masks) {
        if (x == 0) {
            names.emplace_back("_bot_");
            continue;
        }
        std::string name;
        for (std::size_t v = 0; v < vars.size(); ++v)
            for (int s = 0; s < 2; ++s)
                if (x & (LiteralMask{1} << (2 * v + s))) {
                    if (!name.empty())
                        name += '.';
                    if (s == 1)
                        name += '-';
                    name += vars[v];
                }
        names.push_back(std::move(name));
    }

    std::vector<bool> leq(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq[i * n + j] = (masks[i] & ~masks[j]) == 0;
    // Inclusion is a partial order by construction; revalidating is cubic,
    // so only do it while that is cheap.
    tv.domain = Domain::from_relation(std::move(names), std::move(leq), n <= 729);

    tv.mask_of = masks;
    tv.elem_of.assign(std::size_t{1} << (2 * vars.size()), static_cast<ElementId>(-1));
    for (std::size_t i = 0; i < n; ++i)
        tv.elem_of[masks[i]] = static_cast<ElementId>(i);
    return tv;
}

/// Maps a program over an interpretation domain back to classical notation.
/// Shape requirements: each positive body is one element (its literal set
/// becomes the body), and every head or negative-body member is the element
/// of a single literal.
inline ClassicalProgram associate(const TvDomain& tv, const Program& p) {
    ClassicalProgram out;
    out.vars = tv.vars;
    auto to_literal = [&](ElementId e) {
        const LiteralMask m = tv.mask_of[e];
        if (__builtin_popcount(m) != 1)
            throw Error("element '" + tv.domain.name(e) + "' is not a single literal");
        const int bit = __builtin_ctz(m);
        return Literal{static_cast<std::uint32_t>(bit / 2), bit % 2 == 1};
    };
    for (const ExtendedRule& r : p.rules) {
        ClassicalRule cr;
        for (ElementId e : r.head.members)
            cr.head.push_back(to_literal(e));
        if (r.pos_body.members.size() != 1)
            throw Error("positive body must be a single element");
        const LiteralMask pm = tv.mask_of[r.pos_body.members[0]];
        for (std::size_t v = 0; v < tv.vars.size(); ++v)
            for (int s = 0; s < 2; ++s)
                if (pm & (LiteralMask{1} << (2 * v + s)))
                    cr.pos.push_back(Literal{static_cast<std::uint32_t>(v), s == 1});
        for (ElementId e : r.neg_body.members)
            cr.neg.push_back(to_literal(e));
        out.rules.push_back(std::move(cr));
    }
    return out;
}

/// The inverse map: classical rules become rules over the interpretation
/// domain of the program's variables.  Head and negative-body literals map
/// to their singleton elements; the positive body, read as one consistent
/// literal set, maps to a single element (an inconsistent positive body has
/// no element and is an error).  An empty positive body maps to {bottom}.
inline Program associate_inverse(const TvDomain& tv, const ClassicalProgram& p) {
    if (p.vars != tv.vars)
        throw Error("program variables do not match the interpretation domain");
    detail::rule_masks(p); // bounds and declaration checks
    Program out;
    for (const ClassicalRule& r : p.rules) {
        ExtendedRule er;
        ElementSet head;
        for (Literal l : r.head)
            head.push_back(tv.element_of_mask(literal_bit(l)));
        er.head = Clause(std::move(head));
        LiteralMask pm = 0;
        for (Literal l : r.pos)
            pm |= literal_bit(l);
        if (!consistent_mask(pm))
            throw Error("inconsistent positive body has no interpretation element");
        er.pos_body = Clause({tv.element_of_mask(pm)});
        ElementSet neg;
        for (Literal l : r.neg)
            neg.push_back(tv.element_of_mask(literal_bit(l)));
        er.neg_body = Clause(std::move(neg));
        out.rules.push_back(std::move(er));
    }
    return out;
}

/// Outcome of one differential check; `assertions` holds one line per
/// sub-claim, `counterexample` the first violation found.
struct CorrespondenceReport {
    bool ok = true;
    std::vector<std::string> assertions;
    std::string counterexample;
};

namespace detail {

inline void record(CorrespondenceReport& rep, const std::string& claim, bool pass,
                   const std::string& detail_on_fail) {
    rep.assertions.push_back(std::string(pass ? "pass" : "FAIL") + ": " + claim);
    if (!pass && rep.ok) {
        rep.ok = false;
        rep.counterexample = detail_on_fail;
    }
}

} // namespace detail

/// Checks, for one program, that minimal answer models over the
/// interpretation domain coincide with classical answer sets: consistent
/// answer sets are exactly the literal sets of minimal answer models, and
/// the inconsistent total answer set can only occur alone, with no minimal
/// answer model on the domain side.  `tv` may be shared across calls; it
/// must have been built for p.vars.
inline CorrespondenceReport verify_answer_set_correspondence(const ClassicalProgram& p,
                                                      const TvDomain* tv = nullptr,
                                                      const AspOptions& opts = {}) {
    detail::check_var_bound(p, opts);
    TvDomain local;
    if (!tv) {
        local = tv_domain(p.vars, TvOptions{opts.max_vars});
        tv = &local;
    }
    const Program dp = associate_inverse(*tv, p);
    const ElementSet min_answer = enumerate_min_answer_models(tv->domain, dp);
    const std::vector<AnswerSetResult> sets = answer_sets(p, opts);

    std::vector<LiteralMask> proper;
    bool has_total = false;
    for (const AnswerSetResult& s : sets) {
        if (s.inconsistent_total)
            has_total = true;
        else
            proper.push_back(s.literals);
    }

    CorrespondenceReport rep;

    bool pass = true;
    std::string why;
    for (ElementId w : min_answer) {
        const ClassicalProgram red = gl_transform(p, tv->mask_of[w]);
        if (!closed_by_rules(tv->mask_of[w], red)) {
            pass = false;
            why = "minimal answer model '" + tv->domain.name(w) + "' is not closed under its reduct";
            break;
        }
    }
    detail::record(rep, "minimal answer models are closed under their reduct's rules", pass, why);

    pass = true;
    why.clear();
    for (LiteralMask x : proper)
        if (!is_answer_model(tv->domain, tv->element_of_mask(x), dp)) {
            pass = false;
            why = "answer set " + literal_set_string(p.vars, x) +
                  " does not join to an answer model";
            break;
        }
    detail::record(rep, "consistent answer sets join to answer models", pass, why);

    pass = true;
    why.clear();
    for (ElementId w : min_answer)
        if (!std::binary_search(proper.begin(), proper.end(), tv->mask_of[w])) {
            pass = false;
            why = "minimal answer model '" + tv->domain.name(w) + "' has literal set " +
                  literal_set_string(p.vars, tv->mask_of[w]) + " which is not an answer set";
            break;
        }
    detail::record(rep, "minimal answer models map to answer sets", pass, why);

    pass = true;
    why.clear();
    for (LiteralMask x : proper)
        if (!domlog::detail::contains(min_answer, tv->element_of_mask(x))) {
            pass = false;
            why = "answer set " + literal_set_string(p.vars, x) +
                  " does not join to a minimal answer model";
            break;
        }
    detail::record(rep, "consistent answer sets map to minimal answer models", pass, why);

    pass = !has_total || (proper.empty() && min_answer.empty());
    why = pass ? ""
               : "the inconsistent total answer set coexists with other answers";
    detail::record(rep, "the inconsistent total answer set occurs alone, with no minimal answer model",
                   pass, why);

    return rep;
}

/// Checks, for one negation-free program, that minimal models over the
/// interpretation domain coincide with minimally closed literal sets, and
/// that a minimally closed total set forces the domain program to have no
/// models at all.
inline CorrespondenceReport verify_minimal_model_correspondence(const ClassicalProgram& p,
                                                         const TvDomain* tv = nullptr,
                                                         const AspOptions& opts = {}) {
    if (!p.neg_free())
        throw Error("the minimal-model correspondence concerns negation-free programs");
    detail::check_var_bound(p, opts);
    TvDomain local;
    if (!tv) {
        local = tv_domain(p.vars, TvOptions{opts.max_vars});
        tv = &local;
    }
    const Program dp = associate_inverse(*tv, p);
    const ElementSet min_models = minimal_models(tv->domain, dp);
    const std::vector<AnswerSetResult> closed = alpha(p, opts);

    std::vector<LiteralMask> proper;
    bool has_total = false;
    for (const AnswerSetResult& s : closed) {
        if (s.inconsistent_total)
            has_total = true;
        else
            proper.push_back(s.literals);
    }

    CorrespondenceReport rep;

    bool pass = true;
    std::string why;
    for (ElementId w : min_models)
        if (!std::binary_search(proper.begin(), proper.end(), tv->mask_of[w])) {
            pass = false;
            why = "minimal model '" + tv->domain.name(w) + "' has literal set " +
                  literal_set_string(p.vars, tv->mask_of[w]) + " which is not minimally closed";
            break;
        }
    detail::record(rep, "minimal models map to minimally closed sets", pass, why);

    pass = true;
    why.clear();
    for (LiteralMask x : proper)
        if (!domlog::detail::contains(min_models, tv->element_of_mask(x))) {
            pass = false;
            why = "minimally closed set " + literal_set_string(p.vars, x) +
                  " does not join to a minimal model";
            break;
        }
    detail::record(rep, "minimally closed sets map to minimal models", pass, why);

    pass = !has_total || (proper.empty() && program_models(tv->domain, dp).empty());
    why = pass ? "" : "the total set is minimally closed but the program still has models";
    detail::record(rep, "a minimally closed total set means the program has no models", pass, why);

    return rep;
}

struct RandomProgramOptions {
    std::size_t vars = 5;
    std::size_t min_rules = 1;
    std::size_t max_rules = 8;
    std::size_t max_head = 2;
    std::size_t max_pos = 2;
    std::size_t max_neg = 2;
    bool allow_neg = true;
};

/// Seeded random program over a fixed variable pool.  Heads may be empty
/// (constraints) and disjunctive; positive bodies are kept consistent so the
/// translation to the interpretation domain is total.
inline ClassicalProgram random_classical_program(std::mt19937& rng,
                                                 const RandomProgramOptions& opts = {}) {
    auto pool_name = [](std::size_t i) -> std::string {
        static const char* small[] = {"p", "q", "r", "s", "t"};
        return i < 5 ? small[i] : "x" + std::to_string(i);
    };
    ClassicalProgram out;
    for (std::size_t i = 0; i < opts.vars; ++i)
        out.vars.push_back(pool_name(i));

    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    const std::size_t span = opts.max_rules >= opts.min_rules ? opts.max_rules - opts.min_rules + 1 : 1;
    const std::size_t nrules = opts.min_rules + pick(span);

    auto random_literals = [&](std::size_t max_count, bool consistent) {
        std::vector<Literal> out_lits;
        if (opts.vars == 0 || max_count == 0)
            return out_lits;
        std::size_t want = pick(max_count + 1);
        if (consistent)
            want = std::min(want, opts.vars);
        else
            want = std::min(want, 2 * opts.vars);
        while (out_lits.size() < want) {
            Literal l{static_cast<std::uint32_t>(pick(opts.vars)), pick(2) == 1};
            bool dup = false;
            for (Literal e : out_lits)
                if (consistent ? e.var == l.var : e == l)
                    dup = true;
            if (!dup)
                out_lits.push_back(l);
        }
        return out_lits;
    };

    for (std::size_t i = 0; i < nrules; ++i) {
        ClassicalRule r;
        r.head = random_literals(opts.max_head, false);
        r.pos = random_literals(opts.max_pos, true);
        if (opts.allow_neg)
            r.neg = random_literals(opts.max_neg, false);
        out.rules.push_back(std::move(r));
    }
    return out;
}

} // namespace domlog::asp
