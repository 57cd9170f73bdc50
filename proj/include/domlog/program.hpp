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
#include <utility>
#include <vector>

#include "domlog/logic.hpp"

namespace domlog {

/// Disjunctive rule with default negation:
///
///     head <- pos_body, ~neg_body
///
/// Head and bodies are clauses.  A rule with empty neg_body is a plain
/// rule; a program of plain rules is just notation for a theory of
/// conditionals and has ordinary models.
struct ExtendedRule {
    Clause head;
    Clause pos_body;
    Clause neg_body;

    bool plain() const { return neg_body.empty(); }

    friend bool operator==(const ExtendedRule&, const ExtendedRule&) = default;
};

struct Program {
    std::vector<ExtendedRule> rules;

    bool neg_free() const {
        for (const ExtendedRule& r : rules)
            if (!r.plain())
                return false;
        return true;
    }

    friend bool operator==(const Program&, const Program&) = default;
};

/// Classical satisfaction for negation-free programs: w is a model when every
/// rule whose positive body w satisfies has its head satisfied too.
/// Throws Error if some rule carries default negation.
inline bool model_of_program(const Domain& d, ElementId w, const Program& p) {
    if (!p.neg_free())
        throw Error("models are only defined for negation-free programs");
    for (const ExtendedRule& r : p.rules) {
        d.check_elements(r.head.members);
        d.check_elements(r.pos_body.members);
        if (satisfies(d, w, r.pos_body) && !satisfies(d, w, r.head))
            return false;
    }
    return true;
}

inline ElementSet program_models(const Domain& d, const Program& p) {
    ElementSet out;
    for (std::size_t w = 0; w < d.size(); ++w)
        if (model_of_program(d, static_cast<ElementId>(w), p))
            out.push_back(static_cast<ElementId>(w));
    return out;
}

inline ElementSet minimal_models(const Domain& d, const Program& p) {
    return d.minimal_elements(program_models(d, p));
}

/// Deductive closure of a negation-free program, as a closed theory: the
/// clauses true in every model.
inline ClosedTheory cons_program(const Domain& d, const Program& p) {
    // A clause holds in every model iff it holds in every world above a
    // model (clause satisfaction is monotone), and the upward closure is the
    // exact satisfier set of the resulting theory.
    return ClosedTheory::from_model_set(d, d.upward_closure(program_models(d, p)));
}

/// Reduct of p at w: drop every rule whose negative body w satisfies, strip
/// the negative body from the rest.  Always negation-free.
inline Program reduct(const Domain& d, const Program& p, ElementId w) {
    Program out;
    for (const ExtendedRule& r : p.rules) {
        d.check_elements(r.neg_body.members);
        if (satisfies(d, w, r.neg_body))
            continue;
        out.rules.push_back(ExtendedRule{r.head, r.pos_body, Clause{}});
    }
    return out;
}

/// Verdict for a single world, with enough detail to explain it: the reduct
/// size, whether the world is an answer model, whether it is a minimal one,
/// and the least witness v below w that models the reduct (when one exists).
struct AnswerModelReport {
    ElementId element = 0;
    std::size_t reduct_size = 0;
    bool answer = false;
    bool min_answer = false;
    std::optional<ElementId> witness;
};

/// w is an answer model of p when some v below w is a model of the reduct
/// p/w.  The returned witness is the least-index such v.
inline AnswerModelReport classify_answer_model(const Domain& d, ElementId w, const Program& p) {
    AnswerModelReport rep;
    rep.element = w;
    Program red = reduct(d, p, w);
    rep.reduct_size = red.rules.size();
    for (std::size_t v = 0; v < d.size(); ++v)
        if (d.leq(static_cast<ElementId>(v), w) &&
            model_of_program(d, static_cast<ElementId>(v), red)) {
            rep.answer = true;
            rep.witness = static_cast<ElementId>(v);
            break;
        }
    if (rep.answer) {
        ElementSet red_models = program_models(d, red);
        rep.min_answer = detail::contains(d.minimal_elements(red_models), w);
    }
    return rep;
}

inline bool is_answer_model(const Domain& d, ElementId w, const Program& p) {
    return classify_answer_model(d, w, p).answer;
}

/// w is a minimal answer model when it is a minimal model of its own reduct.
/// Minimal answer models are answer models (they witness themselves).
inline bool is_min_answer_model(const Domain& d, ElementId w, const Program& p) {
    return classify_answer_model(d, w, p).min_answer;
}

namespace detail {

/// Reducts coincide for many worlds; cache per surviving-rule pattern.
class ReductCache {
public:
    explicit ReductCache(const Domain& d, const Program& p) : d_(d), p_(p) {}

    /// Minimal models of the reduct at w.  Many worlds share a reduct (the
    /// key is the set of surviving rules), and every question asked of a
    /// reduct's model set is answered by its minimal models alone: some
    /// model lies below w iff some minimal model does, and w is minimal
    /// among the models iff it is itself one of the minimal models.
    const ElementSet& reduct_min_models(ElementId w) {
        std::vector<bool> key(p_.rules.size());
        Program red;
        for (std::size_t i = 0; i < p_.rules.size(); ++i) {
            if (satisfies(d_, w, p_.rules[i].neg_body))
                continue;
            key[i] = true;
            red.rules.push_back(ExtendedRule{p_.rules[i].head, p_.rules[i].pos_body, Clause{}});
        }
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(std::move(key),
                                d_.minimal_elements(program_models(d_, red)))
                     .first;
        return it->second;
    }

private:
    const Domain& d_;
    const Program& p_;
    std::map<std::vector<bool>, ElementSet> cache_;
};

} // namespace detail

inline ElementSet enumerate_answer_models(const Domain& d, const Program& p) {
    detail::ReductCache cache(d, p);
    ElementSet out;
    for (std::size_t w = 0; w < d.size(); ++w) {
        const ElementSet& mins = cache.reduct_min_models(static_cast<ElementId>(w));
        for (ElementId v : mins)
            if (d.leq(v, static_cast<ElementId>(w))) {
                out.push_back(static_cast<ElementId>(w));
                break;
            }
    }
    return out;
}

inline ElementSet enumerate_min_answer_models(const Domain& d, const Program& p) {
    detail::ReductCache cache(d, p);
    ElementSet out;
    for (std::size_t w = 0; w < d.size(); ++w) {
        const ElementSet& mins = cache.reduct_min_models(static_cast<ElementId>(w));
        if (detail::contains(mins, static_cast<ElementId>(w)))
            out.push_back(static_cast<ElementId>(w));
    }
    return out;
}

} // namespace domlog
