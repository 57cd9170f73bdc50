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

// End-to-end acceptance gate.  Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.  All checks are
// exact (no tolerances) and deterministic (fixed seeds).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "domlog/domlog.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace domlog;

namespace {

int g_failures = 0;

class Criterion {
public:
    explicit Criterion(std::string name, double budget_seconds = 0.0)
        : name_(std::move(name)),
          budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string& detail) {
        if (!ok && why_.empty())
            why_ = detail;
        ok_ = ok_ && ok;
    }

    void finish() {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (budget_ > 0.0 && elapsed > budget_) {
            ok_ = false;
            if (why_.empty()) {
                std::ostringstream os;
                os << "exceeded the " << budget_ << " s budget (" << elapsed << " s)";
                why_ = os.str();
            }
        }
        std::printf("%s: %s", ok_ ? "PASS" : "FAIL", name_.c_str());
        if (budget_ > 0.0)
            std::printf(" [%.2f s]", elapsed);
        if (!ok_)
            std::printf(" — %s", why_.c_str());
        std::printf("\n");
        std::fflush(stdout);
        if (!ok_)
            ++g_failures;
    }

private:
    std::string name_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::string why_;
};

struct Menu {
    fca::FormalContext ctx;
    fca::DerivedDomain derived;
};

Menu load_menu() {
    Menu m{io::parse_cxt(fixtures::read_data("menu.cxt")), {}};
    m.derived = fca::to_domain(m.ctx);
    return m;
}

std::string set_names(const Domain& d, const ElementSet& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + d.name(xs[i]);
    return out + "}";
}

// ---------------------------------------------------------------------- 1

void criterion_menu_program() {
    Criterion c("1. menu scenario: three-rule program over the context-derived domain", 1.0);
    Menu m = load_menu();
    const Domain& d = m.derived.domain;
    Program p = io::parse_program(fixtures::read_data("menu.prog"),
                                  io::derived_resolver(m.ctx, m.derived));

    const ElementId m3 = m.derived.object_element[2];
    const ElementId m4 = m.derived.object_element[3];
    const ElementId m7 = m.derived.object_element[6];

    ElementSet mins = enumerate_min_answer_models(d, p);
    c.check(mins == ElementSet{m3, m4},
            "min answer models are " + set_names(d, mins) + ", expected {3, 4}");

    AnswerModelReport r7 = classify_answer_model(d, m7, p);
    c.check(r7.answer, "element 7 should be an answer model");
    c.check(!r7.min_answer, "element 7 should not be a minimal answer model");

    c.check(classify_answer_model(d, m3, p).reduct_size == 2, "the reduct at 3 should keep 2 rules");
    c.check(classify_answer_model(d, m4, p).reduct_size == 3, "the reduct at 4 should keep 3 rules");
    c.finish();
}

// ---------------------------------------------------------------------- 2

void criterion_menu_entailments() {
    Criterion c("2. menu entailments and the starter+meat+coffee concept", 1.0);
    Menu m = load_menu();
    const Domain& d = m.derived.domain;
    auto attr = [&](std::size_t i) { return m.derived.attribute_element[i]; };
    // Attribute order in the fixture: sd st f m rw ww w d c e.

    Theory salad_fish = {Clause{attr(0)}, Clause{attr(2)}};
    c.check(entails(d, salad_fish, Clause{attr(1), attr(7)}),
            "{{sd},{f}} should entail {st, d}");

    Theory mixed = {Clause{attr(0), attr(1)}, Clause{attr(2), attr(7)}, Clause{attr(6)}};
    c.check(entails(d, mixed, Clause{attr(0)}), "the mixed theory should entail {sd}");
    c.check(entails(d, mixed, Clause{attr(1)}), "the mixed theory should entail {st}");

    ElementSet models = model_set(d, salad_fish);
    ElementSet expected{m.derived.object_element[2], m.derived.object_element[4]};
    std::sort(expected.begin(), expected.end());
    c.check(models == expected,
            "models of {{sd},{f}} are " + set_names(d, models) + ", expected {3, 5}");

    bool found = false;
    for (const fca::Concept& con : fca::all_concepts(m.ctx))
        found = found || (con.intent == fca::IndexSet{1, 3, 8} &&
                          con.extent == fca::IndexSet{3, 5, 6});
    c.check(found, "concept ({4,6,7}, {st,m,c}) missing from the lattice");
    c.finish();
}

// ---------------------------------------------------------------------- 3

void criterion_closure_correspondence() {
    Criterion c("3. attribute closure equals clause entailment (exhaustive + random)", 10.0);
    Menu m = load_menu();
    fca::ClosureCheckReport rep = fca::verify_closure_correspondence(m.ctx);
    c.check(rep.ok && rep.exhaustive && rep.checked == 1024,
            "menu context: " + rep.counterexample);

    std::mt19937 rng(1947);
    for (int round = 0; round < 100; ++round) {
        fca::FormalContext ctx = gen::random_context(rng, 6, 6);
        fca::ClosureCheckReport r = fca::verify_closure_correspondence(ctx);
        c.check(r.ok && r.exhaustive, "random 6x6 context (round " + std::to_string(round) +
                                          "): " + r.counterexample);
        if (!r.ok)
            break;
    }
    c.finish();
}

// ---------------------------------------------------------------------- 4

void criterion_answer_set_bridge() {
    Criterion c("4. stable sets match minimal stable worlds on 1000 random programs", 60.0);
    std::mt19937 rng(20260815);
    asp::RandomProgramOptions opts;
    opts.vars = 5;
    opts.max_rules = 8;
    opts.allow_neg = true;
    asp::TvDomain tv = asp::tv_domain({"p", "q", "r", "s", "t"});
    for (int round = 0; round < 1000; ++round) {
        asp::ClassicalProgram p = asp::random_classical_program(rng, opts);
        asp::CorrespondenceReport rep = asp::verify_answer_set_correspondence(p, &tv);
        if (!rep.ok) {
            c.check(false, "round " + std::to_string(round) + ": " + rep.counterexample +
                               "\nprogram:\n" + io::emit_classical(p));
            break;
        }
    }

    // Fixed programs covering the corner cases: contradictions (the
    // inconsistent total set must occur alone), constraints, and choices.
    const char* pinned[] = {
        "p.\n-p.\n",
        "p.\n-p :- p.\n",
        "p :- not q.\nq :- not p.\n",
        "p, q.\n:- p.\n",
        ":-.\n",
        "p :- not p.\n",
    };
    for (const char* text : pinned) {
        asp::CorrespondenceReport rep = asp::verify_answer_set_correspondence(io::parse_classical(text));
        c.check(rep.ok, std::string("pinned program failed: ") + text + rep.counterexample);
    }
    c.finish();
}

// ---------------------------------------------------------------------- 5

void criterion_minimal_model_bridge() {
    Criterion c("5. minimally closed sets match minimal models on 1000 random programs", 60.0);
    std::mt19937 rng(5081526);
    asp::RandomProgramOptions opts;
    opts.vars = 5;
    opts.max_rules = 8;
    opts.allow_neg = false;
    asp::TvDomain tv = asp::tv_domain({"p", "q", "r", "s", "t"});
    for (int round = 0; round < 1000; ++round) {
        asp::ClassicalProgram p = asp::random_classical_program(rng, opts);
        asp::CorrespondenceReport rep = asp::verify_minimal_model_correspondence(p, &tv);
        if (!rep.ok) {
            c.check(false, "round " + std::to_string(round) + ": " + rep.counterexample +
                               "\nprogram:\n" + io::emit_classical(p));
            break;
        }
    }
    c.finish();
}

// ---------------------------------------------------------------------- 6

void criterion_fixpoint_soundness() {
    Criterion c("6. saturation fixpoint equals the model-side closure on 200 instances", 120.0);
    std::mt19937 rng(60615);
    for (int round = 0; round < 200; ++round) {
        Domain d = gen::random_domain(rng, 1 + rng() % 7); // 2..8 elements
        Program p = gen::random_program(rng, d, 6, /*allow_neg=*/false);
        FixpointResult fp = tp_fixpoint(d, p);
        if (!(fp.theory == cons_extensional(d, p))) {
            c.check(false, "round " + std::to_string(round) + ": fixpoint and closure disagree");
            break;
        }
    }
    c.finish();
}

// ---------------------------------------------------------------------- 7

void criterion_closed_theory_ideals() {
    Criterion c("7. closed theories are refinement ideals anti-isomorphic to model sets");
    std::mt19937 rng(70707);
    for (int round = 0; round < 50; ++round) {
        Domain d = gen::random_domain(rng, 1 + rng() % 5); // 2..6 elements
        Theory t = gen::random_theory(rng, d, 4);
        ClosedTheory ct = ClosedTheory::close(d, t);

        // Enumerate every clause over D once.
        std::vector<Clause> all;
        for (std::uint32_t mask = 0; mask < (1u << d.size()); ++mask) {
            ElementSet ms;
            for (ElementId e = 0; e < d.size(); ++e)
                if (mask & (1u << e))
                    ms.push_back(e);
            all.push_back(Clause(std::move(ms)));
        }

        // Downward closed under refinement.
        for (const Clause& y : all) {
            if (!ct.contains(d, y))
                continue;
            for (const Clause& x : all)
                if (smyth_leq(d, x, y) && !ct.contains(d, x)) {
                    c.check(false, "member " + io::clause_to_string(d, y) +
                                       " has a refinement-below clause outside the theory");
                    goto next_round;
                }
        }

        // Directed: two members combine through minimal upper bounds.
        for (const Clause& x : all) {
            if (!ct.contains(d, x))
                continue;
            for (const Clause& y : all) {
                if (!ct.contains(d, y))
                    continue;
                ElementSet zs;
                for (ElementId a : x.members)
                    for (ElementId b : y.members)
                        for (ElementId u : d.mub({a, b}))
                            zs.push_back(u);
                Clause z(std::move(zs));
                if (!(ct.contains(d, z) && smyth_leq(d, x, z) && smyth_leq(d, y, z))) {
                    c.check(false, "no combined upper clause for " + io::clause_to_string(d, x) +
                                       " and " + io::clause_to_string(d, y));
                    goto next_round;
                }
            }
        }

        // The model-set correspondence reverses inclusion and round-trips.
        {
            Theory t2 = gen::random_theory(rng, d, 4);
            ClosedTheory ct2 = ClosedTheory::close(d, t2);
            bool sub = true, sup = true;
            for (const Clause& x : all) {
                sub = sub && (!ct.contains(d, x) || ct2.contains(d, x));
                sup = sup && (!ct2.contains(d, x) || ct.contains(d, x));
            }
            const ElementSet& m1 = ct.model_elements();
            const ElementSet& m2 = ct2.model_elements();
            const bool m_sub = std::includes(m1.begin(), m1.end(), m2.begin(), m2.end());
            const bool m_sup = std::includes(m2.begin(), m2.end(), m1.begin(), m1.end());
            c.check(sub == m_sub && sup == m_sup,
                    "theory inclusion does not mirror reversed model-set inclusion");
            c.check(ClosedTheory::from_model_set(d, m1) == ct,
                    "closed theory does not round-trip through its model set");
            c.check(d.is_upward_closed(m1), "model set of a closed theory is not upward closed");
        }
    next_round:;
    }
    c.finish();
}

// ---------------------------------------------------------------------- 8

void criterion_structural_properties() {
    Criterion c("8. structural properties: monotone steps, stable-world nesting, antichains");
    std::mt19937 rng(80833);

    // The one-step operator is monotone on extensional theories.
    for (int round = 0; round < 30; ++round) {
        Domain d = gen::random_domain(rng, 1 + rng() % 4); // 2..5 elements
        Program p = gen::random_program(rng, d, 3, /*allow_neg=*/false);
        std::vector<ClauseMask> smaller, larger;
        const std::uint32_t full = (1u << d.size()) - 1;
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            const bool keep = rng() % 4 == 0;
            if (keep)
                smaller.push_back(mask);
            if (keep || rng() % 4 == 0)
                larger.push_back(mask);
        }
        ExtensionalTheory lo = close_extensional(d, smaller);
        ExtensionalTheory hi = close_extensional(d, larger);
        ExtensionalTheory step_lo = tp_step(d, p, lo);
        ExtensionalTheory step_hi = tp_step(d, p, hi);
        for (ClauseMask x : step_lo.members())
            if (!step_hi.contains(x)) {
                c.check(false, "one-step operator is not monotone");
                break;
            }
    }

    // Minimal stable worlds are stable worlds.
    for (int round = 0; round < 60; ++round) {
        Domain d = gen::random_domain(rng, 1 + rng() % 5);
        Program p = gen::random_program(rng, d, 4, /*allow_neg=*/true);
        ElementSet answers = enumerate_answer_models(d, p);
        for (ElementId w : enumerate_min_answer_models(d, p))
            if (!std::binary_search(answers.begin(), answers.end(), w)) {
                c.check(false, "a minimal stable world is not a stable world");
                break;
            }
    }

    // Model sets are upward closed.
    for (int round = 0; round < 60; ++round) {
        Domain d = gen::random_domain(rng, 1 + rng() % 5);
        Theory t = gen::random_theory(rng, d, 4);
        if (!d.is_upward_closed(model_set(d, t))) {
            c.check(false, "a theory's model set is not upward closed");
            break;
        }
    }

    // Minimal upper bounds form an antichain dominated by every upper bound.
    for (int round = 0; round < 60; ++round) {
        Domain d = gen::random_domain(rng, 1 + rng() % 6);
        ElementSet query;
        for (std::size_t k = 0; k < rng() % 3; ++k)
            query.push_back(static_cast<ElementId>(rng() % d.size()));
        ElementSet mubs = d.mub(query);
        for (ElementId u : mubs)
            for (ElementId v : mubs)
                if (u != v && d.leq(u, v))
                    c.check(false, "mub result is not an antichain");
        for (ElementId u = 0; u < d.size(); ++u) {
            bool ub = true;
            for (ElementId q : query)
                ub = ub && d.leq(q, u);
            if (!ub)
                continue;
            bool dominated = false;
            for (ElementId v : mubs)
                dominated = dominated || d.leq(v, u);
            if (!dominated)
                c.check(false, "an upper bound dominates no minimal upper bound");
        }
    }
    c.finish();
}

// ---------------------------------------------------------------------- 9

void criterion_format_fidelity() {
    Criterion c("9. context files round-trip; the menu program parses to its three rules");
    for (int i = 0; i < 20; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "cxt/rt_%02d.cxt", i);
        fca::FormalContext ctx = io::parse_cxt(fixtures::read_data(name));
        if (!(io::parse_cxt(io::emit_cxt(ctx)) == ctx)) {
            c.check(false, std::string(name) + " does not round-trip");
            break;
        }
    }

    Menu m = load_menu();
    Program p = io::parse_program(fixtures::read_data("menu.prog"),
                                  io::derived_resolver(m.ctx, m.derived));
    c.check(p.rules.size() == 3, "the menu program should have exactly 3 rules");
    if (p.rules.size() == 3) {
        const Domain& d = m.derived.domain;
        auto obj = [&](std::size_t g) { return m.derived.object_element[g]; };
        c.check(p.rules[0].head == Clause{m.derived.attribute_element[7]} &&
                    p.rules[0].pos_body == Clause{d.bottom()} && p.rules[0].neg_body.empty(),
                "rule 1 should be the dessert fact");
        c.check(p.rules[1].head == Clause(ElementSet{obj(1), obj(2), obj(3)}) &&
                    p.rules[1].pos_body == Clause{d.bottom()} && p.rules[1].neg_body.empty(),
                "rule 2 should offer meals 2, 3 and 4");
        c.check(p.rules[2].head == Clause{m.derived.attribute_element[4]} &&
                    p.rules[2].pos_body == Clause{d.bottom()} &&
                    p.rules[2].neg_body == Clause{m.derived.attribute_element[5]},
                "rule 3 should be the red-wine default blocked by white wine");
    }
    c.finish();
}

} // namespace

int main() {
    criterion_menu_program();
    criterion_menu_entailments();
    criterion_closure_correspondence();
    criterion_answer_set_bridge();
    criterion_minimal_model_bridge();
    criterion_fixpoint_soundness();
    criterion_closed_theory_ideals();
    criterion_structural_properties();
    criterion_format_fidelity();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
