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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "domlog/domlog.hpp"
#include "support/generators.hpp"

using namespace domlog;

namespace {

Domain diamond() {
    return Domain::build({"bot", "a", "b", "top"},
                         {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

} // namespace

TEST_CASE("a world satisfies a clause through any member below it") {
    Domain d = diamond();
    const ElementId bot = *d.find("bot");
    const ElementId a = *d.find("a");
    const ElementId b = *d.find("b");
    const ElementId top = *d.find("top");

    REQUIRE(satisfies(d, a, Clause{a}));
    REQUIRE(satisfies(d, top, Clause{a}));
    REQUIRE_FALSE(satisfies(d, b, Clause{a}));
    REQUIRE(satisfies(d, b, Clause{a, b}));
    // Everything satisfies a clause containing bottom; nothing the empty one.
    REQUIRE(satisfies(d, bot, Clause{bot}));
    REQUIRE_FALSE(satisfies(d, top, Clause{}));
}

TEST_CASE("clause normalization sorts and deduplicates") {
    Clause x(ElementSet{3, 1, 3, 0});
    REQUIRE(x.members == ElementSet{0, 1, 3});
    REQUIRE(Clause{} == Clause(ElementSet{}));
    REQUIRE(Clause{2, 1} == Clause{1, 2, 2});
}

TEST_CASE("satisfaction is monotone along the order") {
    std::mt19937 rng(9117);
    for (int round = 0; round < 50; ++round) {
        Domain d = gen::random_domain(rng, 2 + rng() % 6);
        Clause x = gen::random_clause(rng, d);
        for (ElementId w = 0; w < d.size(); ++w)
            for (ElementId v = 0; v < d.size(); ++v)
                if (d.leq(w, v) && satisfies(d, w, x))
                    REQUIRE(satisfies(d, v, x));
    }
}

TEST_CASE("model sets are upward closed") {
    std::mt19937 rng(40501);
    for (int round = 0; round < 50; ++round) {
        Domain d = gen::random_domain(rng, 2 + rng() % 6);
        Theory t = gen::random_theory(rng, d);
        ElementSet models = model_set(d, t);
        REQUIRE(d.is_upward_closed(models));
        for (ElementId w : models)
            REQUIRE(models_theory(d, w, t));
    }
}

TEST_CASE("the empty theory has every world as model") {
    Domain d = diamond();
    REQUIRE(model_set(d, {}) == d.all_elements());
}

TEST_CASE("entailment on minimal models agrees with the full scan") {
    std::mt19937 rng(77210);
    for (int round = 0; round < 120; ++round) {
        Domain d = gen::random_domain(rng, 2 + rng() % 6);
        Theory t = gen::random_theory(rng, d);
        Clause x = rng() % 6 == 0 ? Clause{} : gen::random_clause(rng, d);
        REQUIRE(entails(d, t, x) == entails_full_scan(d, t, x));
    }
}

TEST_CASE("entailment basics on the diamond") {
    Domain d = diamond();
    const ElementId bot = *d.find("bot");
    const ElementId a = *d.find("a");
    const ElementId b = *d.find("b");
    const ElementId top = *d.find("top");

    REQUIRE(entails(d, {}, Clause{bot}));
    REQUIRE_FALSE(entails(d, {}, Clause{}));
    REQUIRE(entails(d, {Clause{a}}, Clause{a, b}));
    REQUIRE_FALSE(entails(d, {Clause{a, b}}, Clause{a}));
    REQUIRE(entails(d, {Clause{a}, Clause{b}}, Clause{top}));
    // Members of the theory are always entailed.
    REQUIRE(entails(d, {Clause{a, b}}, Clause{a, b}));
    REQUIRE(entails(d, {Clause{a}}, Clause{}) == false);
    // Clauses over unknown elements are rejected rather than guessed at.
    REQUIRE_THROWS_AS(entails(d, {}, Clause{9}), Error);
}

TEST_CASE("an unsatisfiable theory entails everything") {
    Domain d = Domain::build({"a", "b"}, {}, /*auto_bottom=*/true);
    Theory t = {Clause{*d.find("a")}, Clause{*d.find("b")}};
    REQUIRE(model_set(d, t).empty());
    REQUIRE(entails(d, t, Clause{}));
    REQUIRE(entails(d, t, Clause{*d.find("a")}));
}

TEST_CASE("refinement between clauses requires a witness under every member") {
    Domain d = diamond();
    const ElementId bot = *d.find("bot");
    const ElementId a = *d.find("a");
    const ElementId b = *d.find("b");
    const ElementId top = *d.find("top");

    REQUIRE(smyth_leq(d, Clause{bot}, Clause{a}));
    REQUIRE(smyth_leq(d, Clause{a}, Clause{top}));
    REQUIRE_FALSE(smyth_leq(d, Clause{a}, Clause{b}));
    // A member shared verbatim is its own witness.
    REQUIRE(smyth_leq(d, Clause{a, b}, Clause{a}));
    REQUIRE_FALSE(smyth_leq(d, Clause{a}, Clause{a, b}));
    // The empty clause refines everything; only it refines the empty clause.
    REQUIRE(smyth_leq(d, Clause{}, Clause{}) );
    REQUIRE(smyth_leq(d, Clause{a}, Clause{}));
    REQUIRE_FALSE(smyth_leq(d, Clause{}, Clause{a}));
}

TEST_CASE("clause refinement implies semantic strengthening") {
    std::mt19937 rng(36607);
    for (int round = 0; round < 80; ++round) {
        Domain d = gen::random_domain(rng, 2 + rng() % 5);
        Clause x = gen::random_clause(rng, d);
        Clause y = gen::random_clause(rng, d);
        if (!smyth_leq(d, x, y))
            continue;
        for (ElementId w = 0; w < d.size(); ++w)
            if (satisfies(d, w, y))
                REQUIRE(satisfies(d, w, x));
    }
}

TEST_CASE("canonical clauses keep the same satisfiers with minimal members") {
    std::mt19937 rng(52009);
    for (int round = 0; round < 60; ++round) {
        Domain d = gen::random_domain(rng, 2 + rng() % 6);
        Clause x = gen::random_clause(rng, d);
        Clause c = canonical_clause(d, x);
        for (ElementId w = 0; w < d.size(); ++w)
            REQUIRE(satisfies(d, w, x) == satisfies(d, w, c));
        for (ElementId u : c.members)
            for (ElementId v : c.members)
                if (u != v)
                    REQUIRE_FALSE(d.leq(u, v));
        REQUIRE(canonical_clause(d, c) == c);
    }
}

TEST_CASE("closing a theory decides membership by entailment") {
    std::mt19937 rng(61109);
    for (int round = 0; round < 40; ++round) {
        Domain d = gen::random_domain(rng, 2 + rng() % 5);
        Theory t = gen::random_theory(rng, d);
        ClosedTheory ct = ClosedTheory::close(d, t);
        REQUIRE(ct.model_elements() == model_set(d, t));
        for (int k = 0; k < 10; ++k) {
            Clause x = gen::random_clause(rng, d);
            REQUIRE(ct.contains(d, x) == entails(d, t, x));
        }
        // Adding an entailed clause does not change the closure.
        Clause extra = gen::random_clause(rng, d);
        if (entails(d, t, extra)) {
            Theory t2 = t;
            t2.push_back(extra);
            REQUIRE(ClosedTheory::close(d, t2) == ct);
        }
    }
}

TEST_CASE("closed theories round-trip through their model sets") {
    Domain d = diamond();
    const ElementId a = *d.find("a");
    Theory t = {Clause{a}};
    ClosedTheory ct = ClosedTheory::close(d, t);
    REQUIRE(ClosedTheory::from_model_set(d, ct.model_elements()) == ct);
    REQUIRE(ct.min_models(d) == ElementSet{a});
    REQUIRE_FALSE(ct.inconsistent());

    // Only upward-closed sets describe a closed theory.
    REQUIRE_THROWS_AS(ClosedTheory::from_model_set(d, {a}), Error);
}

TEST_CASE("an inconsistent closed theory has no models and contains everything") {
    Domain d = Domain::build({"a", "b"}, {}, /*auto_bottom=*/true);
    ClosedTheory ct = ClosedTheory::close(d, {Clause{*d.find("a")}, Clause{*d.find("b")}});
    REQUIRE(ct.inconsistent());
    REQUIRE(ct.contains(d, Clause{}));
    REQUIRE(ct.contains(d, Clause{*d.find("a")}));
}
