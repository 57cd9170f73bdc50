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

// Deterministic random-instance builders shared by the test suites.  All
// randomness flows through a caller-provided std::mt19937 so every test run
// sees the same instances.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "domlog/domlog.hpp"

namespace gen {

/// Random finite domain with `extra` named elements over a fresh bottom.
/// Edges only point from lower to higher index, so the relation is acyclic
/// by construction; `edge_percent` controls density.
inline domlog::Domain random_domain(std::mt19937& rng, std::size_t extra,
                                    unsigned edge_percent = 35) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < extra; ++i)
        names.push_back("e" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> below;
    for (std::size_t i = 0; i < extra; ++i)
        for (std::size_t j = i + 1; j < extra; ++j)
            if (rng() % 100 < edge_percent)
                below.emplace_back(names[i], names[j]);
    return domlog::Domain::build(std::move(names), below, /*auto_bottom=*/true);
}

/// Nonempty random clause over the domain.
inline domlog::Clause random_clause(std::mt19937& rng, const domlog::Domain& d) {
    const std::size_t size = 1 + rng() % std::min<std::size_t>(d.size(), 3);
    domlog::ElementSet members;
    for (std::size_t k = 0; k < size; ++k)
        members.push_back(static_cast<domlog::ElementId>(rng() % d.size()));
    return domlog::Clause(std::move(members));
}

inline domlog::Theory random_theory(std::mt19937& rng, const domlog::Domain& d,
                                    std::size_t max_clauses = 4) {
    domlog::Theory t;
    const std::size_t n = rng() % (max_clauses + 1);
    for (std::size_t k = 0; k < n; ++k)
        t.push_back(random_clause(rng, d));
    return t;
}

/// Random program with optional default negation.  Around a fifth of the
/// rules are facts (body {bottom}) so fixpoints have something to chew on.
inline domlog::Program random_program(std::mt19937& rng, const domlog::Domain& d,
                                      std::size_t max_rules, bool allow_neg) {
    domlog::Program p;
    const std::size_t n = 1 + rng() % max_rules;
    for (std::size_t k = 0; k < n; ++k) {
        domlog::ExtendedRule r;
        r.head = random_clause(rng, d);
        r.pos_body = rng() % 5 == 0 ? domlog::Clause{d.bottom()} : random_clause(rng, d);
        if (allow_neg && rng() % 2 == 0)
            r.neg_body = random_clause(rng, d);
        p.rules.push_back(std::move(r));
    }
    return p;
}

/// Random formal context with the given shape and incidence density.
inline domlog::fca::FormalContext random_context(std::mt19937& rng,
                                                 std::size_t objects,
                                                 std::size_t attributes,
                                                 unsigned fill_percent = 40) {
    std::vector<std::string> objs, attrs;
    for (std::size_t g = 0; g < objects; ++g)
        objs.push_back("g" + std::to_string(g));
    for (std::size_t m = 0; m < attributes; ++m)
        attrs.push_back("m" + std::to_string(m));
    std::vector<std::uint8_t> incidence(objects * attributes, 0);
    for (auto& cell : incidence)
        cell = rng() % 100 < fill_percent ? 1 : 0;
    return domlog::fca::FormalContext::build(std::move(objs), std::move(attrs),
                                             std::move(incidence));
}

} // namespace gen
