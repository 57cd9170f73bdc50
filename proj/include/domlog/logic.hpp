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

#include <initializer_list>
#include <utility>
#include <vector>

#include "domlog/poset.hpp"

namespace domlog {

/// A clause is a finite set of domain elements read disjunctively: a world w
/// satisfies the clause when some member lies below w.  The empty clause is
/// unsatisfiable.
struct Clause {
    ElementSet members;

    Clause() = default;
    explicit Clause(ElementSet ms) : members(std::move(ms)) { detail::normalize(members); }
    Clause(std::initializer_list<ElementId> ms) : Clause(ElementSet(ms)) {}

    bool empty() const { return members.empty(); }

    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// A theory is a finite conjunction of clauses.
using Theory = std::vector<Clause>;

inline bool satisfies(const Domain& d, ElementId w, const Clause& x) {
    for (ElementId e : x.members)
        if (d.leq(e, w))
            return true;
    return false;
}

inline bool models_theory(const Domain& d, ElementId w, const Theory& t) {
    for (const Clause& x : t)
        if (!satisfies(d, w, x))
            return false;
    return true;
}

/// All worlds satisfying every clause of t.  Always an upward-closed set.
inline ElementSet model_set(const Domain& d, const Theory& t) {
    for (const Clause& x : t)
        d.check_elements(x.members);
    ElementSet out;
    for (std::size_t w = 0; w < d.size(); ++w)
        if (models_theory(d, static_cast<ElementId>(w), t))
            out.push_back(static_cast<ElementId>(w));
    return out;
}

/// Semantic entailment, decided on the minimal models only: satisfaction is
/// monotone in the world, so a clause true at every minimal model is true at
/// every model.
inline bool entails(const Domain& d, const Theory& t, const Clause& x) {
    d.check_elements(x.members);
    for (ElementId m : d.minimal_elements(model_set(d, t)))
        if (!satisfies(d, m, x))
            return false;
    return true;
}

/// Same relation, decided by scanning every model.  Kept as an independent
/// cross-check for the minimal-model shortcut.
inline bool entails_full_scan(const Domain& d, const Theory& t, const Clause& x) {
    d.check_elements(x.members);
    for (ElementId w : model_set(d, t))
        if (!satisfies(d, w, x))
            return false;
    return true;
}

/// Refinement preorder on clauses: x is below y when every member of y has a
/// member of x below it, i.e. the singleton theory {y} entails x.
inline bool smyth_leq(const Domain& d, const Clause& x, const Clause& y) {
    d.check_elements(x.members);
    d.check_elements(y.members);
    for (ElementId b : y.members) {
        bool covered = false;
        for (ElementId a : x.members)
            if (d.leq(a, b)) {
                covered = true;
                break;
            }
        if (!covered)
            return false;
    }
    return true;
}

/// Drops non-minimal members; the result satisfies exactly the same worlds.
inline Clause canonical_clause(const Domain& d, const Clause& x) {
    return Clause(d.minimal_elements(x.members));
}

/// A deductively closed theory, represented by its model set (clauses are
/// astronomically many, worlds are few).  Two closed theories are equal iff
/// their model sets are: closure is determined by what it is true in.
class ClosedTheory {
public:
    ClosedTheory() = default;

    /// Closure of an arbitrary theory: remember its models.
    static ClosedTheory close(const Domain& d, const Theory& t) {
        ClosedTheory ct;
        ct.models_ = model_set(d, t);
        return ct;
    }

    /// Wraps an explicit model set, which must be upward closed.
    static ClosedTheory from_model_set(const Domain& d, ElementSet models) {
        detail::normalize(models);
        if (!d.is_upward_closed(models))
            throw Error("model set of a closed theory must be upward closed");
        ClosedTheory ct;
        ct.models_ = std::move(models);
        return ct;
    }

    const ElementSet& model_elements() const { return models_; }

    ElementSet min_models(const Domain& d) const { return d.minimal_elements(models_); }

    /// True iff the closure contains x: every model satisfies x.
    bool contains(const Domain& d, const Clause& x) const {
        d.check_elements(x.members);
        for (ElementId m : d.minimal_elements(models_))
            if (!satisfies(d, m, x))
                return false;
        return true;
    }

    /// An inconsistent closed theory has no models and contains every clause.
    bool inconsistent() const { return models_.empty(); }

    friend bool operator==(const ClosedTheory&, const ClosedTheory&) = default;

private:
    ElementSet models_;
};

} // namespace domlog
