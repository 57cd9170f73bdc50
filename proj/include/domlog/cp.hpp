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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "domlog/program.hpp"

namespace domlog {

/// Clause over a small domain packed into a bitmask: bit e set iff element e
/// is a member.  Only usable while the domain stays within the element bound.
using ClauseMask = std::uint32_t;

struct CpOptions {
    /// Extensional theories store one bit per clause, i.e. 2^|D| bits, so
    /// clause-level computations are gated on the domain size.
    std::size_t max_elements = 12;
};

inline ClauseMask clause_mask(const Domain& d, const Clause& x) {
    d.check_elements(x.members);
    ClauseMask m = 0;
    for (ElementId e : x.members)
        m |= ClauseMask{1} << e;
    return m;
}

inline Clause clause_from_mask(ClauseMask m) {
    ElementSet xs;
    for (ElementId e = 0; e < 32; ++e)
        if (m & (ClauseMask{1} << e))
            xs.push_back(e);
    return Clause(std::move(xs));
}

/// A theory listed in extension: one membership bit for every clause over the
/// domain.  This is the workable representation of a deductively closed
/// theory when clauses themselves are the objects of interest.
class ExtensionalTheory {
public:
    static ExtensionalTheory empty(const Domain& d, const CpOptions& opts = {}) {
        // Masks are 32-bit and the bitmap has one entry per subset, so the
        // hard ceiling is 28 elements no matter what the caller allows.
        const std::size_t cap = std::min<std::size_t>(opts.max_elements, 28);
        if (d.size() > cap)
            throw BoundError("domain too large for clause-level enumeration (" +
                             std::to_string(d.size()) + " > " + std::to_string(cap) +
                             " elements)");
        ExtensionalTheory t;
        t.elements_ = d.size();
        t.member_.assign(std::size_t{1} << d.size(), false);
        return t;
    }

    std::size_t domain_elements() const { return elements_; }

    bool contains(ClauseMask x) const { return member_[x]; }

    void insert(ClauseMask x) { member_[x] = true; }

    std::size_t clause_count() const {
        std::size_t n = 0;
        for (bool b : member_)
            n += b;
        return n;
    }

    std::vector<ClauseMask> members() const {
        std::vector<ClauseMask> out;
        for (std::size_t x = 0; x < member_.size(); ++x)
            if (member_[x])
                out.push_back(static_cast<ClauseMask>(x));
        return out;
    }

    friend bool operator==(const ExtensionalTheory&, const ExtensionalTheory&) = default;

private:
    std::size_t elements_ = 0;
    std::vector<bool> member_;
};

namespace detail {

/// Per-domain masks: down[w] is the set of elements below-or-equal w, up[w]
/// the set above-or-equal.  A world w satisfies clause x iff x & down[w].
struct OrderMasks {
    std::vector<ClauseMask> down, up;

    explicit OrderMasks(const Domain& d) : down(d.size(), 0), up(d.size(), 0) {
        for (ElementId x = 0; x < d.size(); ++x)
            for (ElementId y = 0; y < d.size(); ++y)
                if (d.leq(x, y)) {
                    down[y] |= ClauseMask{1} << x;
                    up[x] |= ClauseMask{1} << y;
                }
    }
};

} // namespace detail

/// Deductive closure of a clause list, in extension: a clause belongs to the
/// result iff it is true in every model of the input.
inline ExtensionalTheory close_extensional(const Domain& d, const std::vector<ClauseMask>& clauses,
                                           const CpOptions& opts = {}) {
    ExtensionalTheory t = ExtensionalTheory::empty(d, opts);
    detail::OrderMasks om(d);
    ElementSet models;
    for (ElementId w = 0; w < d.size(); ++w) {
        bool all = true;
        for (ClauseMask x : clauses)
            if (!(x & om.down[w])) {
                all = false;
                break;
            }
        if (all)
            models.push_back(w);
    }
    ElementSet mins = d.minimal_elements(models);
    const ClauseMask full = static_cast<ClauseMask>((std::uint64_t{1} << d.size()) - 1);
    for (ClauseMask x = 0;; ++x) {
        bool everywhere = true;
        for (ElementId m : mins)
            if (!(x & om.down[m])) {
                everywhere = false;
                break;
            }
        if (everywhere)
            t.insert(x);
        if (x == full)
            break;
    }
    return t;
}

/// One round of the clausal inference rule attached to a negation-free
/// program: for each rule `Y <- Z` and premises X_1..X_n in t with selected
/// members a_1..a_n, if every minimal upper bound of {a_1,..,a_n} satisfies
/// Z, conclude Y together with the unselected leftovers of the premises.
/// n = 0 is allowed (the bound set is then {bottom}), which is how facts
/// enter.  An inconsistent selection has no upper bounds and fires vacuously;
/// that case is what eliminates disjunctions.
///
/// Only the subsumption-minimal instances are produced: selected sets that
/// are minimal among those firing the rule, and for each selected element a
/// subset-minimal premise containing it.  Every skipped instance concludes a
/// superset of some produced conclusion, so the deductive closure of the
/// result is unaffected.
inline std::vector<ClauseMask> cp_consequences(const Domain& d, const Program& p,
                                               const ExtensionalTheory& t) {
    if (!p.neg_free())
        throw Error("clausal consequences are only defined for negation-free programs");
    if (t.domain_elements() != d.size())
        throw Error("theory was built over a different domain");
    const std::size_t n = d.size();
    detail::OrderMasks om(d);
    const ClauseMask full = static_cast<ClauseMask>((std::uint64_t{1} << n) - 1);

    // Subset-minimal members of t containing a given element, by element.
    std::vector<std::vector<ClauseMask>> min_premises(n);
    {
        std::vector<ClauseMask> by_size = t.members();
        std::sort(by_size.begin(), by_size.end(), [](ClauseMask a, ClauseMask b) {
            int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (ElementId a = 0; a < n; ++a) {
            const ClauseMask bit = ClauseMask{1} << a;
            for (ClauseMask x : by_size) {
                if (!(x & bit))
                    continue;
                bool has_smaller = false;
                for (ClauseMask kept : min_premises[a])
                    if ((kept & x) == kept) {
                        has_smaller = true;
                        break;
                    }
                if (!has_smaller)
                    min_premises[a].push_back(x);
            }
        }
    }

    std::vector<bool> emitted(std::size_t{1} << n, false);
    std::vector<ClauseMask> out;
    auto emit = [&](ClauseMask x) {
        if (!emitted[x]) {
            emitted[x] = true;
            out.push_back(x);
        }
    };

    for (const ExtendedRule& r : p.rules) {
        const ClauseMask head = clause_mask(d, r.head);
        const ClauseMask body = clause_mask(d, r.pos_body);

        // Does the selected set fire the rule?  Monotone in the set: growing
        // it only shrinks the upper bounds.
        auto fires = [&](ClauseMask sel) {
            ClauseMask ubs = full;
            for (ElementId a = 0; a < n && ubs; ++a)
                if (sel & (ClauseMask{1} << a))
                    ubs &= om.up[a];
            for (ElementId u = 0; u < n; ++u) {
                if (!(ubs & (ClauseMask{1} << u)))
                    continue;
                if (om.down[u] & ubs & ~(ClauseMask{1} << u))
                    continue; // not a minimal upper bound
                if (!(om.down[u] & body))
                    return false;
            }
            return true;
        };

        for (ClauseMask sel = 0;; ++sel) {
            if (fires(sel)) {
                bool minimal = true;
                for (ElementId a = 0; a < n && minimal; ++a)
                    if ((sel & (ClauseMask{1} << a)) && fires(sel & ~(ClauseMask{1} << a)))
                        minimal = false;
                if (minimal) {
                    // Product of minimal premises over the selected elements.
                    std::vector<ElementId> picked;
                    for (ElementId a = 0; a < n; ++a)
                        if (sel & (ClauseMask{1} << a))
                            picked.push_back(a);
                    bool feasible = true;
                    for (ElementId a : picked)
                        if (min_premises[a].empty())
                            feasible = false;
                    if (feasible) {
                        auto rec = [&](auto&& self, std::size_t i, ClauseMask residue) -> void {
                            if (i == picked.size()) {
                                emit(head | residue);
                                return;
                            }
                            const ClauseMask bit = ClauseMask{1} << picked[i];
                            for (ClauseMask x : min_premises[picked[i]])
                                self(self, i + 1, residue | (x & ~bit));
                        };
                        rec(rec, 0, 0);
                    }
                }
            }
            if (sel == full)
                break;
        }
    }
    return out;
}

/// The one-step consequence operator: deductive closure of everything the
/// inference rule concludes from t.
inline ExtensionalTheory tp_step(const Domain& d, const Program& p, const ExtensionalTheory& t,
                                 const CpOptions& opts = {}) {
    return close_extensional(d, cp_consequences(d, p, t), opts);
}

struct FixpointResult {
    ExtensionalTheory theory;
    /// Applications of the one-step operator, including the final one that
    /// confirms stability.
    std::size_t iterations = 0;
};

/// Least fixed point of the one-step operator by Kleene iteration, starting
/// from the closure of the bare clause {bottom} (which every world models).
/// The chain is increasing and the space finite, so this terminates.
inline FixpointResult tp_fixpoint(const Domain& d, const Program& p, const CpOptions& opts = {}) {
    FixpointResult res;
    ExtensionalTheory t = close_extensional(d, {ClauseMask{1} << d.bottom()}, opts);
    for (;;) {
        ExtensionalTheory next = tp_step(d, p, t, opts);
        ++res.iterations;
        if (next == t)
            break;
        t = std::move(next);
    }
    res.theory = std::move(t);
    return res;
}

/// The closed theory of a negation-free program in extensional form, computed
/// from the model set.  Independent of the inference engine; the fixpoint
/// above must agree with it.
inline ExtensionalTheory cons_extensional(const Domain& d, const Program& p,
                                          const CpOptions& opts = {}) {
    ExtensionalTheory t = ExtensionalTheory::empty(d, opts);
    detail::OrderMasks om(d);
    ElementSet mins = d.minimal_elements(program_models(d, p));
    const ClauseMask full = static_cast<ClauseMask>((std::uint64_t{1} << d.size()) - 1);
    for (ClauseMask x = 0;; ++x) {
        bool everywhere = true;
        for (ElementId m : mins)
            if (!(x & om.down[m])) {
                everywhere = false;
                break;
            }
        if (everywhere)
            t.insert(x);
        if (x == full)
            break;
    }
    return t;
}

} // namespace domlog
