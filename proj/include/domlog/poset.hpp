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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domlog/error.hpp"

namespace domlog {

using ElementId = std::uint32_t;

/// Set of domain elements, kept sorted and duplicate-free.
using ElementSet = std::vector<ElementId>;

namespace detail {

inline void normalize(ElementSet& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

inline bool contains(const ElementSet& xs, ElementId x) {
    return std::binary_search(xs.begin(), xs.end(), x);
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// A finite partial order with a least element, used as the domain of
/// discourse: elements play the double role of compact points and of the
/// values a world can take.  Immutable once built; every query is read-only.
///
/// The order is stored as its full reflexive-transitive closure, so leq()
/// is a single table lookup.
class Domain {
public:
    /// An empty placeholder; assign a built domain before use.
    Domain() = default;

    /// Builds a domain from element names and a list of `x below y` pairs.
    /// The pairs may be any generating relation: the reflexive-transitive
    /// closure is taken automatically.  Throws Error on duplicate or unknown
    /// names and on order cycles.
    ///
    /// A least element is mandatory.  If the closure has none and
    /// `auto_bottom` is set, a fresh element named "_bot_" is added below
    /// everything; otherwise an Error is raised.
    static Domain build(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& below_pairs,
                        bool auto_bottom = false) {
        Domain d;
        d.names_ = std::move(elements);
        d.check_names();
        const std::size_t n = d.names_.size();
        d.leq_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            d.leq_[i * n + i] = 1;
        for (const auto& [lo, hi] : below_pairs) {
            auto a = d.find(lo);
            auto b = d.find(hi);
            if (!a)
                throw Error("unknown element in order pair: '" + lo + "'");
            if (!b)
                throw Error("unknown element in order pair: '" + hi + "'");
            d.leq_[*a * n + *b] = 1;
        }
        // Warshall closure.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                if (!d.leq_[i * n + k])
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (d.leq_[k * n + j])
                        d.leq_[i * n + j] = 1;
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (d.leq_[i * n + j] && d.leq_[j * n + i])
                    throw Error("order cycle through '" + d.names_[i] + "' and '" + d.names_[j] + "'");
        d.locate_bottom(auto_bottom);
        return d;
    }

    /// Builds a domain whose order is already given as a full relation
    /// matrix (row-major, entry x*n+y set iff x is below y).  The matrix is
    /// validated — reflexive, antisymmetric, transitive, least element —
    /// unless `validate` is false, which is reserved for relations that are
    /// correct by construction (validation is cubic and the interpretation
    /// domains of the classical bridge get large).
    static Domain from_relation(std::vector<std::string> elements, std::vector<bool> leq,
                                bool validate = true) {
        Domain d;
        d.names_ = std::move(elements);
        d.check_names();
        const std::size_t n = d.names_.size();
        if (leq.size() != n * n)
            throw Error("relation matrix has wrong size");
        d.leq_ = std::move(leq);
        if (validate) {
            for (std::size_t i = 0; i < n; ++i)
                if (!d.leq_[i * n + i])
                    throw Error("relation is not reflexive at '" + d.names_[i] + "'");
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (d.leq_[i * n + j] && d.leq_[j * n + i])
                        throw Error("relation is not antisymmetric on '" + d.names_[i] + "', '" +
                                    d.names_[j] + "'");
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i) {
                    if (!d.leq_[i * n + k])
                        continue;
                    for (std::size_t j = 0; j < n; ++j)
                        if (d.leq_[k * n + j] && !d.leq_[i * n + j])
                            throw Error("relation is not transitive via '" + d.names_[k] + "'");
                }
        }
        d.locate_bottom(false);
        return d;
    }

    std::size_t size() const { return names_.size(); }

    ElementId bottom() const { return bottom_; }

    const std::string& name(ElementId e) const { return names_[e]; }

    std::optional<ElementId> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<ElementId>(i);
        return std::nullopt;
    }

    bool leq(ElementId x, ElementId y) const { return leq_[x * size() + y] != 0; }

    bool strictly_below(ElementId x, ElementId y) const { return x != y && leq(x, y); }

    /// True when x and y have a common upper bound.
    bool consistent_pair(ElementId x, ElementId y) const {
        const std::size_t n = size();
        for (std::size_t u = 0; u < n; ++u)
            if (leq_[x * n + u] && leq_[y * n + u])
                return true;
        return false;
    }

    ElementSet all_elements() const {
        ElementSet out(size());
        for (std::size_t i = 0; i < size(); ++i)
            out[i] = static_cast<ElementId>(i);
        return out;
    }

    /// Minimal upper bounds of xs.  mub({}) is {bottom()}; mub of an
    /// inconsistent set is empty.  Always an antichain.
    ElementSet mub(const ElementSet& xs) const {
        check_elements(xs);
        ElementSet ubs;
        const std::size_t n = size();
        for (std::size_t u = 0; u < n; ++u) {
            bool above_all = true;
            for (ElementId x : xs)
                if (!leq_[x * n + u]) {
                    above_all = false;
                    break;
                }
            if (above_all)
                ubs.push_back(static_cast<ElementId>(u));
        }
        return minimal_of(ubs);
    }

    /// Everything lying above some member of xs.
    ElementSet upward_closure(const ElementSet& xs) const {
        check_elements(xs);
        ElementSet out;
        const std::size_t n = size();
        for (std::size_t w = 0; w < n; ++w)
            for (ElementId x : xs)
                if (leq_[x * n + w]) {
                    out.push_back(static_cast<ElementId>(w));
                    break;
                }
        return out;
    }

    /// The members of xs that have no other member strictly below them.
    ElementSet minimal_elements(const ElementSet& xs) const {
        check_elements(xs);
        return minimal_of(xs);
    }

    bool is_upward_closed(const ElementSet& xs) const {
        check_elements(xs);
        for (ElementId x : xs)
            for (std::size_t w = 0; w < size(); ++w)
                if (leq_[x * size() + w] && !detail::contains(xs, static_cast<ElementId>(w)))
                    return false;
        return true;
    }

    /// Covering pairs (x, y): x strictly below y with nothing in between.
    /// This is the transitive reduction, handy for printing orders.
    std::vector<std::pair<ElementId, ElementId>> cover_pairs() const {
        std::vector<std::pair<ElementId, ElementId>> out;
        const std::size_t n = size();
        for (ElementId x = 0; x < n; ++x)
            for (ElementId y = 0; y < n; ++y) {
                if (!strictly_below(x, y))
                    continue;
                bool direct = true;
                for (ElementId z = 0; z < n; ++z)
                    if (strictly_below(x, z) && strictly_below(z, y)) {
                        direct = false;
                        break;
                    }
                if (direct)
                    out.emplace_back(x, y);
            }
        return out;
    }

    void check_elements(const ElementSet& xs) const {
        for (ElementId x : xs)
            if (x >= size())
                throw Error("element id " + std::to_string(x) + " out of range");
    }

private:
    void check_names() const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw Error("empty element name");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw Error("duplicate element name '" + names_[i] + "'");
        }
    }

    void locate_bottom(bool auto_bottom) {
        const std::size_t n = names_.size();
        for (std::size_t e = 0; e < n; ++e) {
            bool below_all = true;
            for (std::size_t f = 0; f < n; ++f)
                if (!leq_[e * n + f]) {
                    below_all = false;
                    break;
                }
            if (below_all) {
                bottom_ = static_cast<ElementId>(e);
                return;
            }
        }
        if (!auto_bottom)
            throw Error("no least element (pass auto_bottom or declare one)");
        if (find("_bot_"))
            throw Error("cannot add least element: name '_bot_' already taken");
        std::vector<bool> grown((n + 1) * (n + 1), false);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                grown[i * (n + 1) + j] = static_cast<bool>(leq_[i * n + j]);
        for (std::size_t j = 0; j <= n; ++j)
            grown[n * (n + 1) + j] = true;
        leq_ = std::move(grown);
        names_.emplace_back("_bot_");
        bottom_ = static_cast<ElementId>(n);
    }

    ElementSet minimal_of(const ElementSet& xs) const {
        ElementSet out;
        for (ElementId x : xs) {
            bool minimal = true;
            for (ElementId y : xs)
                if (strictly_below(y, x)) {
                    minimal = false;
                    break;
                }
            if (minimal)
                out.push_back(x);
        }
        return out;
    }

    std::vector<std::string> names_;
    std::vector<bool> leq_; // row-major closure matrix, bit-packed
    ElementId bottom_ = 0;
};

} // namespace domlog
