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
#include <random>
#include <string>
#include <vector>

#include "domlog/logic.hpp"

namespace domlog::fca {

/// Objects, attributes, and which object has which attribute.  Object and
/// attribute names must all be distinct from each other: derived domains
/// label their elements with both kinds at once.
struct FormalContext {
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<std::uint8_t> incidence; // row-major, objects x attributes

    static FormalContext build(std::vector<std::string> objects,
                               std::vector<std::string> attributes,
                               std::vector<std::uint8_t> incidence) {
        if (objects.size() > 63 || attributes.size() > 63)
            throw BoundError("context too large (at most 63 objects and 63 attributes)");
        if (incidence.size() != objects.size() * attributes.size())
            throw Error("incidence table has wrong size");
        auto check_distinct = [](const std::vector<std::string>& names, const char* kind) {
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (names[i].empty())
                    throw Error(std::string("empty ") + kind + " name");
                for (std::size_t j = i + 1; j < names.size(); ++j)
                    if (names[i] == names[j])
                        throw Error(std::string("duplicate ") + kind + " name '" + names[i] + "'");
            }
        };
        check_distinct(objects, "object");
        check_distinct(attributes, "attribute");
        for (const std::string& g : objects)
            for (const std::string& m : attributes)
                if (g == m)
                    throw Error("name '" + g + "' is both an object and an attribute");
        FormalContext ctx;
        ctx.objects = std::move(objects);
        ctx.attributes = std::move(attributes);
        ctx.incidence = std::move(incidence);
        return ctx;
    }

    std::size_t object_count() const { return objects.size(); }
    std::size_t attribute_count() const { return attributes.size(); }

    bool incident(std::size_t g, std::size_t m) const {
        return incidence[g * attributes.size() + m] != 0;
    }

    friend bool operator==(const FormalContext&, const FormalContext&) = default;
};

/// Index sets over objects or attributes, sorted ascending.
using IndexSet = std::vector<std::size_t>;

namespace detail {

// 64-bit masks are the internal currency; build() bounds both sides at 63.
inline std::uint64_t attr_extent_mask(const FormalContext& ctx, std::size_t m) {
    std::uint64_t out = 0;
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
        if (ctx.incident(g, m))
            out |= std::uint64_t{1} << g;
    return out;
}

inline std::uint64_t obj_intent_mask(const FormalContext& ctx, std::size_t g) {
    std::uint64_t out = 0;
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        if (ctx.incident(g, m))
            out |= std::uint64_t{1} << m;
    return out;
}

inline std::uint64_t to_mask(const IndexSet& xs, std::size_t bound, const char* kind) {
    std::uint64_t out = 0;
    for (std::size_t x : xs) {
        if (x >= bound)
            throw Error(std::string(kind) + " index out of range");
        out |= std::uint64_t{1} << x;
    }
    return out;
}

inline IndexSet from_mask(std::uint64_t mask, std::size_t bound) {
    IndexSet out;
    for (std::size_t i = 0; i < bound; ++i)
        if (mask & (std::uint64_t{1} << i))
            out.push_back(i);
    return out;
}

/// Tables an algorithm keeps asking for.
struct ContextMasks {
    std::vector<std::uint64_t> attr_extent, obj_intent;
    std::uint64_t all_objects, all_attrs;

    explicit ContextMasks(const FormalContext& ctx) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            attr_extent.push_back(attr_extent_mask(ctx, m));
        for (std::size_t g = 0; g < ctx.object_count(); ++g)
            obj_intent.push_back(obj_intent_mask(ctx, g));
        all_objects = ctx.object_count() == 0
                          ? 0
                          : (~std::uint64_t{0} >> (64 - ctx.object_count()));
        all_attrs = ctx.attribute_count() == 0
                        ? 0
                        : (~std::uint64_t{0} >> (64 - ctx.attribute_count()));
    }

    std::uint64_t derive_objs(std::uint64_t objs) const {
        std::uint64_t out = all_attrs;
        for (std::size_t g = 0; g < obj_intent.size(); ++g)
            if (objs & (std::uint64_t{1} << g))
                out &= obj_intent[g];
        return out;
    }

    std::uint64_t derive_attrs(std::uint64_t attrs) const {
        std::uint64_t out = all_objects;
        for (std::size_t m = 0; m < attr_extent.size(); ++m)
            if (attrs & (std::uint64_t{1} << m))
                out &= attr_extent[m];
        return out;
    }

    std::uint64_t closure_attrs(std::uint64_t attrs) const { return derive_objs(derive_attrs(attrs)); }
};

} // namespace detail

/// Attributes common to every object in A.
inline IndexSet derive_objects(const FormalContext& ctx, const IndexSet& objs) {
    detail::ContextMasks cm(ctx);
    return detail::from_mask(cm.derive_objs(detail::to_mask(objs, ctx.object_count(), "object")),
                             ctx.attribute_count());
}

/// Objects having every attribute in B.
inline IndexSet derive_attrs(const FormalContext& ctx, const IndexSet& attrs) {
    detail::ContextMasks cm(ctx);
    return detail::from_mask(cm.derive_attrs(detail::to_mask(attrs, ctx.attribute_count(), "attribute")),
                             ctx.object_count());
}

/// B''  (always a superset of B; idempotent).
inline IndexSet closure(const FormalContext& ctx, const IndexSet& attrs) {
    detail::ContextMasks cm(ctx);
    return detail::from_mask(cm.closure_attrs(detail::to_mask(attrs, ctx.attribute_count(), "attribute")),
                             ctx.attribute_count());
}

/// A pair (extent, intent) with extent' = intent and intent' = extent.
struct Concept {
    IndexSet extent;
    IndexSet intent;

    friend bool operator==(const Concept&, const Concept&) = default;
};

struct FcaOptions {
    /// Concept enumeration walks all attribute subsets: 2^|M| closures.
    std::size_t max_attributes = 20;
};

/// Every formal concept, ordered by extent size then extent (so the bottom
/// concept comes first and the top concept last).
inline std::vector<Concept> all_concepts(const FormalContext& ctx, const FcaOptions& opts = {}) {
    const std::size_t cap = std::min(opts.max_attributes, std::size_t{25});
    if (ctx.attribute_count() > cap)
        throw BoundError("too many attributes for concept enumeration (" +
                         std::to_string(ctx.attribute_count()) + " > " + std::to_string(cap) +
                         ")");
    detail::ContextMasks cm(ctx);
    std::vector<std::uint64_t> closed;
    std::vector<bool> seen(std::size_t{1} << ctx.attribute_count(), false);
    for (std::uint64_t b = 0;; ++b) {
        std::uint64_t c = cm.closure_attrs(b);
        if (!seen[c]) {
            seen[c] = true;
            closed.push_back(c);
        }
        if (b == cm.all_attrs)
            break;
    }
    std::vector<Concept> out;
    for (std::uint64_t intent : closed) {
        std::uint64_t extent = cm.derive_attrs(intent);
        out.push_back(Concept{detail::from_mask(extent, ctx.object_count()),
                              detail::from_mask(intent, ctx.attribute_count())});
    }
    std::sort(out.begin(), out.end(), [&](const Concept& a, const Concept& b) {
        if (a.extent.size() != b.extent.size())
            return a.extent.size() < b.extent.size();
        return a.extent < b.extent;
    });
    return out;
}

/// A node of the object/attribute-concept hierarchy: one concept that is the
/// concept of at least one attribute or object, carrying every label that
/// lands on it.  Display name joins the labels with '=' (attributes first).
struct AocNode {
    IndexSet attr_labels;
    IndexSet obj_labels;
    IndexSet extent;
    IndexSet intent;
    std::string display;

    friend bool operator==(const AocNode&, const AocNode&) = default;
};

/// The labeled concepts ordered by extent inclusion.  Node order: attribute
/// concepts in attribute order, then the remaining object concepts in object
/// order.
struct AocPoset {
    std::vector<AocNode> nodes;

    /// Concept order: i below j iff extent(i) is a subset of extent(j).
    bool node_leq(std::size_t i, std::size_t j) const {
        const IndexSet& a = nodes[i].extent;
        const IndexSet& b = nodes[j].extent;
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    friend bool operator==(const AocPoset&, const AocPoset&) = default;
};

inline AocPoset aoc_poset(const FormalContext& ctx) {
    detail::ContextMasks cm(ctx);
    AocPoset out;
    std::vector<std::uint64_t> extents; // parallel to nodes
    auto node_for = [&](std::uint64_t extent, std::uint64_t intent) -> AocNode& {
        for (std::size_t i = 0; i < extents.size(); ++i)
            if (extents[i] == extent)
                return out.nodes[i];
        extents.push_back(extent);
        out.nodes.push_back(AocNode{{},
                                    {},
                                    detail::from_mask(extent, ctx.object_count()),
                                    detail::from_mask(intent, ctx.attribute_count()),
                                    ""});
        return out.nodes.back();
    };
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        const std::uint64_t extent = cm.attr_extent[m];
        node_for(extent, cm.derive_objs(extent)).attr_labels.push_back(m);
    }
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        const std::uint64_t intent = cm.obj_intent[g];
        node_for(cm.derive_attrs(intent), intent).obj_labels.push_back(g);
    }
    for (AocNode& n : out.nodes) {
        std::string d;
        for (std::size_t m : n.attr_labels) {
            if (!d.empty())
                d += '=';
            d += ctx.attributes[m];
        }
        for (std::size_t g : n.obj_labels) {
            if (!d.empty())
                d += '=';
            d += ctx.objects[g];
        }
        n.display = std::move(d);
    }
    return out;
}

/// A context turned into a domain: the labeled hierarchy upside down (more
/// specific concepts sit higher), with a fresh "_bot_" element underneath
/// unless some node's extent already contains every other extent (that node
/// then serves as the least element).  Elements 0..nodes-1 are the nodes in
/// hierarchy order.
struct DerivedDomain {
    Domain domain;
    AocPoset aoc;
    std::vector<ElementId> object_element;    // context object -> element
    std::vector<ElementId> attribute_element; // context attribute -> element
};

inline DerivedDomain to_domain(const FormalContext& ctx, const AocPoset& aoc) {
    const std::size_t k = aoc.nodes.size();
    std::vector<std::string> names;
    names.reserve(k + 1);
    for (const AocNode& n : aoc.nodes)
        names.push_back(n.display);

    bool has_greatest = false;
    for (std::size_t g = 0; g < k && !has_greatest; ++g) {
        bool greatest = true;
        for (std::size_t i = 0; i < k; ++i)
            if (!aoc.node_leq(i, g)) {
                greatest = false;
                break;
            }
        has_greatest = greatest;
    }
    const bool fresh_bottom = !has_greatest;
    const std::size_t n = k + (fresh_bottom ? 1 : 0);
    if (fresh_bottom)
        names.emplace_back("_bot_");

    std::vector<bool> leq(n * n, false);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            leq[i * n + j] = aoc.node_leq(j, i); // dual order
    if (fresh_bottom)
        for (std::size_t j = 0; j < n; ++j)
            leq[k * n + j] = true;
    leq[n * n - 1] = true; // reflexivity of the last row either way

    DerivedDomain dd;
    dd.domain = Domain::from_relation(std::move(names), std::move(leq));
    dd.aoc = aoc;
    dd.object_element.assign(ctx.object_count(), 0);
    dd.attribute_element.assign(ctx.attribute_count(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t m : aoc.nodes[i].attr_labels)
            dd.attribute_element[m] = static_cast<ElementId>(i);
        for (std::size_t g : aoc.nodes[i].obj_labels)
            dd.object_element[g] = static_cast<ElementId>(i);
    }
    return dd;
}

inline DerivedDomain to_domain(const FormalContext& ctx) { return to_domain(ctx, aoc_poset(ctx)); }

/// The closure of an attribute set computed on the logic side: an attribute
/// belongs to the closure iff the theory of singleton clauses {attr-element}
/// entails its own singleton clause.  Must agree with closure().
inline IndexSet closure_via_entailment(const FormalContext& ctx, const IndexSet& attrs,
                                       const DerivedDomain& dd) {
    detail::to_mask(attrs, ctx.attribute_count(), "attribute"); // range check
    Theory t;
    for (std::size_t m : attrs)
        t.push_back(Clause({dd.attribute_element[m]}));
    IndexSet out;
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        if (entails(dd.domain, t, Clause({dd.attribute_element[m]})))
            out.push_back(m);
    return out;
}

/// Convenience overload deriving the domain on the fly.  Prefer the
/// three-argument form when closing many sets over one context.
inline IndexSet closure_via_entailment(const FormalContext& ctx, const IndexSet& attrs) {
    return closure_via_entailment(ctx, attrs, to_domain(ctx));
}

struct ClosureCheckOptions {
    /// Exhaustive when 2^|M| stays within this budget; sampled otherwise.
    std::size_t exhaustive_limit = 12;
    bool force_exhaustive = false;
    std::uint32_t seed = 0;
    std::size_t samples = 4096;
};

struct ClosureCheckReport {
    bool ok = true;
    bool exhaustive = false;
    std::size_t checked = 0;
    std::string counterexample;
};

/// Differential check that context closure and entailment-based closure
/// agree on attribute subsets — exhaustively when the attribute count is
/// small, otherwise on seeded random subsets (always including the empty and
/// the full set).
inline ClosureCheckReport verify_closure_correspondence(const FormalContext& ctx,
                                                        const ClosureCheckOptions& opts = {}) {
    const std::size_t m = ctx.attribute_count();
    const bool exhaustive = opts.force_exhaustive || m <= opts.exhaustive_limit;
    if (exhaustive && m > 25)
        throw BoundError("too many attributes for exhaustive subset enumeration");

    DerivedDomain dd = to_domain(ctx);
    detail::ContextMasks cm(ctx);

    ClosureCheckReport rep;
    rep.exhaustive = exhaustive;

    auto check_one = [&](std::uint64_t mask) {
        IndexSet a = detail::from_mask(mask, m);
        IndexSet direct = detail::from_mask(cm.closure_attrs(mask), m);
        IndexSet via = closure_via_entailment(ctx, a, dd);
        ++rep.checked;
        if (direct != via && rep.ok) {
            rep.ok = false;
            std::string s = "attribute set {";
            for (std::size_t i = 0; i < a.size(); ++i)
                s += (i ? ", " : "") + ctx.attributes[a[i]];
            s += "}: context closure and entailment closure differ";
            rep.counterexample = s;
        }
    };

    if (exhaustive) {
        for (std::uint64_t mask = 0;; ++mask) {
            check_one(mask);
            if (mask == cm.all_attrs)
                break;
        }
    } else {
        check_one(0);
        check_one(cm.all_attrs);
        std::mt19937 rng(opts.seed);
        for (std::size_t i = 0; i < opts.samples; ++i) {
            std::uint64_t mask = 0;
            for (std::size_t b = 0; b < m; ++b)
                if (rng() % 2)
                    mask |= std::uint64_t{1} << b;
            check_one(mask);
        }
    }
    return rep;
}

} // namespace domlog::fca
