#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "uhs/canonical.hpp"
#include "uhs/hypergraph.hpp"

namespace uhs {

enum class Shape { Unicyclic, Supertree };

struct GenSpec {
    int k = 3;
    int m = 2;
    Shape shape = Shape::Unicyclic;
    int max_cycle_len = 0;        // 0 means no cap beyond m
    long long cap = 1000000;      // bound on the number of stored classes
};

namespace detail {

/// Seed cycle of length q: q=2 is two edges sharing exactly two vertices;
/// q>=3 chains edges through single shared joints, consecutive only.
inline Hypergraph seed_cycle(int k, int q) {
    std::vector<Edge> edges;
    int next = 0;
    if (q == 2) {
        int a = next++, b = next++;
        Edge e1{a, b}, e2{a, b};
        for (int i = 0; i < k - 2; ++i) e1.push_back(next++);
        for (int i = 0; i < k - 2; ++i) e2.push_back(next++);
        edges = {e1, e2};
    } else {
        std::vector<int> joint(q);
        for (int i = 0; i < q; ++i) joint[i] = next++;
        for (int i = 0; i < q; ++i) {
            Edge e{joint[i], joint[(i + 1) % q]};
            for (int j = 0; j < k - 2; ++j) e.push_back(next++);
            edges.push_back(e);
        }
    }
    return from_edges(k, next, std::move(edges));
}

inline Hypergraph seed_single_edge(int k) {
    Edge e(k);
    for (int i = 0; i < k; ++i) e[i] = i;
    return Hypergraph{k, k, {e}};
}

/// New pendant edge at anchor a: one existing vertex plus k-1 fresh ids.
inline Hypergraph attach_edge(const Hypergraph& h, int anchor) {
    std::vector<Edge> edges = h.edges;
    Edge e{anchor};
    for (int i = 0; i < h.k - 1; ++i) e.push_back(h.n + i);
    edges.push_back(std::move(e));
    return from_edges(h.k, h.n + h.k - 1, std::move(edges));
}

} // namespace detail

/// Isomorph-free generation of all connected k-uniform hypergraphs with m
/// edges of the requested shape. Every unicyclic graph peels down to its
/// cycle by removing pendant-most tree edges, so growing every seed cycle by
/// single-anchor tree edges reaches every class; duplicates are removed by
/// canonical key. Returned graphs are canonical representatives in key
/// order.
inline std::vector<Hypergraph> generate(const GenSpec& spec) {
    if (spec.k < 3) throw ValidationError("generate: k must be at least 3");
    int min_m = spec.shape == Shape::Unicyclic ? 2 : 1;
    if (spec.m < min_m)
        throw ValidationError("generate: m must be at least " + std::to_string(min_m) +
                              " for this shape");

    int max_q = spec.m;
    if (spec.max_cycle_len > 0) max_q = std::min(max_q, spec.max_cycle_len);

    using Level = std::map<CanonicalKey, Hypergraph>;
    auto insert_canonical = [&spec](Level& level, const Hypergraph& g) {
        CanonicalResult c = canonicalize(g);
        level.emplace(c.key, c.canonical_graph);
        if (static_cast<long long>(level.size()) > spec.cap)
            throw Error("generate: class cap " + std::to_string(spec.cap) +
                        " exceeded with " + std::to_string(level.size()) + " classes at " +
                        std::to_string(g.m()) + " edges");
    };

    Level current;
    int level_m = min_m;
    if (spec.shape == Shape::Supertree) {
        insert_canonical(current, detail::seed_single_edge(spec.k));
    } else {
        insert_canonical(current, detail::seed_cycle(spec.k, 2));
    }

    while (level_m < spec.m) {
        Level next;
        for (const auto& [key, g] : current) {
            // Anchors in the same automorphism orbit give isomorphic results.
            for (const auto& orbit : automorphism_orbits(g))
                insert_canonical(next, detail::attach_edge(g, orbit.front()));
        }
        ++level_m;
        if (spec.shape == Shape::Unicyclic && level_m <= max_q && level_m >= 3)
            insert_canonical(next, detail::seed_cycle(spec.k, level_m));
        current = std::move(next);
    }

    std::vector<Hypergraph> out;
    out.reserve(current.size());
    for (auto& [key, g] : current) out.push_back(std::move(g));
    return out;
}

inline long long count_classes(const GenSpec& spec) {
    return static_cast<long long>(generate(spec).size());
}

} // namespace uhs
