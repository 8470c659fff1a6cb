#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "uhs/hypergraph.hpp"
#include "uhs/spectral.hpp"

namespace uhs {

/// Move edges (e_1, ..., e_r) from vertices (v_1, ..., v_r) to the target u:
/// each e_i is replaced by (e_i \ {v_i}) with u added. Requires v_i in e_i
/// and u outside every e_i.
struct MoveSpec {
    std::vector<int> edge_indices;
    std::vector<int> from_vertices;
    int target_u = 0;
};

/// Exchange the subsets U1 of edge e and V1 of edge f:
/// e' = (e \ U1) + V1 and f' = (f \ V1) + U1, with |U1| = |V1| = r in
/// [1, k-1]. Both replacement edges must keep k distinct vertices.
struct SwitchSpec {
    int edge_e = 0;
    int edge_f = 0;
    std::vector<int> u1;
    std::vector<int> v1;
};

namespace detail {

inline void check_no_duplicates(const std::vector<Edge>& edges) {
    std::set<Edge> seen;
    for (const Edge& e : edges)
        if (!seen.insert(e).second) {
            std::string s;
            for (int v : e) s += (s.empty() ? "" : ",") + std::to_string(v);
            throw ValidationError("transform would create duplicate edge {" + s + "}");
        }
}

} // namespace detail

inline Hypergraph move_edges(const Hypergraph& h, const MoveSpec& spec) {
    if (spec.edge_indices.size() != spec.from_vertices.size())
        throw ValidationError("move_edges: edge and vertex lists differ in length");
    if (spec.target_u < 0 || spec.target_u >= h.n)
        throw ValidationError("move_edges: target vertex out of range");
    std::set<int> distinct(spec.edge_indices.begin(), spec.edge_indices.end());
    if (distinct.size() != spec.edge_indices.size())
        throw ValidationError("move_edges: repeated edge index in spec");

    std::vector<Edge> edges = h.edges;
    for (std::size_t i = 0; i < spec.edge_indices.size(); ++i) {
        int ei = spec.edge_indices[i];
        int vi = spec.from_vertices[i];
        if (ei < 0 || ei >= h.m())
            throw ValidationError("move_edges: edge index " + std::to_string(ei) + " out of range");
        Edge& e = edges[ei];
        if (std::binary_search(e.begin(), e.end(), spec.target_u))
            throw ValidationError("move_edges: target vertex " + std::to_string(spec.target_u) +
                                  " already lies in edge " + std::to_string(ei));
        auto it = std::find(e.begin(), e.end(), vi);
        if (it == e.end())
            throw ValidationError("move_edges: vertex " + std::to_string(vi) +
                                  " is not in edge " + std::to_string(ei));
        *it = spec.target_u;
        std::sort(e.begin(), e.end());
    }
    detail::check_no_duplicates(edges);

    // A move that strands its source vertex is rejected rather than
    // silently shrinking the vertex set.
    std::vector<int> deg(h.n, 0);
    for (const Edge& e : edges)
        for (int v : e) ++deg[v];
    for (int v : spec.from_vertices)
        if (deg[v] == 0)
            throw ValidationError("move_edges: vertex " + std::to_string(v) +
                                  " would become isolated");

    return from_edges(h.k, h.n, std::move(edges));
}

inline Hypergraph switch_edges(const Hypergraph& h, const SwitchSpec& spec) {
    if (spec.edge_e == spec.edge_f)
        throw ValidationError("switch_edges: e and f must differ");
    if (spec.edge_e < 0 || spec.edge_e >= h.m() || spec.edge_f < 0 || spec.edge_f >= h.m())
        throw ValidationError("switch_edges: edge index out of range");
    std::size_t r = spec.u1.size();
    if (r != spec.v1.size())
        throw ValidationError("switch_edges: U1 and V1 differ in size");
    if (r < 1 || static_cast<int>(r) > h.k - 1)
        throw ValidationError("switch_edges: subset size must lie in [1, k-1]");

    const Edge& e = h.edges[spec.edge_e];
    const Edge& f = h.edges[spec.edge_f];
    auto subset_of = [](const std::vector<int>& sub, const Edge& edge, const char* name) {
        std::set<int> s(sub.begin(), sub.end());
        if (s.size() != sub.size())
            throw ValidationError(std::string("switch_edges: repeated vertex in ") + name);
        for (int v : s)
            if (!std::binary_search(edge.begin(), edge.end(), v))
                throw ValidationError(std::string("switch_edges: ") + name + " is not a subset of its edge");
        return s;
    };
    std::set<int> u1 = subset_of(spec.u1, e, "U1");
    std::set<int> v1 = subset_of(spec.v1, f, "V1");

    auto exchange = [&](const Edge& base, const std::set<int>& out, const std::set<int>& in) {
        std::set<int> result;
        for (int v : base)
            if (!out.count(v)) result.insert(v);
        for (int v : in) result.insert(v);
        if (static_cast<int>(result.size()) != h.k)
            throw ValidationError("switch_edges: replacement edge does not have k distinct vertices");
        return Edge(result.begin(), result.end());
    };
    std::vector<Edge> edges = h.edges;
    edges[spec.edge_e] = exchange(e, u1, v1);
    edges[spec.edge_f] = exchange(f, v1, u1);
    detail::check_no_duplicates(edges);
    return from_edges(h.k, h.n, std::move(edges));
}

/// Numeric gate for edge-moving monotonicity: the target component must
/// dominate every moved-from component with slack, so the certified strict
/// increase of rho survives solver error.
inline bool check_move_hypothesis(const Hypergraph& h, const MoveSpec& spec, const EigenPair& pair,
                                  double slack = 1e-9) {
    if (static_cast<int>(pair.x.size()) != h.n)
        throw Error("check_move_hypothesis: eigenvector length mismatch");
    double xu = pair.x[spec.target_u];
    for (int v : spec.from_vertices)
        if (!(xu - pair.x[v] > slack)) return false;
    return true;
}

} // namespace uhs
