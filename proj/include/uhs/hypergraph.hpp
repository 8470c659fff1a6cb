#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace uhs {

using Edge = std::vector<int>;

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data: bad edge, bad ordering, bad parameter.
struct ValidationError : Error {
    using Error::Error;
};

/// k-uniform hypergraph over dense vertex ids [0, n).
///
/// Storage invariants, checked by validate():
///   * every edge is a strictly ascending list of k distinct ids in [0, n)
///   * the edge list is strictly lexicographically ascending (hence simple)
///   * every vertex id occurs in at least one edge
struct Hypergraph {
    int k = 0;
    int n = 0;
    std::vector<Edge> edges;

    int m() const { return static_cast<int>(edges.size()); }
    bool operator==(const Hypergraph&) const = default;
};

/// Cycle of length q as an alternating sequence v0 e0 v1 e1 ... v(q-1) e(q-1) v0,
/// with edges[i] joining vertices[i] and vertices[(i+1) mod q].
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

struct StructureReport {
    bool connected = false;
    int cyclomatic_r = 0;          // (k-1)*m - (n-1)
    std::optional<Cycle> cycle;    // shortest cycle, lexicographically least form
    int degree_min = 0;
    int degree_max = 0;
    std::vector<int> pendant_edges;  // edge indices, ascending
    std::vector<int> pp_vertices;    // degree-1 vertices inside pendant edges
};

inline std::vector<int> degrees(const Hypergraph& h) {
    std::vector<int> deg(h.n, 0);
    for (const Edge& e : h.edges)
        for (int v : e) ++deg[v];
    return deg;
}

/// Vertex -> indices of incident edges.
inline std::vector<std::vector<int>> incidence(const Hypergraph& h) {
    std::vector<std::vector<int>> inc(h.n);
    for (int i = 0; i < h.m(); ++i)
        for (int v : h.edges[i]) inc[v].push_back(i);
    return inc;
}

inline bool is_connected(const Hypergraph& h) {
    if (h.n == 0) return false;
    auto inc = incidence(h);
    std::vector<char> seen(h.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int ei : inc[v])
            for (int w : h.edges[ei])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    q.push(w);
                }
    }
    return reached == h.n;
}

namespace detail {

inline Cycle normalize_cycle(const Cycle& c) {
    const int q = c.length();
    // Flatten to (v0, e0, v1, e1, ...) and take the minimum over all
    // rotations and both directions.
    std::vector<int> best;
    Cycle best_cycle;
    for (int dir : {+1, -1}) {
        for (int start = 0; start < q; ++start) {
            Cycle cand;
            for (int i = 0; i < q; ++i) {
                int vi = ((start + dir * i) % q + q) % q;
                int ei = dir == 1 ? vi : ((vi - 1) % q + q) % q;
                cand.vertices.push_back(c.vertices[vi]);
                cand.edges.push_back(c.edges[ei]);
            }
            std::vector<int> flat;
            for (int i = 0; i < q; ++i) {
                flat.push_back(cand.vertices[i]);
                flat.push_back(cand.edges[i]);
            }
            if (best.empty() || flat < best) {
                best = flat;
                best_cycle = cand;
            }
        }
    }
    return best_cycle;
}

} // namespace detail

/// All distinct cycles (up to rotation/reflection of the alternating
/// sequence), each in its lexicographically least form, sorted by
/// (length, sequence). Throws if more than max_cycles are found.
inline std::vector<Cycle> find_cycles(const Hypergraph& h, std::size_t max_cycles = 100000) {
    auto inc = incidence(h);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;

    std::vector<int> vpath, epath;
    std::vector<char> used_v(h.n, 0), used_e(h.m(), 0);

    auto record = [&](const Cycle& c) {
        Cycle norm = detail::normalize_cycle(c);
        seen.insert({norm.vertices, norm.edges});
        if (seen.size() > max_cycles)
            throw Error("find_cycles: cycle count exceeds cap");
    };

    // DFS over alternating vertex/edge paths from each start vertex.
    auto dfs = [&](auto&& self, int start, int at) -> void {
        for (int ei : inc[at]) {
            if (used_e[ei]) continue;
            const Edge& e = h.edges[ei];
            if (vpath.size() >= 2 && std::binary_search(e.begin(), e.end(), start)) {
                Cycle c{vpath, epath};
                c.edges.push_back(ei);
                record(c);
            }
            used_e[ei] = 1;
            epath.push_back(ei);
            for (int w : e) {
                if (used_v[w]) continue;
                used_v[w] = 1;
                vpath.push_back(w);
                self(self, start, w);
                vpath.pop_back();
                used_v[w] = 0;
            }
            epath.pop_back();
            used_e[ei] = 0;
        }
    };

    for (int a = 0; a < h.n; ++a) {
        used_v[a] = 1;
        vpath.push_back(a);
        dfs(dfs, a, a);
        vpath.pop_back();
        used_v[a] = 0;
    }

    std::vector<Cycle> out;
    for (const auto& [vs, es] : seen) out.push_back(Cycle{vs, es});
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.edges < b.edges;
    });
    return out;
}

/// Checks every storage invariant and computes the structure report.
/// Throws ValidationError naming the offending edge or vertex.
inline StructureReport validate(const Hypergraph& h) {
    if (h.k < 2) throw ValidationError("uniformity k must be at least 2, got " + std::to_string(h.k));
    if (h.n < h.k)
        throw ValidationError("vertex count n=" + std::to_string(h.n) +
                              " is smaller than uniformity k=" + std::to_string(h.k));
    if (h.edges.empty()) throw ValidationError("hypergraph has no edges");

    for (int i = 0; i < h.m(); ++i) {
        const Edge& e = h.edges[i];
        if (static_cast<int>(e.size()) != h.k)
            throw ValidationError("edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                                  " vertices, expected k=" + std::to_string(h.k));
        for (int v : e)
            if (v < 0 || v >= h.n)
                throw ValidationError("edge " + std::to_string(i) + " contains out-of-range vertex id " +
                                      std::to_string(v));
        for (std::size_t j = 1; j < e.size(); ++j)
            if (e[j - 1] >= e[j])
                throw ValidationError("edge " + std::to_string(i) +
                                      " is not strictly ascending (duplicate or unsorted vertex ids)");
        if (i > 0 && !(h.edges[i - 1] < e))
            throw ValidationError("edge list not in strictly ascending lexicographic order at edge " +
                                  std::to_string(i));
    }

    auto deg = degrees(h);
    for (int v = 0; v < h.n; ++v)
        if (deg[v] == 0)
            throw ValidationError("vertex " + std::to_string(v) + " is isolated (appears in no edge)");

    StructureReport rep;
    rep.connected = is_connected(h);
    rep.cyclomatic_r = (h.k - 1) * h.m() - (h.n - 1);
    rep.degree_min = *std::min_element(deg.begin(), deg.end());
    rep.degree_max = *std::max_element(deg.begin(), deg.end());

    for (int i = 0; i < h.m(); ++i) {
        int heavy = 0;
        for (int v : h.edges[i])
            if (deg[v] > 1) ++heavy;
        if (heavy == 1) rep.pendant_edges.push_back(i);
    }
    std::set<int> pp;
    for (int i : rep.pendant_edges)
        for (int v : h.edges[i])
            if (deg[v] == 1) pp.insert(v);
    rep.pp_vertices.assign(pp.begin(), pp.end());

    auto cycles = find_cycles(h);
    if (!cycles.empty()) rep.cycle = cycles.front();
    return rep;
}

/// Builds a hypergraph from arbitrary edge order, normalizing the storage
/// order and validating the result.
inline Hypergraph from_edges(int k, int n, std::vector<Edge> edges) {
    for (Edge& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    Hypergraph h{k, n, std::move(edges)};
    validate(h);
    return h;
}

/// Applies a vertex bijection perm (old id -> new id) and renormalizes.
inline Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != h.n)
        throw Error("relabel: permutation size mismatch");
    std::vector<Edge> edges = h.edges;
    for (Edge& e : edges)
        for (int& v : e) v = perm[v];
    return from_edges(h.k, h.n, std::move(edges));
}

/// Index of a (sorted) edge in the canonical edge list, if present.
inline std::optional<int> find_edge(const Hypergraph& h, const Edge& e) {
    auto it = std::lower_bound(h.edges.begin(), h.edges.end(), e);
    if (it != h.edges.end() && *it == e)
        return static_cast<int>(it - h.edges.begin());
    return std::nullopt;
}

/// Shortest alternating-path distance between two vertices of a connected
/// hypergraph. Coincides with BFS distance in the two-section graph: a
/// shortest walk never needs to revisit an edge or a vertex.
inline int distance(const Hypergraph& h, int u, int v) {
    if (u < 0 || u >= h.n || v < 0 || v >= h.n)
        throw Error("distance: vertex id out of range");
    if (!is_connected(h)) throw Error("distance: hypergraph is disconnected");
    if (u == v) return 0;
    auto inc = incidence(h);
    std::vector<int> dist(h.n, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int ei : inc[a])
            for (int b : h.edges[ei])
                if (dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    if (b == v) return dist[b];
                    q.push(b);
                }
    }
    throw Error("distance: vertex unreachable");  // unreachable on connected input
}

} // namespace uhs
