#pragma once

#include <algorithm>
#include <bitset>
#include <numeric>
#include <vector>

#include "uhs/hypergraph.hpp"

namespace uhs {

/// Maximum matching: a largest set of pairwise vertex-disjoint edges.
struct MatchingResult {
    int alpha = 0;
    std::vector<int> witness;  // edge indices, ascending; lexicographically
                               // least among all maximum matchings
};

enum class FilterMode { AtLeast, Exact };

namespace detail {

constexpr int kMaxMatchVertices = 256;
using VertexMask = std::bitset<kMaxMatchVertices>;

struct MatchSearch {
    int k = 0;
    int m = 0;
    std::vector<VertexMask> masks;   // per original edge index
    std::vector<int> order;          // edge indices by degree-sum, heaviest first

    explicit MatchSearch(const Hypergraph& h) : k(h.k), m(h.m()) {
        if (h.n > kMaxMatchVertices)
            throw Error("matching_number: vertex count exceeds supported limit");
        masks.resize(m);
        for (int i = 0; i < m; ++i)
            for (int v : h.edges[i]) masks[i].set(v);
        auto deg = degrees(h);
        std::vector<int> weight(m, 0);
        for (int i = 0; i < m; ++i)
            for (int v : h.edges[i]) weight[i] += deg[v];
        order.resize(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return weight[a] > weight[b]; });
    }

    // Best matching size reachable from position pos of the given index
    // sequence. Bound: edges left, and free vertices divided by k.
    int search(const std::vector<int>& seq, std::size_t pos, const VertexMask& used, int free_v,
               int have, int best) const {
        best = std::max(best, have);
        if (pos == seq.size()) return best;
        int remaining = static_cast<int>(seq.size() - pos);
        if (have + std::min(remaining, free_v / k) <= best) return best;
        int e = seq[pos];
        if ((masks[e] & used).none())
            best = search(seq, pos + 1, used | masks[e], free_v - k, have + 1, best);
        return search(seq, pos + 1, used, free_v, have, best);
    }
};

} // namespace detail

/// Exact matching number by branch and bound, plus the lexicographically
/// least maximum matching as witness.
inline MatchingResult matching_number(const Hypergraph& h) {
    detail::MatchSearch s(h);
    detail::VertexMask none;
    int alpha = s.search(s.order, 0, none, h.n, 0, 0);

    MatchingResult result;
    result.alpha = alpha;
    detail::VertexMask used;
    int have = 0;
    std::vector<int> rest;
    for (int i = 0; i < s.m && have < alpha; ++i) {
        if ((s.masks[i] & used).any()) continue;
        rest.clear();
        for (int j = i + 1; j < s.m; ++j) rest.push_back(j);
        int with_i = s.search(rest, 0, used | s.masks[i], h.n - (have + 1) * h.k, have + 1, 0);
        if (with_i == alpha) {
            result.witness.push_back(i);
            used |= s.masks[i];
            ++have;
        }
    }
    return result;
}

/// Membership test for the z-constrained unicyclic classes: connected,
/// exactly one cycle, and matching number at least z (AtLeast) or exactly z
/// (Exact).
inline bool class_filter(const Hypergraph& h, int z, FilterMode mode) {
    if (z < 1) throw Error("class_filter: z must be at least 1");
    if (!is_connected(h)) return false;
    if ((h.k - 1) * h.m() - (h.n - 1) != 1) return false;
    int alpha = matching_number(h).alpha;
    return mode == FilterMode::AtLeast ? alpha >= z : alpha == z;
}

} // namespace uhs
