#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "uhs/hypergraph.hpp"

namespace uhs {

/// Isomorphism-invariant fingerprint: two hypergraphs have equal keys
/// exactly when they are isomorphic.
struct CanonicalKey {
    std::vector<std::uint8_t> bytes;

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(bytes.size() * 2);
        for (std::uint8_t b : bytes) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 0xf]);
        }
        return s;
    }
};

struct CanonicalResult {
    CanonicalKey key;
    std::vector<int> labeling;               // old id -> canonical id
    Hypergraph canonical_graph;              // relabeled copy in storage order
    std::vector<std::vector<int>> orbits;    // vertex orbits of the automorphism group
    std::vector<std::vector<int>> generators;  // automorphisms found during the search
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Canonical labeling via iterative color refinement plus backtracking over
/// tie cells. Sibling branches equivalent under already-discovered
/// automorphisms (restricted to those fixing the individualized prefix) are
/// pruned; automorphisms are harvested whenever two leaves produce the same
/// relabeled edge list.
class CanonSearch {
public:
    explicit CanonSearch(const Hypergraph& h) : h_(h), inc_(incidence(h)) {}

    CanonicalResult run() {
        std::vector<int> color(h_.n, 0);
        refine(color);
        descend(color);

        CanonicalResult res;
        res.labeling = best_lab_;
        res.canonical_graph = Hypergraph{h_.k, h_.n, best_cf_};
        res.generators = gens_;

        UnionFind uf(h_.n);
        for (const auto& g : gens_)
            for (int v = 0; v < h_.n; ++v) uf.unite(v, g[v]);
        std::map<int, std::vector<int>> blocks;
        for (int v = 0; v < h_.n; ++v) blocks[uf.find(v)].push_back(v);
        for (auto& [root, block] : blocks) res.orbits.push_back(block);

        res.key = encode(h_.k, h_.n, best_cf_);
        return res;
    }

    static CanonicalKey encode(int k, int n, const std::vector<Edge>& cf) {
        CanonicalKey key;
        auto push16 = [&key](int value) {
            key.bytes.push_back(static_cast<std::uint8_t>((value >> 8) & 0xff));
            key.bytes.push_back(static_cast<std::uint8_t>(value & 0xff));
        };
        push16(k);
        push16(n);
        push16(static_cast<int>(cf.size()));
        for (const Edge& e : cf)
            for (int v : e) push16(v);
        return key;
    }

private:
    const Hypergraph& h_;
    std::vector<std::vector<int>> inc_;

    std::vector<Edge> best_cf_, first_cf_;
    std::vector<int> best_lab_, first_lab_;
    bool have_first_ = false;
    std::vector<std::vector<int>> gens_;
    std::vector<int> path_;
    long nodes_ = 0;
    static constexpr long kNodeBudget = 2'000'000;

    // Equitable-style refinement. A vertex signature combines its current
    // color with the multiset, over incident edges, of the sorted colors of
    // the edge's other endpoints. Signatures are built from colors only, so
    // the derived ordering is label-invariant.
    void refine(std::vector<int>& color) const {
        for (;;) {
            int old_count = 1 + *std::max_element(color.begin(), color.end());
            using Sig = std::pair<int, std::vector<std::vector<int>>>;
            std::vector<std::pair<Sig, int>> sigs;
            sigs.reserve(h_.n);
            for (int v = 0; v < h_.n; ++v) {
                std::vector<std::vector<int>> profiles;
                for (int ei : inc_[v]) {
                    std::vector<int> prof;
                    for (int w : h_.edges[ei])
                        if (w != v) prof.push_back(color[w]);
                    std::sort(prof.begin(), prof.end());
                    profiles.push_back(std::move(prof));
                }
                std::sort(profiles.begin(), profiles.end());
                sigs.push_back({{color[v], std::move(profiles)}, v});
            }
            std::sort(sigs.begin(), sigs.end());
            int next = -1;
            for (std::size_t i = 0; i < sigs.size(); ++i) {
                if (i == 0 || sigs[i].first != sigs[i - 1].first) ++next;
                color[sigs[i].second] = next;
            }
            if (next + 1 == old_count) return;  // partition stable
        }
    }

    static void individualize(std::vector<int>& color, int v) {
        for (int& c : color) c *= 2;
        color[v] -= 1;
        compact(color);
    }

    static void compact(std::vector<int>& color) {
        std::vector<int> values(color);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int& c : color)
            c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    }

    std::vector<Edge> relabeled(const std::vector<int>& lab) const {
        std::vector<Edge> cf = h_.edges;
        for (Edge& e : cf) {
            for (int& v : e) v = lab[v];
            std::sort(e.begin(), e.end());
        }
        std::sort(cf.begin(), cf.end());
        return cf;
    }

    void add_automorphism(const std::vector<int>& lab_a, const std::vector<int>& lab_b) {
        // lab_a(E) == lab_b(E)  =>  lab_b^{-1} o lab_a fixes the edge set.
        std::vector<int> inv_b(h_.n);
        for (int v = 0; v < h_.n; ++v) inv_b[lab_b[v]] = v;
        std::vector<int> g(h_.n);
        bool identity = true;
        for (int v = 0; v < h_.n; ++v) {
            g[v] = inv_b[lab_a[v]];
            identity = identity && g[v] == v;
        }
        if (identity) return;
        for (const auto& have : gens_)
            if (have == g) return;
        gens_.push_back(std::move(g));
    }

    void emit_leaf(const std::vector<int>& color) {
        const std::vector<int>& lab = color;  // discrete: color is a bijection
        std::vector<Edge> cf = relabeled(lab);
        if (!have_first_) {
            have_first_ = true;
            first_cf_ = cf;
            first_lab_ = lab;
            best_cf_ = std::move(cf);
            best_lab_ = lab;
            return;
        }
        if (cf == first_cf_) add_automorphism(lab, first_lab_);
        if (cf < best_cf_) {
            best_cf_ = std::move(cf);
            best_lab_ = lab;
        } else if (cf == best_cf_ && lab != best_lab_) {
            add_automorphism(lab, best_lab_);
        }
    }

    // Orbits of the subgroup generated by automorphisms fixing the current
    // branching prefix pointwise; only those may prune siblings.
    UnionFind prefix_orbits() const {
        UnionFind uf(h_.n);
        for (const auto& g : gens_) {
            bool fixes = true;
            for (int p : path_)
                if (g[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < h_.n; ++v) uf.unite(v, g[v]);
        }
        return uf;
    }

    void descend(const std::vector<int>& color) {
        if (++nodes_ > kNodeBudget)
            throw Error("canonicalize: search node budget exceeded");
        int count = 1 + *std::max_element(color.begin(), color.end());
        if (count == h_.n) {
            emit_leaf(color);
            return;
        }
        // First non-singleton color class is the target cell.
        std::vector<std::vector<int>> classes(count);
        for (int v = 0; v < h_.n; ++v) classes[color[v]].push_back(v);
        int ci = 0;
        while (classes[ci].size() == 1) ++ci;

        std::vector<int> branched;
        for (int v : classes[ci]) {
            UnionFind uf = prefix_orbits();
            bool pruned = false;
            for (int b : branched)
                if (uf.find(b) == uf.find(v)) {
                    pruned = true;
                    break;
                }
            if (pruned) continue;
            branched.push_back(v);

            std::vector<int> child = color;
            individualize(child, v);
            refine(child);
            path_.push_back(v);
            descend(child);
            path_.pop_back();
        }
    }
};

} // namespace detail

inline CanonicalResult canonicalize(const Hypergraph& h) {
    return detail::CanonSearch(h).run();
}

inline CanonicalKey canonical_key(const Hypergraph& h) {
    return canonicalize(h).key;
}

/// Vertex orbit partition of Aut(h); blocks sorted by least member.
inline std::vector<std::vector<int>> automorphism_orbits(const Hypergraph& h) {
    return canonicalize(h).orbits;
}

} // namespace uhs
