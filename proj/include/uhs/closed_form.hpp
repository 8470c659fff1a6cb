#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "uhs/hypergraph.hpp"
#include "uhs/spectral.hpp"

namespace uhs {

/// Deviation of principal-eigenvector components from their closed-form
/// values, split by vertex class.
struct ClosedFormReport {
    int t = 0;
    std::optional<double> attached_defect;    // vertices carrying a pendant edge
    std::optional<double> unattached_defect;  // remaining degree-1 vertices

    double max_defect() const {
        double d = 0.0;
        if (attached_defect) d = std::max(d, *attached_defect);
        if (unattached_defect) d = std::max(d, *unattached_defect);
        return d;
    }
};

namespace detail {

/// Splits the vertices of edge `e` outside `exclude` into those of degree 2
/// whose second edge is a pendant edge meeting `e` only there (attached) and
/// those of degree 1 (unattached). Any other pattern is a configuration
/// error.
struct EdgePattern {
    std::vector<int> attached;
    std::vector<int> unattached;
};

inline EdgePattern classify_edge_pattern(const Hypergraph& h, int edge_index,
                                         const std::vector<int>& exclude) {
    auto deg = degrees(h);
    auto inc = incidence(h);
    EdgePattern pattern;
    for (int v : h.edges[edge_index]) {
        if (std::find(exclude.begin(), exclude.end(), v) != exclude.end()) continue;
        if (deg[v] == 1) {
            pattern.unattached.push_back(v);
            continue;
        }
        if (deg[v] != 2)
            throw ValidationError("closed form: vertex " + std::to_string(v) +
                                  " has degree " + std::to_string(deg[v]) +
                                  ", expected 1 or 2");
        int other = inc[v][0] == edge_index ? inc[v][1] : inc[v][0];
        int heavy = 0;
        for (int w : h.edges[other])
            if (deg[w] > 1) ++heavy;
        if (heavy != 1)
            throw ValidationError("closed form: second edge at vertex " + std::to_string(v) +
                                  " is not a pendant edge");
        pattern.attached.push_back(v);
    }
    return pattern;
}

inline double class_defect(const EigenPair& pair, const std::vector<int>& vertices,
                           double predicted) {
    double d = 0.0;
    for (int v : vertices) d = std::max(d, std::abs(pair.x[v] - predicted));
    return d;
}

} // namespace detail

/// Identity check for a non-cycle edge e at anchor u whose other vertices
/// carry t pendant edges: attached components equal
/// x(u) / (rho * (1 - rho^{-k})^{(t+1)/k}), unattached ones
/// x(u) / (rho * (1 - rho^{-k})^{t/k}); the t = k-1 and t = 0 regimes reduce
/// to x(u) / (rho - rho^{-(k-1)}) and x(u) / rho.
inline ClosedFormReport check_closed_form_F(const Hypergraph& h, int anchor_u, int edge_e,
                                            int pendant_count_t, const EigenPair& pair) {
    if (anchor_u < 0 || anchor_u >= h.n || edge_e < 0 || edge_e >= h.m())
        throw ValidationError("closed form F: anchor or edge index out of range");
    if (h.m() < 2)
        throw ValidationError("closed form F: at least two edges required");
    const Edge& e = h.edges[edge_e];
    if (!std::binary_search(e.begin(), e.end(), anchor_u))
        throw ValidationError("closed form F: anchor vertex is not in the edge");
    auto pattern = detail::classify_edge_pattern(h, edge_e, {anchor_u});
    const int k = h.k;
    const int t = pendant_count_t;
    if (t < 0 || t > k - 1 || static_cast<int>(pattern.attached.size()) != t)
        throw ValidationError("closed form F: edge carries " +
                              std::to_string(pattern.attached.size()) +
                              " pendant attachments, expected t=" + std::to_string(t));

    const double rho = pair.rho;
    const double xu = pair.x[anchor_u];
    ClosedFormReport rep;
    rep.t = t;
    if (t == k - 1) {
        double w = xu / (rho - std::pow(rho, -(k - 1)));
        rep.attached_defect = detail::class_defect(pair, pattern.attached, w);
    } else if (t == 0) {
        double f = xu / rho;
        rep.unattached_defect = detail::class_defect(pair, pattern.unattached, f);
    } else {
        double base = 1.0 - std::pow(rho, -k);
        double w = xu / (rho * std::pow(base, (t + 1.0) / k));
        double f = xu / (rho * std::pow(base, static_cast<double>(t) / k));
        rep.attached_defect = detail::class_defect(pair, pattern.attached, w);
        rep.unattached_defect = detail::class_defect(pair, pattern.unattached, f);
    }
    return rep;
}

/// Identity check for a 2-cycle edge e1 through v1, v2 whose other vertices
/// carry t-1 pendant edges: attached components equal
/// sqrt(x(v1) x(v2) / phi) with phi = rho * (1 - rho^{-k})^{(t+1)/k},
/// unattached ones carry the extra factor (1 - rho^{-k})^{1/k}; the t = k-1
/// and t = 1 regimes reduce to sqrt(x(v1) x(v2) / (rho - rho^{-(k-1)})) and
/// sqrt(x(v1) x(v2) / rho).
inline ClosedFormReport check_closed_form_W(const Hypergraph& h, int v1, int v2, int edge_e1,
                                            int pendant_count_t, const EigenPair& pair) {
    if (v1 < 0 || v1 >= h.n || v2 < 0 || v2 >= h.n || v1 == v2)
        throw ValidationError("closed form W: cycle vertices invalid");
    if (edge_e1 < 0 || edge_e1 >= h.m())
        throw ValidationError("closed form W: edge index out of range");
    const Edge& e1 = h.edges[edge_e1];
    if (!std::binary_search(e1.begin(), e1.end(), v1) ||
        !std::binary_search(e1.begin(), e1.end(), v2))
        throw ValidationError("closed form W: edge does not contain both cycle vertices");
    bool has_partner = false;
    for (int i = 0; i < h.m(); ++i) {
        if (i == edge_e1) continue;
        const Edge& e = h.edges[i];
        if (std::binary_search(e.begin(), e.end(), v1) &&
            std::binary_search(e.begin(), e.end(), v2)) {
            has_partner = true;
            break;
        }
    }
    if (!has_partner)
        throw ValidationError("closed form W: no second edge through both cycle vertices");

    auto pattern = detail::classify_edge_pattern(h, edge_e1, {v1, v2});
    const int k = h.k;
    const int t = pendant_count_t;
    if (t < 1 || t > k - 1 || static_cast<int>(pattern.attached.size()) != t - 1)
        throw ValidationError("closed form W: edge carries " +
                              std::to_string(pattern.attached.size()) +
                              " pendant attachments, expected t-1=" + std::to_string(t - 1));

    const double rho = pair.rho;
    const double g = pair.x[v1] * pair.x[v2];
    ClosedFormReport rep;
    rep.t = t;
    if (t == k - 1) {
        double w = std::sqrt(g / (rho - std::pow(rho, -(k - 1))));
        rep.attached_defect = detail::class_defect(pair, pattern.attached, w);
    } else if (t == 1) {
        double f = std::sqrt(g / rho);
        rep.unattached_defect = detail::class_defect(pair, pattern.unattached, f);
    } else {
        double base = 1.0 - std::pow(rho, -k);
        double phi = rho * std::pow(base, (t + 1.0) / k);
        double w = std::sqrt(g / phi);
        double f = std::pow(base, 1.0 / k) * w;
        rep.attached_defect = detail::class_defect(pair, pattern.attached, w);
        rep.unattached_defect = detail::class_defect(pair, pattern.unattached, f);
    }
    return rep;
}

} // namespace uhs
