#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "uhs/hypergraph.hpp"

namespace uhs {

struct SolverConfig {
    double tol = 1e-10;      // target width of the eigenvalue bracket
    long max_iter = 1000000;
    double shift = 1.0;      // diagonal shift keeping the iteration convergent
};

/// Principal eigenpair of the adjacency tensor: A x^{k-1} = rho x^{[k-1]}
/// with x positive and sum_v x_v^k = 1.
struct EigenPair {
    double rho = 0.0;
    std::vector<double> x;
    double residual = 0.0;   // max_v |(A x^{k-1})_v - rho * x_v^{k-1}|
    long iterations = 0;
};

namespace detail {

inline double powi(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace detail

/// y_v = sum over edges e containing v of prod_{u in e, u != v} x_u.
/// Leave-one-out products are formed with prefix/suffix partials so zero or
/// tiny entries never enter a division.
inline std::vector<double> apply_adjacency(const Hypergraph& h, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != h.n)
        throw Error("apply_adjacency: vector length " + std::to_string(x.size()) +
                    " does not match vertex count " + std::to_string(h.n));
    const int k = h.k;
    std::vector<double> y(h.n, 0.0);
    std::vector<double> pre(k + 1), suf(k + 1);
    for (const Edge& e : h.edges) {
        pre[0] = 1.0;
        for (int i = 0; i < k; ++i) pre[i + 1] = pre[i] * x[e[i]];
        suf[k] = 1.0;
        for (int i = k - 1; i >= 0; --i) suf[i] = suf[i + 1] * x[e[i]];
        for (int i = 0; i < k; ++i) y[e[i]] += pre[i] * suf[i + 1];
    }
    return y;
}

/// x^T A x^{k-1} = k * sum over edges of prod_{v in e} x_v, for x normalized
/// to sum x_v^k = 1. Over nonnegative normalized vectors this functional is
/// maximized exactly at the principal eigenvector, where it equals rho.
inline double rayleigh_value(const Hypergraph& h, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != h.n)
        throw Error("rayleigh_value: vector length mismatch");
    double norm = 0.0;
    for (double v : x) norm += detail::powi(v, h.k);
    if (std::abs(norm - 1.0) > 1e-9)
        throw Error("rayleigh_value: input not normalized, sum x^k = " + std::to_string(norm));
    double total = 0.0;
    for (const Edge& e : h.edges) {
        double p = 1.0;
        for (int v : e) p *= x[v];
        total += p;
    }
    return h.k * total;
}

/// Shifted power iteration for the spectral radius of a connected
/// hypergraph. Each step applies y = A x^{k-1} + shift * x^{[k-1]}, brackets
/// rho + shift between min and max of y_v / x_v^{k-1}, takes the (k-1)-th
/// root and renormalizes. Convergence is declared when the bracket width
/// drops below tol, so the reported rho carries certified two-sided bounds.
inline EigenPair principal_eigenpair(const Hypergraph& h, const SolverConfig& cfg = {}) {
    if (cfg.tol <= 0.0) throw Error("principal_eigenpair: tol must be positive");
    if (cfg.max_iter < 1) throw Error("principal_eigenpair: max_iter must be at least 1");
    if (cfg.shift < 0.0) throw Error("principal_eigenpair: shift must be nonnegative");
    if (!is_connected(h))
        throw Error("principal_eigenpair: hypergraph is disconnected");

    const int n = h.n;
    const int k = h.k;
    std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / k));

    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    bool converged = false;
    long it = 0;
    while (it < cfg.max_iter) {
        ++it;
        std::vector<double> y = apply_adjacency(h, x);
        lo = std::numeric_limits<double>::infinity();
        hi = -std::numeric_limits<double>::infinity();
        for (int v = 0; v < n; ++v) {
            double xk1 = detail::powi(x[v], k - 1);
            y[v] += cfg.shift * xk1;
            double ratio = y[v] / xk1;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (hi - lo <= cfg.tol) {
            converged = true;
            break;
        }
        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            x[v] = std::pow(y[v], 1.0 / (k - 1));
            norm += detail::powi(x[v], k);
        }
        double scale = std::pow(norm, -1.0 / k);
        for (int v = 0; v < n; ++v) x[v] *= scale;
    }
    if (!converged)
        throw Error("principal_eigenpair: no convergence after " + std::to_string(cfg.max_iter) +
                    " iterations, last bounds [" + std::to_string(lo - cfg.shift) + ", " +
                    std::to_string(hi - cfg.shift) + "]");

    EigenPair pair;
    pair.rho = 0.5 * (lo + hi) - cfg.shift;
    pair.x = std::move(x);
    pair.iterations = it;
    std::vector<double> ax = apply_adjacency(h, pair.x);
    double res = 0.0;
    for (int v = 0; v < n; ++v)
        res = std::max(res, std::abs(ax[v] - pair.rho * detail::powi(pair.x[v], k - 1)));
    pair.residual = res;
    return pair;
}

} // namespace uhs
