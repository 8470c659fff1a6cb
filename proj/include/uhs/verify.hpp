#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "uhs/canonical.hpp"
#include "uhs/enumerate.hpp"
#include "uhs/families.hpp"
#include "uhs/matching.hpp"
#include "uhs/spectral.hpp"

namespace uhs {

/// (k, m, z) outside every extremal case, or an empty class.
struct InfeasibleError : Error {
    using Error::Error;
};

struct VerifyReport {
    int k = 0;
    int m = 0;
    int z = 0;
    FilterMode mode = FilterMode::AtLeast;
    Preset preset_used = Preset::G1;
    long long class_size = 0;
    double max_rho = 0.0;
    CanonicalKey argmax_key;
    CanonicalKey expected_key;
    bool match = false;
    /// rho gap to the best competitor class; +infinity when the class is a
    /// singleton.
    double runner_up_gap = std::numeric_limits<double>::infinity();
    bool indeterminate = false;  // gap too small to certify a unique maximizer
};

/// Enumerates the whole class of connected unicyclic k-uniform hypergraphs
/// with m edges and matching number >= z (AtLeast) or == z (Exact), solves
/// every member's spectral radius, and compares the maximizer against the
/// extremal preset for (k, m, z) by canonical key. The maximizer counts as
/// certified only when the runner-up gap exceeds 10 * cfg.tol.
inline VerifyReport verify_theorem(int k, int m, int z, FilterMode mode,
                                   const SolverConfig& cfg = {}, long long cap = 1000000) {
    auto tc = theorem_case(k, m, z);
    if (!tc)
        throw InfeasibleError("verify: no extremal case covers k=" + std::to_string(k) +
                              " m=" + std::to_string(m) + " z=" + std::to_string(z));

    VerifyReport rep;
    rep.k = k;
    rep.m = m;
    rep.z = z;
    rep.mode = mode;
    rep.preset_used = tc->first;
    rep.expected_key = canonical_key(build_family(tc->second).graph);

    GenSpec gen;
    gen.k = k;
    gen.m = m;
    gen.shape = Shape::Unicyclic;
    gen.cap = cap;

    double best = -std::numeric_limits<double>::infinity();
    double second = -std::numeric_limits<double>::infinity();
    CanonicalKey best_key;
    for (const Hypergraph& g : generate(gen)) {
        if (!class_filter(g, z, mode)) continue;
        ++rep.class_size;
        double rho = principal_eigenpair(g, cfg).rho;
        if (rho > best) {
            second = best;
            best = rho;
            best_key = canonical_key(g);
        } else if (rho > second) {
            second = rho;
        }
    }
    if (rep.class_size == 0)
        throw InfeasibleError("verify: class is empty for k=" + std::to_string(k) +
                              " m=" + std::to_string(m) + " z=" + std::to_string(z));

    rep.max_rho = best;
    rep.argmax_key = best_key;
    rep.match = rep.argmax_key == rep.expected_key;
    if (rep.class_size > 1) {
        rep.runner_up_gap = best - second;
        rep.indeterminate = rep.runner_up_gap <= 10.0 * cfg.tol;
    }
    return rep;
}

inline const char* mode_name(FilterMode mode) {
    return mode == FilterMode::AtLeast ? "atleast" : "exact";
}

/// Text or CSV table of verification reports: passing rows first, each block
/// ordered by (k, m, z, mode).
inline std::string render_report_table(std::vector<VerifyReport> reports, bool csv = false) {
    auto rank = [](const VerifyReport& r) {
        return std::tuple(!(r.match && !r.indeterminate), r.k, r.m, r.z,
                          static_cast<int>(r.mode));
    };
    std::sort(reports.begin(), reports.end(),
              [&](const VerifyReport& a, const VerifyReport& b) { return rank(a) < rank(b); });

    std::ostringstream out;
    auto gap_text = [](const VerifyReport& r) -> std::string {
        if (!std::isfinite(r.runner_up_gap)) return "inf";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6e", r.runner_up_gap);
        return buf;
    };
    auto status = [](const VerifyReport& r) {
        return r.indeterminate ? "tie" : (r.match ? "ok" : "MISMATCH");
    };
    if (csv) {
        out << "k,m,z,mode,preset,class_size,max_rho,runner_up_gap,match,status\n";
        for (const auto& r : reports) {
            char rho[64];
            std::snprintf(rho, sizeof rho, "%.17g", r.max_rho);
            out << r.k << ',' << r.m << ',' << r.z << ',' << mode_name(r.mode) << ','
                << preset_name(r.preset_used) << ',' << r.class_size << ',' << rho << ','
                << gap_text(r) << ',' << (r.match ? "true" : "false") << ',' << status(r) << '\n';
        }
    } else {
        char line[256];
        std::snprintf(line, sizeof line, "%3s %3s %3s %-8s %-6s %10s %18s %14s %s\n", "k", "m",
                      "z", "mode", "preset", "class_size", "max_rho", "gap", "status");
        out << line;
        for (const auto& r : reports) {
            std::snprintf(line, sizeof line, "%3d %3d %3d %-8s %-6s %10lld %18.12f %14s %s\n",
                          r.k, r.m, r.z, mode_name(r.mode), preset_name(r.preset_used),
                          r.class_size, r.max_rho, gap_text(r).c_str(), status(r));
            out << line;
        }
    }
    return out.str();
}

} // namespace uhs
