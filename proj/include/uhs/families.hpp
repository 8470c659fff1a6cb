#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uhs/hypergraph.hpp"

namespace uhs {

/// Parameters of the two-cycle pendant families U(n,k; f; r,s; t,w).
///
/// The graph is grown from a 2-cycle v1 e1 v2 e2 v1 by attaching, in order:
/// f pendant edges at v2; r pendant edges on distinct vertices of
/// e1 \ {v1,v2}; s on e2 \ {v1,v2}; t extra edges at v1 whose k-1 other
/// vertices each carry one pendant edge; when w >= 1, one extra edge at v1
/// with exactly w of its other vertices carrying one pendant edge each; and
/// finally enough pendant edges at v1 to reach m edges in total.
struct FamilyParams {
    int k = 3;
    int m = 2;
    int f = 0;
    int r = 0;
    int s = 0;
    int t = 0;
    int w = 0;

    int z() const { return f + r + s + t * (k - 1) + w + 1; }
    int n() const { return (k - 1) * m; }

    /// Pendant edges attached directly at v1 by the final step.
    int pendant_at_v1() const {
        int w_edge = w >= 1 ? 1 : 0;
        return m - f - r - s - t - t * (k - 1) - w - w_edge - 2;
    }

    /// The matching number of the built graph equals z() exactly when a
    /// matching of the hanging pendant edges extends by one edge incident to
    /// v1: a v1-pendant edge, or a cycle edge free of attachments.
    bool matching_formula_applies() const {
        return pendant_at_v1() >= 1 || (f == 0 && (r == 0 || s == 0));
    }

    void check() const {
        auto fail = [](const std::string& msg) { throw ValidationError("family params: " + msg); };
        if (k < 3) fail("k must be at least 3, got " + std::to_string(k));
        if (m < 2) fail("m must be at least 2, got " + std::to_string(m));
        if (f < 0 || f > 1) fail("f must be 0 or 1, got " + std::to_string(f));
        if (r < 0 || r > k - 2) fail("r must lie in [0, k-2], got " + std::to_string(r));
        if (s < 0 || s > k - 2) fail("s must lie in [0, k-2], got " + std::to_string(s));
        if (w < 0 || w > k - 2) fail("w must lie in [0, k-2], got " + std::to_string(w));
        if (t < 0) fail("t must be nonnegative, got " + std::to_string(t));
        if (pendant_at_v1() < 0)
            fail("edge budget infeasible: pendant count at v1 would be " +
                 std::to_string(pendant_at_v1()));
    }
};

/// Where each edge of a built family instance came from.
struct FamilyRoles {
    int v1 = 0;
    int v2 = 0;
    int e1 = 0;  // cycle edge carrying the r attachments
    int e2 = 0;  // cycle edge carrying the s attachments
    std::vector<int> f_edges;
    std::vector<int> r_edges;
    std::vector<int> s_edges;
    std::vector<int> t_edges;
    std::vector<std::vector<int>> t_pendants;  // parallel to t_edges
    std::optional<int> w_edge;
    std::vector<int> w_pendants;
    std::vector<int> p_edges;  // pendant edges at v1
};

struct FamilyInstance {
    Hypergraph graph;
    FamilyParams params;
    FamilyRoles roles;
};

/// Extremal presets: G1..G6 keyed by the (m, z) regime they are extremal for.
enum class Preset { G1, G2, G3, G4, G5, G6 };

inline const char* preset_name(Preset p) {
    switch (p) {
        case Preset::G1: return "G1";
        case Preset::G2: return "G2";
        case Preset::G3: return "G3";
        case Preset::G4: return "G4";
        case Preset::G5: return "G5";
        case Preset::G6: return "G6";
    }
    return "?";
}

inline std::optional<Preset> preset_from_name(const std::string& s) {
    for (Preset p : {Preset::G1, Preset::G2, Preset::G3, Preset::G4, Preset::G5, Preset::G6})
        if (s == preset_name(p)) return p;
    return std::nullopt;
}

/// Deterministic construction. Vertices are numbered v1=0, v2=1, then cycle
/// fill, then step order; rerunning yields a bit-identical edge list.
inline FamilyInstance build_family(const FamilyParams& P) {
    P.check();
    const int k = P.k;
    int next = 0;

    enum StepTag { TagE1, TagE2, TagF, TagR, TagS, TagT, TagTPend, TagW, TagWPend, TagP };
    struct Raw {
        Edge e;
        StepTag tag;
        int group = -1;  // index of the owning t-edge for TagTPend
    };
    std::vector<Raw> raw;

    auto fresh = [&next](int count) {
        std::vector<int> v(count);
        for (int i = 0; i < count; ++i) v[i] = next++;
        return v;
    };
    auto pendant_at = [&](int anchor, StepTag tag, int group = -1) {
        Edge e{anchor};
        for (int v : fresh(k - 1)) e.push_back(v);
        raw.push_back({std::move(e), tag, group});
    };

    const int v1 = next++;
    const int v2 = next++;
    std::vector<int> e1_extra = fresh(k - 2);
    std::vector<int> e2_extra = fresh(k - 2);
    {
        Edge e1{v1, v2};
        e1.insert(e1.end(), e1_extra.begin(), e1_extra.end());
        raw.push_back({std::move(e1), TagE1});
        Edge e2{v1, v2};
        e2.insert(e2.end(), e2_extra.begin(), e2_extra.end());
        raw.push_back({std::move(e2), TagE2});
    }

    for (int i = 0; i < P.f; ++i) pendant_at(v2, TagF);
    for (int i = 0; i < P.r; ++i) pendant_at(e1_extra[i], TagR);
    for (int i = 0; i < P.s; ++i) pendant_at(e2_extra[i], TagS);
    for (int i = 0; i < P.t; ++i) {
        std::vector<int> others = fresh(k - 1);
        Edge e{v1};
        e.insert(e.end(), others.begin(), others.end());
        raw.push_back({std::move(e), TagT, i});
        for (int v : others) pendant_at(v, TagTPend, i);
    }
    if (P.w >= 1) {
        std::vector<int> others = fresh(k - 1);
        Edge e{v1};
        e.insert(e.end(), others.begin(), others.end());
        raw.push_back({std::move(e), TagW});
        for (int i = 0; i < P.w; ++i) pendant_at(others[i], TagWPend);
    }
    for (int i = 0; i < P.pendant_at_v1(); ++i) pendant_at(v1, TagP);

    // Sort into storage order, then map each raw position to its final index.
    std::vector<int> perm(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&raw](int a, int b) { return raw[a].e < raw[b].e; });
    std::vector<int> where(raw.size());
    std::vector<Edge> edges(raw.size());
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
        where[perm[pos]] = static_cast<int>(pos);
        edges[pos] = raw[perm[pos]].e;
    }

    FamilyInstance inst;
    inst.params = P;
    inst.graph = Hypergraph{k, next, std::move(edges)};
    validate(inst.graph);

    FamilyRoles& roles = inst.roles;
    roles.v1 = v1;
    roles.v2 = v2;
    roles.t_edges.clear();
    std::vector<std::vector<int>> tpend(P.t);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        int idx = where[i];
        switch (raw[i].tag) {
            case TagE1: roles.e1 = idx; break;
            case TagE2: roles.e2 = idx; break;
            case TagF: roles.f_edges.push_back(idx); break;
            case TagR: roles.r_edges.push_back(idx); break;
            case TagS: roles.s_edges.push_back(idx); break;
            case TagT: roles.t_edges.push_back(idx); break;
            case TagTPend: tpend[raw[i].group].push_back(idx); break;
            case TagW: roles.w_edge = idx; break;
            case TagWPend: roles.w_pendants.push_back(idx); break;
            case TagP: roles.p_edges.push_back(idx); break;
        }
    }
    roles.t_pendants = std::move(tpend);
    return inst;
}

namespace detail {

inline int ceil_div(int a, int b) {
    // b > 0; rounds toward +infinity.
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

} // namespace detail

/// Parameter tuple of the named extremal case, checking the case's (k, m, z)
/// range.
inline FamilyParams preset(Preset which, int k, int m, int z) {
    auto fail = [&](const std::string& msg) {
        throw ValidationError(std::string("preset ") + preset_name(which) + ": " + msg);
    };
    if (k < 3) fail("k must be at least 3");
    if (z < 1) fail("z must be at least 1");
    FamilyParams P;
    P.k = k;
    P.m = m;
    switch (which) {
        case Preset::G1:
            if (m != z + 1) fail("requires m = z+1");
            if (z > k - 1) fail("requires z <= k-1 so that s = z-1 fits in [0, k-2]");
            P.s = z - 1;
            break;
        case Preset::G2:
            if (z != 1) fail("requires z = 1");
            if (m < z + 2) fail("requires m >= z+2");
            break;
        case Preset::G3:
            if (z != 2) fail("requires z = 2");
            if (m < z + 2) fail("requires m >= z+2");
            P.f = 1;
            break;
        case Preset::G4:
            if (z < 3 || z > k) fail("requires 3 <= z <= k");
            if (m < z + 2) fail("requires m >= z+2");
            P.f = 1;
            P.r = z - 2;
            break;
        case Preset::G5:
            if (z < k + 1 || z > 2 * k - 2) fail("requires k+1 <= z <= 2k-2");
            if (m < z + 2) fail("requires m >= z+2");
            P.f = 1;
            P.r = k - 2;
            P.s = z - k;
            break;
        case Preset::G6: {
            if (z < 2 * k - 1) fail("requires z >= 2k-1");
            if (m < z + 2) fail("requires m >= z+2");
            int zmax = m - 2 - detail::ceil_div(m - 2 * k, k - 1);
            if (z > zmax) fail("requires z <= m-2-ceil((m-2k)/(k-1)) = " + std::to_string(zmax));
            P.f = 1;
            P.r = k - 2;
            P.s = k - 2;
            P.t = (z - 2 * k + 2) / (k - 1);
            P.w = z - 2 * k + 2 - P.t * (k - 1);
            break;
        }
    }
    P.check();
    return P;
}

/// Case dispatch of the extremal theorems: which preset is the spectral
/// radius maximizer for the class (k, m, matching number z). Empty when no
/// case covers (k, m, z).
inline std::optional<std::pair<Preset, FamilyParams>> theorem_case(int k, int m, int z) {
    auto attempt = [&](Preset p) -> std::optional<std::pair<Preset, FamilyParams>> {
        try {
            return std::make_pair(p, preset(p, k, m, z));
        } catch (const ValidationError&) {
            return std::nullopt;
        }
    };
    if (k < 3 || z < 1 || m < z + 1) return std::nullopt;
    if (m == z + 1) return attempt(Preset::G1);
    if (z == 1) return attempt(Preset::G2);
    if (z == 2) return attempt(Preset::G3);
    if (z <= k) return attempt(Preset::G4);
    if (z <= 2 * k - 2) return attempt(Preset::G5);
    return attempt(Preset::G6);
}

} // namespace uhs
