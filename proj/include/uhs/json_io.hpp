#pragma once

#include <cstdio>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "uhs/families.hpp"
#include "uhs/hypergraph.hpp"
#include "uhs/matching.hpp"
#include "uhs/spectral.hpp"
#include "uhs/verify.hpp"

namespace uhs {

using json = nlohmann::ordered_json;

/// Strict reader for the wire format {"k": int, "n": int, "edges": [[...]]}.
/// Inner lists must be strictly ascending and the outer list strictly
/// lexicographically ascending; violations are rejected, never normalized.
/// Unknown extra keys (e.g. a "roles" annotation) are ignored.
inline Hypergraph read_hypergraph_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("hypergraph JSON parse error: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("edges"))
        throw ValidationError("hypergraph JSON must be an object with keys k, n, edges");
    if (!j["k"].is_number_integer() || !j["n"].is_number_integer() || !j["edges"].is_array())
        throw ValidationError("hypergraph JSON has wrong field types");
    Hypergraph h;
    h.k = j["k"].get<int>();
    h.n = j["n"].get<int>();
    for (const auto& je : j["edges"]) {
        if (!je.is_array())
            throw ValidationError("hypergraph JSON: edges must be arrays of vertex ids");
        Edge e;
        for (const auto& jv : je) {
            if (!jv.is_number_integer())
                throw ValidationError("hypergraph JSON: vertex ids must be integers");
            e.push_back(jv.get<int>());
        }
        h.edges.push_back(std::move(e));
    }
    validate(h);
    return h;
}

inline json hypergraph_to_json(const Hypergraph& h) {
    json j;
    j["k"] = h.k;
    j["n"] = h.n;
    j["edges"] = h.edges;
    return j;
}

inline std::string write_hypergraph_json(const Hypergraph& h) { return hypergraph_to_json(h).dump(); }

inline json roles_to_json(const FamilyInstance& inst) {
    const FamilyParams& P = inst.params;
    const FamilyRoles& R = inst.roles;
    json roles;
    roles["params"] = {{"k", P.k}, {"m", P.m},     {"f", P.f},
                       {"r", P.r}, {"s", P.s},     {"t", P.t},
                       {"w", P.w}, {"z", P.z()},   {"p", P.pendant_at_v1()}};
    roles["v1"] = R.v1;
    roles["v2"] = R.v2;
    roles["cycle_edges"] = {R.e1, R.e2};
    roles["f_edges"] = R.f_edges;
    roles["r_edges"] = R.r_edges;
    roles["s_edges"] = R.s_edges;
    roles["t_edges"] = R.t_edges;
    roles["t_pendants"] = R.t_pendants;
    if (R.w_edge)
        roles["w_edge"] = *R.w_edge;
    else
        roles["w_edge"] = nullptr;
    roles["w_pendants"] = R.w_pendants;
    roles["p_edges"] = R.p_edges;
    return roles;
}

inline std::string write_family_json(const FamilyInstance& inst) {
    json j = hypergraph_to_json(inst.graph);
    j["roles"] = roles_to_json(inst);
    return j.dump();
}

namespace detail {

inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

/// Eigenpair wire format with floats at 17 significant digits.
inline std::string write_eigenpair_json(const EigenPair& pair) {
    std::string out = "{\"rho\": " + detail::fmt17(pair.rho) + ", \"x\": [";
    for (std::size_t i = 0; i < pair.x.size(); ++i) {
        if (i) out += ", ";
        out += detail::fmt17(pair.x[i]);
    }
    out += "], \"residual\": " + detail::fmt17(pair.residual);
    out += ", \"iterations\": " + std::to_string(pair.iterations) + "}";
    return out;
}

inline std::string write_matching_json(const MatchingResult& r) {
    json j;
    j["alpha"] = r.alpha;
    j["witness"] = r.witness;
    return j.dump();
}

/// runner_up_gap serializes as null when the class is a singleton (the gap
/// is infinite).
inline json verify_report_to_json(const VerifyReport& r) {
    json j;
    j["k"] = r.k;
    j["m"] = r.m;
    j["z"] = r.z;
    j["mode"] = mode_name(r.mode);
    j["preset"] = preset_name(r.preset_used);
    j["class_size"] = r.class_size;
    j["max_rho"] = r.max_rho;
    j["argmax_key"] = r.argmax_key.hex();
    j["expected_key"] = r.expected_key.hex();
    j["match"] = r.match;
    if (std::isfinite(r.runner_up_gap))
        j["runner_up_gap"] = r.runner_up_gap;
    else
        j["runner_up_gap"] = nullptr;
    j["indeterminate"] = r.indeterminate;
    return j;
}

inline VerifyReport verify_report_from_json(const json& j) {
    VerifyReport r;
    r.k = j.at("k").get<int>();
    r.m = j.at("m").get<int>();
    r.z = j.at("z").get<int>();
    r.mode = j.at("mode").get<std::string>() == "exact" ? FilterMode::Exact : FilterMode::AtLeast;
    if (auto p = preset_from_name(j.at("preset").get<std::string>())) r.preset_used = *p;
    r.class_size = j.at("class_size").get<long long>();
    r.max_rho = j.at("max_rho").get<double>();
    auto hex_to_key = [](const std::string& hex) {
        CanonicalKey key;
        for (std::size_t i = 0; i + 1 < hex.size(); i += 2)
            key.bytes.push_back(static_cast<std::uint8_t>(std::stoi(hex.substr(i, 2), nullptr, 16)));
        return key;
    };
    r.argmax_key = hex_to_key(j.at("argmax_key").get<std::string>());
    r.expected_key = hex_to_key(j.at("expected_key").get<std::string>());
    r.match = j.at("match").get<bool>();
    if (j.at("runner_up_gap").is_null())
        r.runner_up_gap = std::numeric_limits<double>::infinity();
    else
        r.runner_up_gap = j.at("runner_up_gap").get<double>();
    r.indeterminate = j.at("indeterminate").get<bool>();
    return r;
}

} // namespace uhs
