// Command-line workbench for k-uniform hypergraph spectra: family
// construction, spectral radius, matching numbers, isomorph-free
// enumeration, spectral-monotone edge surgeries, and the extremal-family
// verification harness.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uhs/canonical.hpp"
#include "uhs/enumerate.hpp"
#include "uhs/families.hpp"
#include "uhs/json_io.hpp"
#include "uhs/matching.hpp"
#include "uhs/spectral.hpp"
#include "uhs/transforms.hpp"
#include "uhs/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw uhs::Error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw uhs::Error("cannot open output file: " + out_path);
    out << text << "\n";
}

uhs::FilterMode parse_mode(const std::string& mode) {
    if (mode == "atleast") return uhs::FilterMode::AtLeast;
    if (mode == "exact") return uhs::FilterMode::Exact;
    throw uhs::Error("mode must be 'atleast' or 'exact', got '" + mode + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral workbench for k-uniform unicyclic hypergraphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string out_path;
    std::string format = "json";
    uhs::SolverConfig cfg;
    long long cap = 1000000;

    // family -----------------------------------------------------------
    auto* family = app.add_subcommand("family", "build a two-cycle pendant family instance");
    int fam_k = 3, fam_m = 2, fam_z = 1;
    int fam_f = 0, fam_r = 0, fam_s = 0, fam_t = 0, fam_w = 0;
    std::string fam_preset;
    family->add_option("--k", fam_k, "uniformity (>= 3)")->required();
    family->add_option("--m", fam_m, "edge count")->required();
    auto* preset_opt =
        family->add_option("--preset", fam_preset, "extremal preset G1..G6 (needs --z)");
    auto* z_opt = family->add_option("--z", fam_z, "target matching number for --preset");
    preset_opt->needs(z_opt);
    family->add_option("--f", fam_f, "pendant edges at v2 (0 or 1)");
    family->add_option("--r", fam_r, "pendant attachments on e1");
    family->add_option("--s", fam_s, "pendant attachments on e2");
    family->add_option("--t", fam_t, "fully-attached extra edges at v1");
    family->add_option("--w", fam_w, "attachments on the final extra edge at v1");
    family->add_option("--out", out_path, "output file (default stdout)");

    // rho ---------------------------------------------------------------
    auto* rho = app.add_subcommand("rho", "principal eigenpair of a hypergraph");
    rho->add_option("file", input, "hypergraph JSON file ('-' = stdin)");
    rho->add_option("--tol", cfg.tol, "residual target");
    rho->add_option("--max-iter", cfg.max_iter, "iteration cap");
    rho->add_option("--shift", cfg.shift, "diagonal shift");
    rho->add_option("--out", out_path, "output file (default stdout)");

    // matching ------------------------------------------------------------
    auto* matching = app.add_subcommand("matching", "exact matching number with witness");
    matching->add_option("file", input, "hypergraph JSON file ('-' = stdin)");
    matching->add_option("--out", out_path, "output file (default stdout)");

    // enumerate ------------------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate", "isomorph-free generation");
    int en_k = 3, en_m = 2;
    std::string en_shape = "unicyclic";
    std::string en_dir;
    bool en_count_only = false;
    enumerate->add_option("--k", en_k, "uniformity (>= 3)")->required();
    enumerate->add_option("--m", en_m, "edge count")->required();
    enumerate->add_option("--shape", en_shape, "unicyclic|supertree");
    enumerate->add_option("--out", en_dir, "directory: one JSON per class, named by key");
    enumerate->add_option("--cap", cap, "class cap");
    enumerate->add_flag("--count-only", en_count_only, "print the class count only");

    // transform ------------------------------------------------------------
    auto* transform = app.add_subcommand("transform", "spectral-monotone edge surgeries");
    transform->require_subcommand(1);
    auto* mv = transform->add_subcommand("move", "move edges onto a target vertex");
    std::vector<int> mv_edges, mv_from;
    int mv_to = 0;
    mv->add_option("--edges", mv_edges, "edge indices")->delimiter(',');
    mv->add_option("--from", mv_from, "moved-from vertices")->delimiter(',');
    mv->add_option("--to", mv_to, "target vertex")->required();
    mv->add_option("file", input, "hypergraph JSON file ('-' = stdin)");
    mv->add_option("--out", out_path, "output file (default stdout)");

    auto* sw = transform->add_subcommand("switch", "exchange vertex subsets between two edges");
    int sw_e = 0, sw_f = 0;
    std::vector<int> sw_u1, sw_v1;
    sw->add_option("--e", sw_e, "first edge index")->required();
    sw->add_option("--f", sw_f, "second edge index")->required();
    sw->add_option("--u1", sw_u1, "subset of e")->required()->delimiter(',');
    sw->add_option("--v1", sw_v1, "subset of f")->required()->delimiter(',');
    sw->add_option("file", input, "hypergraph JSON file ('-' = stdin)");
    sw->add_option("--out", out_path, "output file (default stdout)");

    // verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "extremal-family verification for one (k,m,z)");
    int vf_k = 3, vf_m = 3, vf_z = 1;
    std::string vf_mode = "atleast";
    verify->add_option("--k", vf_k, "uniformity (>= 3)")->required();
    verify->add_option("--m", vf_m, "edge count")->required();
    verify->add_option("--z", vf_z, "matching number bound")->required();
    verify->add_option("--mode", vf_mode, "atleast|exact");
    verify->add_option("--tol", cfg.tol, "solver tolerance");
    verify->add_option("--max-iter", cfg.max_iter, "solver iteration cap");
    verify->add_option("--shift", cfg.shift, "solver shift");
    verify->add_option("--cap", cap, "enumeration class cap");
    verify->add_option("--format", format, "json|text");
    verify->add_option("--out", out_path, "output file (default stdout)");

    // report ------------------------------------------------------------
    auto* report = app.add_subcommand("report", "tabulate verification reports");
    std::vector<std::string> report_files;
    report->add_option("files", report_files, "verify-report JSON files");
    report->add_option("--format", format, "text|csv|json");
    report->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*family) {
            uhs::FamilyParams P;
            if (!fam_preset.empty()) {
                auto which = uhs::preset_from_name(fam_preset);
                if (!which) throw uhs::Error("unknown preset: " + fam_preset);
                P = uhs::preset(*which, fam_k, fam_m, fam_z);
            } else {
                P = uhs::FamilyParams{fam_k, fam_m, fam_f, fam_r, fam_s, fam_t, fam_w};
            }
            emit(out_path, uhs::write_family_json(uhs::build_family(P)));
        } else if (*rho) {
            uhs::Hypergraph h = uhs::read_hypergraph_json(slurp(input));
            emit(out_path, uhs::write_eigenpair_json(uhs::principal_eigenpair(h, cfg)));
        } else if (*matching) {
            uhs::Hypergraph h = uhs::read_hypergraph_json(slurp(input));
            emit(out_path, uhs::write_matching_json(uhs::matching_number(h)));
        } else if (*enumerate) {
            uhs::GenSpec spec;
            spec.k = en_k;
            spec.m = en_m;
            spec.cap = cap;
            if (en_shape == "unicyclic")
                spec.shape = uhs::Shape::Unicyclic;
            else if (en_shape == "supertree")
                spec.shape = uhs::Shape::Supertree;
            else
                throw uhs::Error("shape must be 'unicyclic' or 'supertree'");
            auto classes = uhs::generate(spec);
            if (en_count_only) {
                std::cout << classes.size() << "\n";
            } else if (!en_dir.empty()) {
                std::filesystem::create_directories(en_dir);
                for (const uhs::Hypergraph& g : classes) {
                    std::string name = uhs::canonical_key(g).hex() + ".json";
                    std::ofstream out(std::filesystem::path(en_dir) / name);
                    out << uhs::write_hypergraph_json(g) << "\n";
                }
                std::cout << classes.size() << "\n";
            } else {
                for (const uhs::Hypergraph& g : classes)
                    std::cout << uhs::write_hypergraph_json(g) << "\n";
            }
        } else if (*mv) {
            uhs::Hypergraph h = uhs::read_hypergraph_json(slurp(input));
            emit(out_path, uhs::write_hypergraph_json(
                               uhs::move_edges(h, {mv_edges, mv_from, mv_to})));
        } else if (*sw) {
            uhs::Hypergraph h = uhs::read_hypergraph_json(slurp(input));
            emit(out_path, uhs::write_hypergraph_json(
                               uhs::switch_edges(h, {sw_e, sw_f, sw_u1, sw_v1})));
        } else if (*verify) {
            uhs::VerifyReport rep;
            try {
                rep = uhs::verify_theorem(vf_k, vf_m, vf_z, parse_mode(vf_mode), cfg, cap);
            } catch (const uhs::InfeasibleError& ex) {
                std::cerr << "error: " << ex.what() << "\n";
                return 4;
            }
            if (format == "text")
                emit(out_path, uhs::render_report_table({rep}, false));
            else
                emit(out_path, uhs::verify_report_to_json(rep).dump(2));
            if (rep.indeterminate) return 3;
            if (!rep.match) return 2;
        } else if (*report) {
            std::vector<uhs::VerifyReport> reports;
            for (const std::string& path : report_files) {
                uhs::json j = uhs::json::parse(slurp(path));
                if (j.is_array())
                    for (const auto& item : j) reports.push_back(uhs::verify_report_from_json(item));
                else
                    reports.push_back(uhs::verify_report_from_json(j));
            }
            if (format == "json") {
                uhs::json arr = uhs::json::array();
                for (const auto& r : reports) arr.push_back(uhs::verify_report_to_json(r));
                emit(out_path, arr.dump(2));
            } else {
                emit(out_path, uhs::render_report_table(reports, format == "csv"));
            }
            bool any_mismatch = false, any_tie = false;
            for (const auto& r : reports) {
                any_tie = any_tie || r.indeterminate;
                any_mismatch = any_mismatch || (!r.match && !r.indeterminate);
            }
            if (any_mismatch) return 2;
            if (any_tie) return 3;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
