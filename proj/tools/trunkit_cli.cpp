// trunkit: generalized truncations of multigraphs. Construction, source
// recovery, and theorem verification suites.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trunkit/canonical.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/connectivity.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/io.hpp"
#include "trunkit/source_recovery.hpp"
#include "trunkit/truncation.hpp"
#include "trunkit/verify.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

trunkit::Multigraph read_input_graph(const std::string& input, std::string* raw = nullptr) {
    // catalog name or file path
    for (const auto& e : trunkit::catalog())
        if (e.name == input) {
            if (raw) *raw = trunkit::serialize_graph(e.graph);
            return e.graph;
        }
    std::ifstream f(input);
    if (!f) throw trunkit::precondition_error("cannot open input '" + input + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    if (raw) *raw = ss.str();
    return trunkit::parse_graph(ss.str());
}

int cmd_truncate(const std::string& input, const std::string& mode, double density,
                 std::uint64_t seed, const std::string& out_path, const std::string& dot_path) {
    std::string raw;
    trunkit::Multigraph x = read_input_graph(input, &raw);
    trunkit::Truncation t = [&] {
        if (mode == "complete") return trunkit::complete_truncation(x);
        if (mode == "paths") return trunkit::spanning_path_truncation(x);
        if (mode == "matching") return trunkit::matching_constituent_truncation(x);
        if (mode == "tree") return trunkit::spanning_tree_truncation(x);
        if (mode == "random") return trunkit::random_truncation(x, density, seed);
        throw trunkit::precondition_error("unknown mode '" + mode + "'");
    }();
    std::string text = trunkit::serialize_truncation(t);
    if (out_path.empty())
        std::cout << text;
    else {
        std::ofstream f(out_path);
        if (!f) throw trunkit::precondition_error("cannot write " + out_path);
        f << text;
    }
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw trunkit::precondition_error("cannot write " + dot_path);
        f << trunkit::export_dot(t);
    }
    return 0;
}

json source_set_json(const trunkit::SourceSet& set) {
    json out;
    out["matching_count"] = set.matching_count;
    out["certificate_count"] = set.certificate_count;
    out["isomorphism_classes"] = set.representatives.size();
    out["all_compared"] = set.all_compared;
    json reps = json::array();
    for (const auto& cert : set.representatives) {
        json c;
        c["matching"] = cert.matching;
        c["source"] = trunkit::serialize_graph(cert.recovered);
        c["order"] = cert.recovered.order();
        c["size"] = cert.recovered.size();
        json blocks = json::array();
        for (const auto& b : cert.blocks) blocks.push_back(b);
        c["blocks"] = blocks;
        reps.push_back(c);
    }
    out["sources"] = reps;
    return out;
}

int cmd_sources(const std::string& input, bool graph_only, bool coarsen) {
    std::string raw;
    trunkit::Multigraph y = read_input_graph(input, &raw);
    json out;
    out["version"] = kVersion;
    out["input_hash"] = trunkit::hex64(trunkit::fnv1a(raw));
    trunkit::SourceSet minimal =
        graph_only ? trunkit::graph_sources(y) : trunkit::minimal_sources(y);
    out["minimal"] = source_set_json(minimal);
    out["unique_certificate"] = trunkit::unique_source_certificate(y);
    if (coarsen && !minimal.representatives.empty()) {
        json co = json::array();
        for (const auto& cert : minimal.representatives)
            co.push_back(source_set_json(trunkit::coarsened_sources(y, cert)));
        out["coarsened"] = co;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int seeds, const std::string& only_instance) {
    if (!only_instance.empty()) trunkit::catalog_graph(only_instance);  // validate the name
    auto reports = trunkit::run_suites(suite, seeds);
    if (!only_instance.empty())
        for (auto& sr : reports) {
            std::vector<trunkit::VerificationReport> kept;
            for (auto& c : sr.checks)
                if (c.instance == only_instance) kept.push_back(c);
            sr.checks = kept;
        }
    json out;
    out["version"] = kVersion;
    out["seeds"] = seeds;
    {
        std::string catalog_bytes;
        for (const auto& e : trunkit::catalog()) catalog_bytes += trunkit::serialize_graph(e.graph);
        out["catalog_hash"] = trunkit::hex64(trunkit::fnv1a(catalog_bytes));
    }
    bool all = true;
    json suites = json::array();
    for (const auto& sr : reports) {
        json s;
        s["suite"] = sr.suite;
        s["pass"] = sr.all_pass();
        json checks = json::array();
        for (const auto& c : sr.checks) {
            json jc;
            jc["check"] = c.check;
            jc["instance"] = c.instance;
            jc["pass"] = c.pass;
            jc["details"] = c.details;
            if (!c.pass) jc["certificate"] = c.certificate;
            checks.push_back(jc);
        }
        s["checks"] = checks;
        suites.push_back(s);
        all = all && sr.all_pass();
    }
    out["suites"] = suites;
    out["pass"] = all;
    std::cout << out.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_export_dot(const std::string& input) {
    trunkit::Truncation t = trunkit::load_truncation(input);
    std::cout << trunkit::export_dot(t);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized truncations of multigraphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* tr = app.add_subcommand("truncate", "build a truncation of a source multigraph");
    std::string tr_input, tr_mode = "complete", tr_out, tr_dot;
    double tr_density = 0.5;
    std::uint64_t tr_seed = 0;
    tr->add_option("input", tr_input, "graph file or catalog name")->required();
    tr->add_option("--mode", tr_mode, "complete|paths|matching|tree|random")
        ->check(CLI::IsMember({"complete", "paths", "matching", "tree", "random"}));
    tr->add_option("--density", tr_density, "edge probability for --mode random");
    tr->add_option("--seed", tr_seed, "seed for --mode random");
    tr->add_option("-o,--output", tr_out, "truncation file (default stdout)");
    tr->add_option("--dot", tr_dot, "also write a DOT drawing");

    auto* so = app.add_subcommand("sources", "recover source multigraphs of a graph");
    std::string so_input;
    bool so_graph_only = false, so_coarsen = false;
    so->add_option("input", so_input, "graph file or catalog name")->required();
    so->add_flag("--graph-only", so_graph_only, "only simple sources (Cor 2.5 filter)");
    so->add_flag("--coarsen", so_coarsen, "also list amalgamated sources");

    auto* ve = app.add_subcommand("verify", "run theorem verification suites");
    std::string ve_suite = "all", ve_catalog;
    int ve_seeds = 10;
    ve->add_option("--suite", ve_suite, "source|conn|euler|ham|hamdecomp|color|planar|all")
        ->check(CLI::IsMember({"source", "conn", "euler", "ham", "hamdecomp", "color", "planar", "all"}));
    ve->add_option("--catalog", ve_catalog, "keep only checks for this catalog graph");
    ve->add_option("--seeds", ve_seeds, "seeded trials per sweep")->check(CLI::PositiveNumber);

    auto* ed = app.add_subcommand("export-dot", "render a truncation file as DOT");
    std::string ed_input;
    ed->add_option("input", ed_input, "truncation file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tr) return cmd_truncate(tr_input, tr_mode, tr_density, tr_seed, tr_out, tr_dot);
        if (*so) return cmd_sources(so_input, so_graph_only, so_coarsen);
        if (*ve) return cmd_verify(ve_suite, ve_seeds, ve_catalog);
        if (*ed) return cmd_export_dot(ed_input);
    } catch (const trunkit::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const trunkit::cap_exceeded& e) {
        std::cerr << "error: " << e.what()
                  << " (raise with TRUNKIT_CAP_OVERRIDE; may run long)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
