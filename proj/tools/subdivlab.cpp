#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "subdivlab/audit.hpp"
#include "subdivlab/embedder.hpp"
#include "subdivlab/extremal.hpp"
#include "subdivlab/goodness.hpp"
#include "subdivlab/graph.hpp"
#include "subdivlab/numeric.hpp"
#include "subdivlab/regularize.hpp"
#include "subdivlab/richness.hpp"
#include "subdivlab/subdivision.hpp"

namespace {

using nlohmann::ordered_json;

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

ordered_json graph_json(const subdiv::SimpleGraph& g) {
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return ordered_json{{"n", g.vertex_count()}, {"edges", edges}};
}

int cmd_regularize(const std::string& input, double eps, double c, const std::string& output,
                   const std::string& report_path) {
    subdiv::SimpleGraph g = subdiv::read_simple_graph_file(input);
    subdiv::RegularizationResult result = subdiv::extract_almost_regular(g, eps, c);
    if (!output.empty()) subdiv::write_simple_graph_file(output, result.subgraph);
    if (!report_path.empty()) {
        ordered_json j;
        j["input_n"] = g.vertex_count();
        j["input_edges"] = g.edge_count();
        j["epsilon"] = eps;
        j["c"] = c;
        j["m"] = result.m;
        j["edges"] = result.subgraph.edge_count();
        j["vertex_subset"] = result.vertex_subset;
        j["min_degree"] = result.profile.min_degree;
        j["max_degree"] = result.profile.max_degree;
        j["achieved_density_exponent"] = result.achieved_density_exponent;
        j["edge_target_met"] = result.edge_target_met;
        j["ratio_target_met"] = result.ratio_target_met;
        j["size_target_met"] = result.size_target_met;
        j["log2_ratio_target"] = result.log2_ratio_target;
        write_text_file(report_path, j.dump(2) + "\n");
    }
    std::cout << "extracted " << result.m << " vertices, " << result.subgraph.edge_count()
              << " edges\n";
    return 0;
}

int cmd_classify(const std::string& input, const std::string& L, const std::string& family_kind,
                 int max_len, const std::string& report_path, std::uint64_t budget) {
    subdiv::SimpleGraph g = subdiv::read_simple_graph_file(input);
    subdiv::ThresholdFamily family = subdiv::make_family(family_kind, L, max_len);
    subdiv::GoodnessTable table = subdiv::classify_paths(g, family, max_len, budget);
    ordered_json j;
    j["input_n"] = g.vertex_count();
    j["input_edges"] = g.edge_count();
    j["family"] = family.kind_name();
    j["L"] = L;
    j["max_len"] = max_len;
    j["lengths"] = ordered_json::array();
    for (int len = 1; len <= max_len; ++len) {
        std::uint64_t admissible = 0, good = 0;
        for (const auto& [path, flags] : table.paths(len)) {
            admissible += flags.admissible;
            good += flags.good;
        }
        ordered_json lj;
        lj["length"] = len;
        lj["f"] = family.f(len).get_str();
        lj["paths"] = table.paths(len).size();
        lj["admissible"] = admissible;
        lj["good"] = good;
        if (len >= 2) {
            ordered_json bad = ordered_json::array();
            for (auto [u, v] : subdiv::bad_pairs(table, len).pairs) bad.push_back({u, v});
            lj["bad_pairs"] = bad;
        }
        j["lengths"].push_back(lj);
    }
    if (!report_path.empty()) write_text_file(report_path, j.dump(2) + "\n");
    std::cout << "classified " << table.total_paths() << " paths up to length " << max_len
              << "\n";
    return 0;
}

int cmd_rich_pairs(const std::string& input, int k, const std::string& pattern_spec,
                   const std::string& pairs_arg, const std::string& mode_name,
                   const std::string& report_path) {
    subdiv::SimpleGraph g = subdiv::read_simple_graph_file(input);
    subdiv::MultiGraph pattern = subdiv::parse_pattern_spec(pattern_spec);
    subdiv::SubdivisionSpec spec{pattern, 2 * k - 1};
    subdiv::DegreeProfile profile = subdiv::degree_profile(g);
    subdiv::PackingMode mode = mode_name == "greedy" ? subdiv::PackingMode::greedy_maximal
                                                     : subdiv::PackingMode::exact_max;
    subdiv::RichnessContext ctx(g, k, spec, profile, mode);

    std::vector<std::pair<int, int>> pairs;
    if (pairs_arg == "all") {
        for (int x = 0; x < g.vertex_count(); ++x)
            for (int y = x + 1; y < g.vertex_count(); ++y) pairs.emplace_back(x, y);
    } else {
        std::ifstream in(pairs_arg);
        if (!in) throw std::runtime_error("cannot open pairs file " + pairs_arg);
        int x, y;
        while (in >> x >> y) pairs.emplace_back(x, y);
    }

    ordered_json j;
    j["input_n"] = g.vertex_count();
    j["k"] = k;
    j["pattern"] = pattern_spec;
    j["h_size"] = ctx.h_size();
    j["T"] = ctx.T();
    j["mode"] = mode_name;
    j["pairs"] = ordered_json::array();
    for (auto [x, y] : pairs) {
        ordered_json pj;
        pj["x"] = x;
        pj["y"] = y;
        pj["tests"] = ordered_json::array();
        for (int i = 0; i <= k - 1; ++i)
            for (int jj = 0; jj <= k - 1; ++jj) {
                subdiv::RichnessReport r = ctx.is_rich(x, y, i, jj);
                ordered_json tj;
                tj["i"] = i;
                tj["j"] = jj;
                tj["witness_pairs"] = r.witness_pairs.get_str();
                tj["threshold"] = subdiv::rational_to_string(r.threshold);
                tj["verdict"] = r.rich ? "rich" : "poor";
                tj["certified"] = r.exact_certified;
                pj["tests"].push_back(tj);
            }
        j["pairs"].push_back(pj);
    }
    if (ctx.budget_was_hit()) j["budget_hit"] = true;
    if (!report_path.empty()) write_text_file(report_path, j.dump(2) + "\n");
    std::cout << "tested " << pairs.size() << " pairs\n";
    return 0;
}

int cmd_find_subdivision(const std::string& input, const std::string& pattern_spec, int s,
                         const std::string& mode, int t, int k, double eps, const std::string& L,
                         const std::string& cert_path, std::uint64_t budget) {
    subdiv::SimpleGraph g = subdiv::read_simple_graph_file(input);
    if (mode == "exact") {
        subdiv::MultiGraph pattern = subdiv::parse_pattern_spec(pattern_spec);
        subdiv::SubdivisionSpec spec{pattern, s};
        auto result = subdiv::find_subdivision_exact(g, spec, budget);
        if (result.status == subdiv::SearchStatus::found) {
            if (!cert_path.empty())
                write_text_file(cert_path, subdiv::certificate_to_json(*result.certificate));
            std::cout << "found (nodes=" << result.nodes << ")\n";
            return 0;
        }
        std::cout << (result.status == subdiv::SearchStatus::none_certified
                          ? "none (certified)\n"
                          : "none (budget exhausted)\n");
        return result.status == subdiv::SearchStatus::none_certified ? 1 : 2;
    }
    // guided
    subdiv::ThresholdFamily family =
        subdiv::make_family("paper", L.empty() ? "2" : L, 2 * k);
    auto result = subdiv::find_subdivision_guided(g, t, k, eps, family);
    if (result.certificate) {
        if (!cert_path.empty())
            write_text_file(cert_path, subdiv::certificate_to_json(*result.certificate));
        std::cout << "found K_" << t << " subdivision via guided search\n";
        return 0;
    }
    ordered_json j;
    j["stage"] = result.failure->stage;
    j["step"] = subdiv::starve_step_name(result.failure->step);
    j["S_size"] = result.failure->s_size;
    j["Y_size"] = result.failure->y_size;
    j["Z_size"] = result.failure->z_size;
    j["S_prime_size"] = result.failure->s_prime_size;
    if (!cert_path.empty()) write_text_file(cert_path, j.dump(2) + "\n");
    std::cout << "starved at stage " << result.failure->stage << " ("
              << subdiv::starve_step_name(result.failure->step) << ")\n";
    return 1;
}

ordered_json extremal_json(const subdiv::ExtremalResult& r) {
    ordered_json j;
    j["n"] = r.n;
    j["s"] = r.spec.s;
    j["value"] = r.value;
    j["method"] = r.exhaustive ? "exhaustive" : "search";
    if (!r.exhaustive) {
        j["seed"] = r.seed;
        j["iterations"] = r.iterations;
    }
    j["witness"] = graph_json(r.witness);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subdivision toolkit: build, find and audit multigraph subdivisions"};
    app.require_subcommand(1);

    // regularize
    std::string reg_input, reg_output, reg_report;
    double reg_eps = 0.5, reg_c = 1.0;
    auto* reg = app.add_subcommand("regularize", "extract an almost-regular dense subgraph");
    reg->add_option("--input", reg_input)->required();
    reg->add_option("--epsilon", reg_eps)->required();
    reg->add_option("--c", reg_c)->required();
    reg->add_option("--output", reg_output);
    reg->add_option("--report", reg_report);

    // classify-paths
    std::string cls_input, cls_L = "2", cls_family = "paper", cls_report;
    int cls_max_len = 2;
    std::uint64_t cls_budget = 100'000'000;
    auto* cls = app.add_subcommand("classify-paths", "admissible/good path classification");
    cls->add_option("--input", cls_input)->required();
    cls->add_option("--L", cls_L)->required();
    cls->add_option("--family", cls_family);
    cls->add_option("--max-len", cls_max_len)->required();
    cls->add_option("--report", cls_report);
    cls->add_option("--budget", cls_budget);

    // rich-pairs
    std::string rich_input, rich_pattern, rich_pairs = "all", rich_mode = "greedy", rich_report;
    int rich_k = 1;
    auto* rich = app.add_subcommand("rich-pairs", "rich/poor pair classification");
    rich->add_option("--input", rich_input)->required();
    rich->add_option("--k", rich_k)->required();
    rich->add_option("--pattern", rich_pattern)->required();
    rich->add_option("--pairs", rich_pairs);
    rich->add_option("--mode", rich_mode)->check(CLI::IsMember({"greedy", "exact"}));
    rich->add_option("--report", rich_report);

    // find-subdivision
    std::string fs_input, fs_pattern, fs_mode = "exact", fs_L = "2", fs_cert;
    int fs_s = 1, fs_t = 3, fs_k = 1;
    double fs_eps = 0.01;
    std::uint64_t fs_budget = 50'000'000;
    auto* fs = app.add_subcommand("find-subdivision", "find a pattern subdivision in a host");
    fs->add_option("--input", fs_input)->required();
    fs->add_option("--pattern", fs_pattern);
    fs->add_option("--s", fs_s);
    fs->add_option("--mode", fs_mode)->check(CLI::IsMember({"exact", "guided"}));
    fs->add_option("--t", fs_t);
    fs->add_option("--k", fs_k);
    fs->add_option("--epsilon", fs_eps);
    fs->add_option("--L", fs_L);
    fs->add_option("--cert", fs_cert);
    fs->add_option("--budget", fs_budget);

    // extremal-exact
    std::string exe_pattern, exe_out;
    int exe_n = 4, exe_s = 1, exe_cap = 8;
    auto* exe = app.add_subcommand("extremal-exact", "exact extremal number at small n");
    exe->add_option("--n", exe_n)->required();
    exe->add_option("--pattern", exe_pattern)->required();
    exe->add_option("--s", exe_s)->required();
    exe->add_option("--cap", exe_cap);
    exe->add_option("--out", exe_out);

    // extremal-search
    std::string exs_pattern, exs_out;
    int exs_n = 10, exs_s = 1;
    std::uint64_t exs_budget = 20000, exs_seed = 1;
    int exs_chains = 4, exs_workers = 1;
    auto* exs = app.add_subcommand("extremal-search", "randomized extremal lower bound");
    exs->add_option("--n", exs_n)->required();
    exs->add_option("--pattern", exs_pattern)->required();
    exs->add_option("--s", exs_s)->required();
    exs->add_option("--budget", exs_budget)->required();
    exs->add_option("--seed", exs_seed)->required();
    exs->add_option("--chains", exs_chains);
    exs->add_option("--workers", exs_workers);
    exs->add_option("--out", exs_out);

    // lemma-audit
    std::string audit_config, audit_out_dir;
    auto* aud = app.add_subcommand("lemma-audit", "run the bound-audit grid");
    aud->add_option("--config", audit_config)->required();
    aud->add_option("--out-dir", audit_out_dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (reg->parsed()) return cmd_regularize(reg_input, reg_eps, reg_c, reg_output, reg_report);
        if (cls->parsed())
            return cmd_classify(cls_input, cls_L, cls_family, cls_max_len, cls_report, cls_budget);
        if (rich->parsed())
            return cmd_rich_pairs(rich_input, rich_k, rich_pattern, rich_pairs, rich_mode,
                                  rich_report);
        if (fs->parsed())
            return cmd_find_subdivision(fs_input, fs_pattern, fs_s, fs_mode, fs_t, fs_k, fs_eps,
                                        fs_L, fs_cert, fs_budget);
        if (exe->parsed()) {
            subdiv::SubdivisionSpec spec{subdiv::parse_pattern_spec(exe_pattern), exe_s};
            auto result = subdiv::ex_exact(exe_n, spec, exe_cap);
            std::string text = extremal_json(result).dump(2) + "\n";
            if (!exe_out.empty()) write_text_file(exe_out, text);
            std::cout << text;
            return 0;
        }
        if (exs->parsed()) {
            subdiv::SubdivisionSpec spec{subdiv::parse_pattern_spec(exs_pattern), exs_s};
            subdiv::AnnealOptions options;
            options.chains = exs_chains;
            options.workers = exs_workers;
            auto result = subdiv::ex_lower_search(exs_n, spec, exs_budget, exs_seed, options);
            std::string text = extremal_json(result).dump(2) + "\n";
            if (!exs_out.empty()) write_text_file(exs_out, text);
            std::cout << text;
            return 0;
        }
        if (aud->parsed()) {
            auto config = subdiv::ExperimentConfig::from_toml_file(audit_config);
            auto records = subdiv::run_lemma_audit(config);
            subdiv::write_audit_report(audit_out_dir, config, records);
            bool failed = subdiv::any_strict_failure(records);
            std::cout << records.size() << " audit records written to " << audit_out_dir
                      << (failed ? " (STRICT FAILURES)" : "") << "\n";
            return failed ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
