// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Optional argv[1] = path to the CLI binary (criterion 10).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "subdivlab/audit.hpp"
#include "subdivlab/embedder.hpp"
#include "subdivlab/extremal.hpp"
#include "subdivlab/goodness.hpp"
#include "subdivlab/graph.hpp"
#include "subdivlab/packing.hpp"
#include "subdivlab/random_graphs.hpp"
#include "subdivlab/richness.hpp"
#include "subdivlab/subdivision.hpp"

using namespace subdiv;

namespace {

int failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int id, const std::string& name, bool ok, const std::string& detail, double secs) {
    std::printf("[%s] criterion %2d: %s (%s) [%.1fs]\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

// ---- criterion 1: subdivision arithmetic over all small multigraphs ----
void criterion_1() {
    Timer timer;
    long long checked = 0, wrong = 0;
    for (int t = 1; t <= 5; ++t) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v) slots.emplace_back(u, v);
        std::vector<int> mult(slots.size(), 0);
        auto enumerate = [&](auto&& self, size_t idx, int remaining) -> void {
            if (idx == slots.size()) {
                MultiGraph f(t);
                bool simple = true;
                for (size_t i = 0; i < slots.size(); ++i)
                    if (mult[i] > 0) {
                        f.add_edge(slots[i].first, slots[i].second, mult[i]);
                        if (mult[i] > 1) simple = false;
                    }
                long long total = f.total_multiplicity();
                for (int s = 0; s <= 4; ++s) {
                    if (s == 0 && !simple) continue;
                    SubdivisionSpec spec{f, s};
                    SimpleGraph g = subdivide(spec);
                    ++checked;
                    if (g.vertex_count() != t + static_cast<long long>(s) * total ||
                        g.edge_count() != static_cast<long long>(s + 1) * total)
                        ++wrong;
                }
                return;
            }
            for (int m = 0; m <= remaining; ++m) {
                mult[idx] = m;
                self(self, idx + 1, remaining - m);
            }
            mult[idx] = 0;
        };
        enumerate(enumerate, 0, 8);
    }
    double secs = timer.seconds();
    std::ostringstream detail;
    detail << checked << " subdivisions, " << wrong << " count mismatches";
    report(1, "subdivision arithmetic", wrong == 0 && secs < 1.0, detail.str(), secs);
}

// ---- criterion 2: small extremal values against the labeled oracle ----
void criterion_2() {
    Timer timer;
    const long long expected[] = {3, 4, 6, 7};
    SubdivisionSpec c4{MultiGraph::parallel_edges(2), 1};
    bool ok = true;
    std::ostringstream detail;
    for (int n = 3; n <= 6; ++n) {
        long long oracle_value = oracle::brute_force_ex_c4(n);  // computed first
        long long frozen = expected[n - 3];
        ExtremalResult main = ex_exact(n, c4);
        bool here = oracle_value == frozen && main.value == frozen &&
                    !oracle::contains_c4(main.witness) && main.witness.edge_count() == frozen;
        if (!here) ok = false;
        detail << "n=" << n << ":" << oracle_value << "/" << main.value << " ";
    }
    double secs = timer.seconds();
    report(2, "small extremal values ex(n, C_4)", ok && secs < 300.0, detail.str(), secs);
}

// ---- criterion 3: walk counts equal independent matrix powers ----
void criterion_3() {
    Timer timer;
    std::mt19937_64 meta(33);
    long long checked = 0, wrong = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(meta() % 7);
        double p = 0.15 + 0.1 * static_cast<double>(meta() % 8);
        SimpleGraph g = gen_erdos_renyi(n, p, meta());
        for (int i = 0; i <= 6; ++i) {
            auto power = oracle::matrix_power(g, i);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    ++checked;
                    if (count_walks(g, u, v, i).get_str() != power[u][v].to_decimal()) ++wrong;
                }
        }
    }
    std::ostringstream detail;
    detail << checked << " entries, " << wrong << " mismatches";
    report(3, "walk-count oracle", wrong == 0, detail.str(), timer.seconds());
}

// ---- criterion 4: disjoint-path guarantee for admissible-not-good paths ----
void criterion_4() {
    Timer timer;
    std::mt19937_64 meta(44);
    long long graphs = 0, candidates = 0, violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 5 + static_cast<int>(meta() % 6);  // 5..10
        double p = 0.35 + 0.08 * static_cast<double>(meta() % 8);
        SimpleGraph g = gen_erdos_renyi(n, p, meta());
        ++graphs;
        for (int L : {3, 4}) {
            ThresholdFamily fam = ThresholdFamily::pigeonhole_minimal(L, 3);
            GoodnessTable table = classify_paths(g, fam, 3);
            for (int len : {2, 3}) {
                if (L <= len) continue;  // lemma hypothesis L > len
                for (const auto& [path, flags] : table.paths(len)) {
                    if (!flags.admissible || flags.good) continue;
                    ++candidates;
                    Packing packing = max_disjoint_paths(g, path.front(), path.back(), len,
                                                         PackingMode::exact_max, 10'000'000, L);
                    if (packing.size() < L) ++violations;
                }
            }
        }
    }
    double secs = timer.seconds();
    std::ostringstream detail;
    detail << graphs << " graphs, " << candidates << " admissible-not-good paths, " << violations
           << " without a packing";
    report(4, "disjoint-path guarantee suite", violations == 0 && secs < 600.0, detail.str(),
           secs);
}

// ---- criterion 5: rich verdicts imply |V(H)| disjoint 2k-paths ----
void criterion_5() {
    Timer timer;
    std::vector<SimpleGraph> hosts;
    for (int leaves : {24, 25, 26, 30}) hosts.push_back(theta_graph(2, leaves));
    std::mt19937_64 meta(55);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 8 + static_cast<int>(meta() % 18);  // 8..25
        double p = 0.2 + 0.08 * static_cast<double>(meta() % 8);
        hosts.push_back(gen_erdos_renyi(n, p, meta()));
    }
    SubdivisionSpec spec{MultiGraph::complete(3), 1};
    long long rich_seen = 0, violations = 0;
    for (const auto& g : hosts) {
        if (g.vertex_count() < 2) continue;
        RichnessContext ctx(g, 1, spec, degree_profile(g), PackingMode::exact_max);
        for (int x = 0; x < g.vertex_count(); ++x)
            for (int y = 0; y < g.vertex_count(); ++y) {
                if (x == y) continue;
                for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}}) {
                    RichnessReport r = ctx.is_rich(x, y, i, j);
                    if (!r.rich) continue;
                    ++rich_seen;
                    Packing packing = max_disjoint_paths(g, std::min(x, y), std::max(x, y), 2,
                                                         PackingMode::exact_max, 10'000'000, 6);
                    if (packing.size() < 6) ++violations;
                }
            }
    }
    std::ostringstream detail;
    detail << hosts.size() << " hosts, " << rich_seen << " rich verdicts, " << violations
           << " violations";
    report(5, "rich pairs admit 6 disjoint 2k-paths", violations == 0, detail.str(),
           timer.seconds());
}

// ---- criterion 6: aux graphs clique-free on H-free hosts ----
void criterion_6() {
    Timer timer;
    SubdivisionSpec spec{MultiGraph::complete(3), 1};  // H = C_6
    std::mt19937_64 meta(66);
    std::vector<SimpleGraph> hosts;
    int attempts = 0;
    while (hosts.size() < 100 && attempts < 3000) {
        ++attempts;
        int n = 12 + static_cast<int>(meta() % 29);  // 12..40
        double p = (1.0 + 0.1 * static_cast<double>(meta() % 14)) / n;
        SimpleGraph g = gen_erdos_renyi(n, p, meta());
        auto res = find_subdivision_exact(g, spec);
        if (res.status == SearchStatus::none_certified) hosts.push_back(std::move(g));
    }
    long long witnesses = 0, aux_graphs = 0;
    for (const auto& g : hosts) {
        RichnessContext ctx(g, 1, spec, degree_profile(g), PackingMode::exact_max);
        for (int v = 0; v < g.vertex_count(); ++v) {
            AuxGraph single = aux_graph(ctx, v, 1);
            ++aux_graphs;
            if (static_cast<int>(single.tuples.size()) >= 3 &&
                !clique_free_up_to(single.to_simple_graph(), 3).clique_free)
                ++witnesses;
            AuxGraph united = aux_graph(ctx, v, 0);
            ++aux_graphs;
            if (static_cast<int>(united.tuples.size()) >= 6 &&
                !clique_free_up_to(united.to_simple_graph(), 6).clique_free)
                ++witnesses;
        }
    }
    std::ostringstream detail;
    detail << hosts.size() << " H-free hosts, " << aux_graphs << " aux graphs, " << witnesses
           << " witness cliques";
    report(6, "aux graphs clique-free", hosts.size() == 100 && witnesses == 0, detail.str(),
           timer.seconds());
}

// ---- criterion 7: oracle/guided consistency ----
void criterion_7() {
    Timer timer;
    std::mt19937_64 meta(77);
    SubdivisionSpec spec{MultiGraph::complete(3), 1};
    ThresholdFamily fam = ThresholdFamily::paper(2, 2);
    int inconsistencies = 0, certificates = 0, absences = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 8 + static_cast<int>(meta() % 13);  // 8..20
        double p = 0.15 + 0.05 * static_cast<double>(meta() % 10);
        SimpleGraph g = gen_erdos_renyi(n, p, meta());
        auto exact = find_subdivision_exact(g, spec);
        GuidedResult guided = find_subdivision_guided(g, 3, 1, 0.01, fam);
        if (guided.certificate) {
            ++certificates;
            if (!verify_certificate(g, *guided.certificate)) ++inconsistencies;
            if (exact.status == SearchStatus::none_certified) ++inconsistencies;
        }
        if (exact.status == SearchStatus::none_certified) ++absences;
    }
    std::ostringstream detail;
    detail << certificates << " guided certificates, " << absences << " certified absences, "
           << inconsistencies << " inconsistencies";
    report(7, "oracle/guided consistency", inconsistencies == 0, detail.str(), timer.seconds());
}

// ---- criterion 8: good-2k count trend on regular hosts ----
void criterion_8() {
    Timer timer;
    ThresholdFamily fam = ThresholdFamily::paper(2, 2);
    bool ok = true;
    std::ostringstream detail;
    for (int d : {6, 8, 10}) {
        double lo = 0.0, hi = 0.0;
        for (int n : {200, 400, 800}) {
            SimpleGraph g = gen_random_regular(n, d, 1000 + n + d);
            GoodnessTable table = classify_paths(g, fam, 2);
            std::vector<int> all(n);
            for (int v = 0; v < n; ++v) all[v] = v;
            double measured = static_cast<double>(count_good_within(table, all, 2));
            double bound = static_cast<double>(n) * n * d * d / n;
            double ratio = measured / bound;
            if (ratio <= 0.0) ok = false;
            if (lo == 0.0 || ratio < lo) lo = ratio;
            if (ratio > hi) hi = ratio;
        }
        detail << "d=" << d << ":[" << lo << "," << hi << "] ";
        if (hi > 4.0 * lo) ok = false;
    }
    double secs = timer.seconds();
    report(8, "good-2k trend on regular hosts", ok && secs < 900.0, detail.str(), secs);
}

// ---- criterion 9: explicit-constant audits strict on the grid ----
void criterion_9() {
    Timer timer;
    std::string config_text = R"(
k = 1
pattern = "K3"
family = "pigeonhole"
L = "3"
mode = "exact"
audits = ["4.6"]
seeds = [1, 2, 3, 4, 5]

[[hosts]]
kind = "erdos-renyi"
n = 8
param = 0.4

[[hosts]]
kind = "erdos-renyi"
n = 7
param = 0.6

[[hosts]]
kind = "random-regular"
n = 8
param = 4
)";
    ExperimentConfig cfg = ExperimentConfig::from_toml_text(config_text);
    auto records = run_lemma_audit(cfg);
    bool grid_ok = records.size() == 15 && !any_strict_failure(records);
    for (const auto& rec : records)
        if (rec.flag != AuditFlag::pass) grid_ok = false;

    // per-pair f-cap on the same hosts
    long long cap_violations = 0;
    ThresholdFamily fam = ThresholdFamily::pigeonhole_minimal(3, 2);
    for (const auto& host : cfg.hosts)
        for (auto seed : cfg.seeds) {
            SimpleGraph g = gen_random(host.kind, host.n, host.param, seed);
            GoodnessTable table = classify_paths(g, fam, 2);
            for (int len = 1; len <= 2; ++len)
                for (const auto& [pair, count] : table.pair_counts(len)) {
                    std::uint64_t good = table.good_count(pair.first, pair.second, len);
                    if (mpz_class(static_cast<unsigned long>(good)) > fam.f(len))
                        ++cap_violations;
                }
        }
    std::ostringstream detail;
    detail << records.size() << " audit records, f-cap violations " << cap_violations
           << ", exit-code-would-be " << (any_strict_failure(records) ? 1 : 0);
    report(9, "explicit-constant audits", grid_ok && cap_violations == 0, detail.str(),
           timer.seconds());
}

// ---- criterion 10: byte-identical CLI reruns (needs the binary path) ----
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_10(const char* cli_path) {
    Timer timer;
    if (!cli_path) {
        report(10, "CLI determinism", false, "CLI binary path not supplied", timer.seconds());
        return;
    }
    std::filesystem::create_directories("acceptance_tmp");
    bool ok = true;
    std::ostringstream detail;
    std::string cli = std::string("\"") + cli_path + "\"";

    auto run = [&](const std::string& cmd) {
        int rc = std::system(cmd.c_str());
        return rc;
    };

    // extremal-search rerun + worker variation
    std::string base = cli + " extremal-search --n 8 --pattern parallel:2 --s 1 --budget 3000"
                             " --seed 5 --chains 3";
    run(base + " --workers 1 --out acceptance_tmp/search_a.json > /dev/null");
    run(base + " --workers 1 --out acceptance_tmp/search_b.json > /dev/null");
    run(base + " --workers 3 --out acceptance_tmp/search_c.json > /dev/null");
    std::string a = slurp("acceptance_tmp/search_a.json");
    if (a.empty() || a != slurp("acceptance_tmp/search_b.json") ||
        a != slurp("acceptance_tmp/search_c.json")) {
        ok = false;
        detail << "extremal-search mismatch; ";
    }

    // lemma-audit rerun under different worker counts
    {
        std::ofstream cfg("acceptance_tmp/audit.toml");
        cfg << "k = 1\npattern = \"K3\"\nfamily = \"paper\"\nL = \"2\"\nmode = \"exact\"\n"
               "audits = [\"4.6\", \"2.6\"]\nseeds = [1, 2]\n\n"
               "[[hosts]]\nkind = \"erdos-renyi\"\nn = 8\nparam = 0.4\n\n"
               "[[hosts]]\nkind = \"erdos-renyi\"\nn = 7\nparam = 0.5\n";
    }
    run("SUBDIVLAB_WORKERS=1 " + cli +
        " lemma-audit --config acceptance_tmp/audit.toml --out-dir acceptance_tmp/audit1 > /dev/null");
    run("SUBDIVLAB_WORKERS=4 " + cli +
        " lemma-audit --config acceptance_tmp/audit.toml --out-dir acceptance_tmp/audit4 > /dev/null");
    std::string csv1 = slurp("acceptance_tmp/audit1/audit.csv");
    if (csv1.empty() || csv1 != slurp("acceptance_tmp/audit4/audit.csv")) {
        ok = false;
        detail << "lemma-audit csv mismatch; ";
    }
    if (slurp("acceptance_tmp/audit1/audit_config.json") !=
        slurp("acceptance_tmp/audit4/audit_config.json")) {
        ok = false;
        detail << "lemma-audit sidecar mismatch; ";
    }

    // classify-paths and find-subdivision reruns
    {
        std::ofstream host("acceptance_tmp/host.txt");
        host << "0 1\n1 2\n2 3\n3 0\n0 2\n";
    }
    std::string classify = cli + " classify-paths --input acceptance_tmp/host.txt --L 2"
                                 " --family paper --max-len 3";
    run(classify + " --report acceptance_tmp/cls_a.json > /dev/null");
    run(classify + " --report acceptance_tmp/cls_b.json > /dev/null");
    std::string cls = slurp("acceptance_tmp/cls_a.json");
    if (cls.empty() || cls != slurp("acceptance_tmp/cls_b.json")) {
        ok = false;
        detail << "classify-paths mismatch; ";
    }

    {
        std::ofstream host("acceptance_tmp/c6.txt");
        host << "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
    }
    std::string fs = cli + " find-subdivision --input acceptance_tmp/c6.txt --pattern K3 --s 1"
                           " --mode exact";
    run(fs + " --cert acceptance_tmp/cert_a.json > /dev/null");
    run(fs + " --cert acceptance_tmp/cert_b.json > /dev/null");
    std::string cert = slurp("acceptance_tmp/cert_a.json");
    if (cert.empty() || cert != slurp("acceptance_tmp/cert_b.json")) {
        ok = false;
        detail << "find-subdivision mismatch; ";
    }
    if (ok) detail << "all reruns byte-identical";
    report(10, "CLI determinism", ok, detail.str(), timer.seconds());
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(cli_path);
    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
