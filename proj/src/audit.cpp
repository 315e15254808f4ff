#include "subdivlab/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "subdivlab/embedder.hpp"
#include "subdivlab/goodness.hpp"
#include "subdivlab/numeric.hpp"
#include "subdivlab/paths.hpp"
#include "subdivlab/random_graphs.hpp"
#include "subdivlab/richness.hpp"
#include "subdivlab/toml_lite.hpp"

namespace subdiv {

namespace {

std::string format_param(double value) {
    std::ostringstream ss;
    ss.precision(12);
    ss << value;
    return ss.str();
}

mpz_class binom2(long long m) {
    mpz_class z(static_cast<long>(m));
    return z * (z - 1) / 2;
}

}  // namespace

MultiGraph parse_pattern_spec(const std::string& text) {
    if (text.size() >= 2 && text[0] == 'K' &&
        std::all_of(text.begin() + 1, text.end(), [](char c) { return std::isdigit(c); })) {
        int t = std::stoi(text.substr(1));
        if (t < 1 || t > 32) throw std::invalid_argument("pattern: bad clique size in " + text);
        return MultiGraph::complete(t);
    }
    if (text.rfind("parallel:", 0) == 0) {
        int m = std::stoi(text.substr(9));
        if (m < 1) throw std::invalid_argument("pattern: bad multiplicity in " + text);
        return MultiGraph::parallel_edges(m);
    }
    return read_multigraph_file(text);
}

ThresholdFamily make_family(const std::string& kind, const std::string& L_text, int max_len) {
    mpq_class L = parse_rational(L_text);
    if (kind == "paper") {
        if (L.get_den() != 1)
            throw std::invalid_argument("paper family requires an integer L");
        return ThresholdFamily::paper(L.get_num(), max_len);
    }
    if (kind == "pigeonhole") return ThresholdFamily::pigeonhole_minimal(L, max_len);
    if (kind.rfind("custom:", 0) == 0) {
        std::ifstream in(kind.substr(7));
        if (!in) throw std::runtime_error("cannot open custom family file " + kind.substr(7));
        std::vector<mpz_class> values;
        std::string token;
        while (in >> token) values.emplace_back(token);
        if (static_cast<int>(values.size()) < max_len)
            throw std::invalid_argument("custom family file has fewer than max_len values");
        values.resize(max_len);
        return ThresholdFamily::custom(L, std::move(values));
    }
    throw std::invalid_argument("unknown family kind '" + kind + "'");
}

ExperimentConfig ExperimentConfig::from_toml_text(const std::string& text) {
    toml::Table root = toml::parse(text);
    ExperimentConfig cfg;
    cfg.k = static_cast<int>(toml::get_int(root, "k", 1));
    cfg.pattern_spec = toml::get_string(root, "pattern", "K3");
    cfg.family_kind = toml::get_string(root, "family", "paper");
    cfg.L_text = toml::get_string(root, "L", "2");
    cfg.C_text = toml::get_string(root, "C", "1");
    cfg.s_rule = toml::get_string(root, "s_rule", "all");
    cfg.mode = toml::get_string(root, "mode", "exact");
    cfg.enforce_delta_precondition =
        toml::get_bool(root, "enforce_delta_precondition", false);
    cfg.hfree_budget =
        static_cast<std::uint64_t>(toml::get_int(root, "hfree_budget", 20'000'000));
    cfg.packing_nodes =
        static_cast<std::uint64_t>(toml::get_int(root, "packing_nodes", 10'000'000));
    cfg.tuple_budget =
        static_cast<std::uint64_t>(toml::get_int(root, "tuple_budget", 2'000'000));
    cfg.path_budget =
        static_cast<std::uint64_t>(toml::get_int(root, "path_budget", 50'000'000));
    cfg.walk_budget =
        static_cast<std::uint64_t>(toml::get_int(root, "walk_budget", 5'000'000));
    cfg.workers = static_cast<int>(toml::get_int(root, "workers", 0));

    auto audits_it = root.find("audits");
    if (audits_it != root.end()) {
        for (const auto& v : audits_it->second.as_array()) cfg.audits.push_back(v.as_string());
    } else {
        cfg.audits = known_audits();
    }
    auto seeds_it = root.find("seeds");
    if (seeds_it != root.end()) {
        for (const auto& v : seeds_it->second.as_array())
            cfg.seeds.push_back(static_cast<std::uint64_t>(v.as_int()));
    } else {
        cfg.seeds = {1};
    }
    auto hosts_it = root.find("hosts");
    if (hosts_it == root.end()) throw std::invalid_argument("config: at least one [[hosts]] required");
    for (const auto& t : hosts_it->second.as_table_array()) {
        HostSpec h;
        h.kind = toml::get_string(t, "kind", "erdos-renyi");
        h.n = static_cast<int>(toml::get_int(t, "n", 0));
        h.param = toml::get_number(t, "param", 0.0);
        h.path = toml::get_string(t, "path", "");
        cfg.hosts.push_back(h);
    }
    for (const auto& a : cfg.audits) {
        const auto& known = known_audits();
        if (std::find(known.begin(), known.end(), a) == known.end())
            throw std::invalid_argument("config: unknown audit id '" + a + "'");
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::from_toml_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_toml_text(buf.str());
}

std::string ExperimentConfig::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = kLibraryVersion;
    j["k"] = k;
    j["pattern"] = pattern_spec;
    j["family"] = family_kind;
    j["L"] = L_text;
    j["C"] = C_text;
    j["s_rule"] = s_rule;
    j["mode"] = mode;
    j["audits"] = audits;
    j["seeds"] = seeds;
    j["enforce_delta_precondition"] = enforce_delta_precondition;
    j["hfree_budget"] = hfree_budget;
    j["packing_nodes"] = packing_nodes;
    j["tuple_budget"] = tuple_budget;
    j["path_budget"] = path_budget;
    j["walk_budget"] = walk_budget;
    j["workers"] = workers;
    j["hosts"] = nlohmann::ordered_json::array();
    for (const auto& h : hosts) {
        nlohmann::ordered_json hj;
        hj["kind"] = h.kind;
        hj["n"] = h.n;
        hj["param"] = h.param;
        if (!h.path.empty()) hj["path"] = h.path;
        j["hosts"].push_back(hj);
    }
    return j.dump(2) + "\n";
}

std::string audit_flag_name(AuditFlag flag) {
    switch (flag) {
        case AuditFlag::pass: return "pass";
        case AuditFlag::fail: return "fail";
        case AuditFlag::not_applicable: return "not-applicable";
    }
    return "?";
}

const std::vector<std::string>& known_audits() {
    static const std::vector<std::string> ids{"2.3", "2.6", "3.1",      "3.5", "4.2", "4.4",
                                              "4.5", "4.6", "4.7", "4.8", "4.9-2kbad"};
    return ids;
}

namespace {

// Everything derived from one (host, seed) grid cell, computed lazily and
// shared between the audits running on that cell.
struct Cell {
    const ExperimentConfig& cfg;
    SimpleGraph g;
    DegreeProfile profile;
    SubdivisionSpec hspec;
    ThresholdFamily family;
    std::vector<int> S;
    std::uint64_t seed;
    PackingMode mode;

    std::optional<GoodnessTable> table;
    std::optional<std::string> table_error;
    std::optional<std::string> hfree;  // "yes" / "no" / "unknown"
    std::unique_ptr<RichnessContext> rich_ctx;
    std::map<std::pair<int, int>, bool> poor_memo;

    Cell(const ExperimentConfig& c, SimpleGraph graph, SubdivisionSpec spec,
         ThresholdFamily fam, std::uint64_t sd)
        : cfg(c), g(std::move(graph)), hspec(std::move(spec)), family(std::move(fam)), seed(sd) {
        profile = g.vertex_count() > 0 ? degree_profile(g) : DegreeProfile{};
        mode = cfg.mode == "greedy" ? PackingMode::greedy_maximal : PackingMode::exact_max;
        S = select_s();
    }

    std::vector<int> select_s() const {
        const int n = g.vertex_count();
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        if (cfg.s_rule == "all" || n == 0) return all;
        if (cfg.s_rule.rfind("random:", 0) == 0) {
            size_t size = std::stoull(cfg.s_rule.substr(7));
            size = std::min(size, all.size());
            std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
            for (size_t i = 0; i < size; ++i) {
                std::uint64_t limit = ~0ULL - ~0ULL % (all.size() - i);
                std::uint64_t x;
                do {
                    x = rng();
                } while (x >= limit);
                std::swap(all[i], all[i + x % (all.size() - i)]);
            }
            all.resize(size);
            std::sort(all.begin(), all.end());
            return all;
        }
        if (cfg.s_rule.rfind("ball:", 0) == 0) {
            int radius = std::stoi(cfg.s_rule.substr(5));
            int center = 0;
            for (int v = 1; v < n; ++v)
                if (g.degree(v) > g.degree(center)) center = v;
            auto ball = bfs_ball(g, {center}, radius);
            std::vector<int> out;
            for (int v = 0; v < n; ++v)
                if (ball[v]) out.push_back(v);
            return out;
        }
        throw std::invalid_argument("unknown s_rule '" + cfg.s_rule + "'");
    }

    const GoodnessTable* get_table() {
        if (!table && !table_error) {
            try {
                table.emplace(classify_paths(g, family, 2 * cfg.k, cfg.path_budget));
            } catch (const std::exception& e) {
                table_error = e.what();
            }
        }
        return table ? &*table : nullptr;
    }

    const std::string& get_hfree() {
        if (!hfree) {
            auto res = find_subdivision_exact(g, hspec, cfg.hfree_budget);
            hfree = res.status == SearchStatus::found           ? "no"
                    : res.status == SearchStatus::none_certified ? "yes"
                                                                  : "unknown";
        }
        return *hfree;
    }

    RichnessContext& get_rich_ctx() {
        if (!rich_ctx) {
            RichnessBudget budget;
            budget.packing_nodes = cfg.packing_nodes;
            budget.path_enumeration = cfg.path_budget;
            budget.tuple_cap = cfg.tuple_budget;
            rich_ctx = std::make_unique<RichnessContext>(g, cfg.k, hspec, profile, mode, budget);
        }
        return *rich_ctx;
    }

    bool poor_all(int a, int b) {
        auto it = poor_memo.find({a, b});
        if (it != poor_memo.end()) return it->second;
        bool poor = get_rich_ctx().is_poor_all(a, b);
        poor_memo.emplace(std::make_pair(a, b), poor);
        return poor;
    }
};

struct AuditOutcome {
    std::string measured = "-";
    std::string bound = "-";
    std::string ratio = "-";
    AuditFlag flag = AuditFlag::not_applicable;
    int alpha = -1, beta = -1;
    std::string note;
};

AuditOutcome na(const std::string& note) {
    AuditOutcome out;
    out.note = note;
    return out;
}

std::string ratio_of(const mpz_class& measured, const mpq_class& raw_bound) {
    if (raw_bound == 0) return "-";
    mpq_class r = mpq_class(measured) / raw_bound;
    r.canonicalize();
    return rational_to_string(r);
}

mpz_class ceil_rational(const mpq_class& q) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

// ---- audit 2.3: admissible-not-good paths admit >= L disjoint paths ----
AuditOutcome audit_disjoint_guarantee(Cell& cell) {
    if (!cell.family.satisfies_pigeonhole())
        return na("family does not satisfy the pigeonhole inequality");
    const GoodnessTable* table = cell.get_table();
    if (!table) return na("classification budget: " + *cell.table_error);
    const mpq_class& L = cell.family.L();
    mpz_class target_z = ceil_rational(L);
    if (target_z > 1'000'000) return na("L too large for packing targets");
    int target = static_cast<int>(target_z.get_si());

    mpz_class violations = 0, checked = 0;
    std::map<std::pair<std::pair<int, int>, int>, bool> pair_ok;
    for (int len = 2; len <= table->max_len(); ++len) {
        if (L <= len) continue;  // lemma hypothesis L > len
        for (const auto& [path, flags] : table->paths(len)) {
            if (!flags.admissible || flags.good) continue;
            checked += 1;
            auto key = std::make_pair(std::make_pair(path.front(), path.back()), len);
            auto it = pair_ok.find(key);
            bool ok;
            if (it != pair_ok.end()) {
                ok = it->second;
            } else {
                try {
                    Packing p = max_disjoint_paths(cell.g, path.front(), path.back(), len,
                                                   PackingMode::exact_max, cell.cfg.packing_nodes,
                                                   target, cell.cfg.path_budget);
                    ok = p.size() >= target;
                } catch (const std::exception&) {
                    return na("packing budget exceeded");
                }
                pair_ok.emplace(key, ok);
            }
            if (!ok) violations += 1;
        }
    }
    AuditOutcome out;
    out.measured = violations.get_str();
    out.bound = "0";
    out.ratio = "-";
    out.flag = violations == 0 ? AuditFlag::pass : AuditFlag::fail;
    out.note = "paths-checked=" + checked.get_str() + ";target=" + std::to_string(target);
    return out;
}

// ---- audit 2.6: good 2k-path count within S (trend) ----
AuditOutcome audit_good_2k_count(Cell& cell, const mpq_class& C) {
    const GoodnessTable* table = cell.get_table();
    if (!table) return na("classification budget: " + *cell.table_error);
    mpz_class measured(static_cast<unsigned long>(count_good_within(*table, cell.S, 2 * cell.cfg.k)));
    mpq_class raw = mpq_class(mpz_class(cell.S.size()) * mpz_class(cell.S.size()) *
                              pow_integer(cell.profile.min_degree, 2 * cell.cfg.k)) /
                    mpq_class(cell.g.vertex_count());
    raw.canonicalize();
    AuditOutcome out;
    out.measured = measured.get_str();
    out.bound = rational_to_string(C * raw);
    out.ratio = ratio_of(measured, raw);
    out.flag = AuditFlag::pass;  // trend audit, never hard-fails
    out.note = "hfree=" + cell.get_hfree();
    return out;
}

// ---- audit 3.1: non-good k-paths (trend) ----
AuditOutcome audit_k_paths_not_good(Cell& cell, const mpq_class& C) {
    const GoodnessTable* table = cell.get_table();
    if (!table) return na("classification budget: " + *cell.table_error);
    const int k = cell.cfg.k;
    mpz_class measured = 0;
    for (const auto& [path, flags] : table->paths(k))
        if (!flags.good) measured += 1;
    mpq_class raw = mpq_class(mpz_class(cell.g.vertex_count()) *
                              pow_integer(cell.profile.min_degree, k)) /
                    cell.family.L();
    raw.canonicalize();
    AuditOutcome out;
    out.measured = measured.get_str();
    out.bound = rational_to_string(C * raw);
    out.ratio = ratio_of(measured, raw);
    out.flag = AuditFlag::pass;
    out.note = "hfree=" + cell.get_hfree();
    return out;
}

// ---- audit 3.5: admissible-not-good count per length (strict) ----
AuditOutcome audit_admissible_not_good_bound(Cell& cell) {
    const int k = cell.cfg.k;
    if (k < 2) {
        AuditOutcome out;
        out.measured = "0";
        out.bound = "0";
        out.flag = AuditFlag::pass;
        out.note = "vacuous: no lengths in [2,k]";
        return out;
    }
    if (cell.get_hfree() != "yes") return na("host not certified H-free: " + cell.get_hfree());
    if (cell.cfg.enforce_delta_precondition) {
        double exponent = std::pow(100.0, k) * static_cast<double>(cell.hspec.vertex_count());
        double lhs = std::log(std::max(1.0, static_cast<double>(cell.profile.min_degree)));
        double rhs = exponent * std::log(cell.family.L().get_d());
        if (lhs < rhs) return na("delta below L^(100^k |V(H)|)");
    }
    const GoodnessTable* table = cell.get_table();
    if (!table) return na("classification budget: " + *cell.table_error);
    AuditOutcome out;
    out.flag = AuditFlag::pass;
    mpq_class worst_ratio(-1);
    for (int len = 2; len <= k; ++len) {
        mpz_class count = 0;
        for (const auto& [path, flags] : table->paths(len))
            if (flags.admissible && !flags.good) count += 1;
        mpq_class bound = mpq_class(2 * mpz_class(cell.g.vertex_count()) *
                                    pow_integer(cell.profile.max_degree, len)) /
                          mpq_class(cell.family.f(len - 1));
        bound.canonicalize();
        mpq_class ratio = bound == 0 ? mpq_class(0) : mpq_class(count) / bound;
        ratio.canonicalize();
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            out.measured = count.get_str();
            out.bound = rational_to_string(bound);
            out.ratio = bound == 0 ? "-" : rational_to_string(ratio);
        }
        if (mpq_class(count) > bound) {
            out.flag = AuditFlag::fail;
            out.note += "violated at length " + std::to_string(len) + ";";
        }
    }
    return out;
}

// ---- audit 4.2: rich pairs admit |V(H)| disjoint 2k-paths (strict) ----
AuditOutcome audit_rich_to_paths(Cell& cell) {
    if (cell.mode != PackingMode::exact_max) return na("requires exact mode");
    RichnessContext& ctx = cell.get_rich_ctx();
    const int k = cell.cfg.k;
    const int n = cell.g.vertex_count();
    long long h = cell.hspec.vertex_count();
    mpz_class rich_count = 0, violations = 0;
    std::map<std::pair<int, int>, bool> pack_memo;
    try {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                bool any_rich = false;
                for (int i = 0; i < 2 * k && !any_rich; ++i)
                    for (int j = 0; i + j < 2 * k && !any_rich; ++j)
                        if (ctx.is_rich(x, y, i, j).rich) any_rich = true;
                if (!any_rich) continue;
                rich_count += 1;
                auto key = std::make_pair(std::min(x, y), std::max(x, y));
                auto it = pack_memo.find(key);
                bool ok;
                if (it != pack_memo.end()) {
                    ok = it->second;
                } else {
                    Packing p = max_disjoint_paths(cell.g, key.first, key.second, 2 * k,
                                                   PackingMode::exact_max, cell.cfg.packing_nodes,
                                                   static_cast<int>(h), cell.cfg.path_budget);
                    ok = p.size() >= h;
                    pack_memo.emplace(key, ok);
                }
                if (!ok) violations += 1;
            }
    } catch (const std::exception& e) {
        return na(std::string("budget: ") + e.what());
    }
    if (ctx.budget_was_hit()) return na("richness packing budget hit");
    AuditOutcome out;
    out.measured = violations.get_str();
    out.bound = "0";
    out.flag = violations == 0 ? AuditFlag::pass : AuditFlag::fail;
    out.note = "rich-ordered-pairs=" + rich_count.get_str();
    return out;
}

// ---- audit 4.4: aux graphs clique-free on H-free hosts (strict) ----
AuditOutcome audit_aux_clique_free(Cell& cell) {
    if (cell.mode != PackingMode::exact_max) return na("requires exact mode");
    if (cell.get_hfree() != "yes") return na("host not certified H-free: " + cell.get_hfree());
    RichnessContext& ctx = cell.get_rich_ctx();
    const int k = cell.cfg.k;
    const int t = cell.hspec.pattern.vertex_count();
    RamseyBound r = ramsey_bound(k, t);
    mpz_class witnesses = 0;
    std::uint64_t graphs_checked = 0;
    try {
        for (int v = 0; v < cell.g.vertex_count(); ++v) {
            for (int ell = 1; ell <= k; ++ell) {
                AuxGraph aux = aux_graph(ctx, v, ell);
                ++graphs_checked;
                if (static_cast<int>(aux.tuples.size()) >= t &&
                    !clique_free_up_to(aux.to_simple_graph(), t).clique_free)
                    witnesses += 1;
            }
            AuxGraph united = aux_graph(ctx, v, 0);
            ++graphs_checked;
            if (mpz_class(static_cast<long>(united.tuples.size())) >= r.value &&
                !clique_free_up_to(united.to_simple_graph(),
                                   static_cast<int>(r.value.get_si()))
                     .clique_free)
                witnesses += 1;
        }
    } catch (const std::exception& e) {
        return na(std::string("budget: ") + e.what());
    }
    if (ctx.budget_was_hit()) return na("richness packing budget hit");
    AuditOutcome out;
    out.measured = witnesses.get_str();
    out.bound = "0";
    out.flag = witnesses == 0 ? AuditFlag::pass : AuditFlag::fail;
    out.note = "aux-graphs=" + std::to_string(graphs_checked) +
               ";r=" + r.value.get_str() + (r.exact ? "(exact)" : "(upper)");
    return out;
}

// ---- audit 4.5: poor-tuple harvest lower bound (strict when applicable) ----
AuditOutcome audit_poor_tuple_count(Cell& cell) {
    if (cell.mode != PackingMode::exact_max) return na("requires exact mode");
    if (cell.get_hfree() != "yes") return na("host not certified H-free: " + cell.get_hfree());
    if (cell.profile.min_degree == 0) return na("min degree 0");
    const int k = cell.cfg.k;
    const int t = cell.hspec.pattern.vertex_count();
    RamseyBound r = ramsey_bound(k, t);
    // precondition |S| >= 2 n r / delta^k
    mpz_class lhs = mpz_class(cell.S.size()) * pow_integer(cell.profile.min_degree, k);
    mpz_class rhs = 2 * mpz_class(cell.g.vertex_count()) * r.value;
    if (lhs < rhs)
        return na("|S| below 2nr/delta^k (" + lhs.get_str() + " < " + rhs.get_str() + ")");
    HarvestResult harvest;
    try {
        harvest = harvest_poor_tuples(cell.get_rich_ctx(), cell.S, cell.cfg.tuple_budget);
    } catch (const std::exception& e) {
        return na(std::string("budget: ") + e.what());
    }
    if (!harvest.complete) return na("tuple budget cut harvest short");
    if (cell.get_rich_ctx().budget_was_hit()) return na("richness packing budget hit");
    mpz_class measured(static_cast<long>(harvest.tuples.size()));
    mpq_class bound = mpq_class(mpz_class(cell.S.size()) * mpz_class(cell.S.size()) *
                                pow_integer(cell.profile.min_degree, 2 * k)) /
                      mpq_class(4 * r.value * r.value * cell.g.vertex_count());
    bound.canonicalize();
    AuditOutcome out;
    out.measured = measured.get_str();
    out.bound = rational_to_string(bound);
    out.ratio = ratio_of(measured, bound);
    out.flag = mpq_class(measured) >= bound ? AuditFlag::pass : AuditFlag::fail;
    out.note = "r=" + r.value.get_str() + (r.exact ? "(exact)" : "(upper)");
    return out;
}

// ---- audit 4.6: walks with a repeated vertex (strict) ----
AuditOutcome audit_repeated_vertex_walks(Cell& cell) {
    const int k = cell.cfg.k;
    const int n = cell.g.vertex_count();
    mpz_class repeated = 0;
    std::uint64_t walks = 0;
    std::vector<int> stack;
    std::vector<int> seen_count(n, 0);
    bool over_budget = false;
    int dup_depth = 0;  // number of vertices on the stack occurring twice or more
    auto dfs = [&](auto&& self) -> void {
        if (over_budget) return;
        if (static_cast<int>(stack.size()) == 2 * k + 1) {
            if (++walks > cell.cfg.walk_budget) {
                over_budget = true;
                return;
            }
            if (dup_depth > 0) repeated += 1;
            return;
        }
        for (int nb : cell.g.neighbors(stack.back())) {
            if (++seen_count[nb] > 1) ++dup_depth;
            stack.push_back(nb);
            self(self);
            stack.pop_back();
            if (seen_count[nb]-- > 1) --dup_depth;
            if (over_budget) return;
        }
    };
    for (int start = 0; start < n && !over_budget; ++start) {
        seen_count[start] = 1;
        stack.assign(1, start);
        dfs(dfs);
        seen_count[start] = 0;
    }
    if (over_budget) return na("walk budget exceeded");
    mpz_class bound = binom2(2 * k + 1) * mpz_class(n) *
                      pow_integer(cell.profile.max_degree, 2 * k - 1);
    AuditOutcome out;
    out.measured = repeated.get_str();
    out.bound = bound.get_str();
    out.ratio = ratio_of(repeated, mpq_class(bound));
    out.flag = repeated <= bound ? AuditFlag::pass : AuditFlag::fail;
    out.note = "walks=" + std::to_string(walks);
    return out;
}

// ---- audit 4.7: 2k-paths with a non-good k-subpath (trend) ----
AuditOutcome audit_bad_k_window_paths(Cell& cell, const mpq_class& C) {
    const GoodnessTable* table = cell.get_table();
    if (!table) return na("classification budget: " + *cell.table_error);
    const int k = cell.cfg.k;
    mpz_class measured = 0;
    for (const auto& [path, flags] : table->paths(2 * k)) {
        bool bad_window = false;
        for (int offset = 0; offset <= k && !bad_window; ++offset) {
            Path window = canonical_path({path.vertices.begin() + offset,
                                          path.vertices.begin() + offset + k + 1});
            if (!table->paths(k).at(window).good) bad_window = true;
        }
        if (bad_window) measured += 1;
    }
    mpq_class raw = mpq_class(mpz_class(cell.g.vertex_count()) *
                              pow_integer(cell.profile.min_degree, 2 * k)) /
                    cell.family.L();
    raw.canonicalize();
    AuditOutcome out;
    out.measured = measured.get_str();
    out.bound = rational_to_string(C * raw);
    out.ratio = ratio_of(measured, raw);
    out.flag = AuditFlag::pass;
    out.note = "hfree=" + cell.get_hfree();
    return out;
}

// ---- audit 4.8: poor-ended 2k-paths with a big disjoint bundle (trend) ----
AuditOutcome audit_poor_paths_with_bundle(Cell& cell, const mpq_class& C) {
    const int k = cell.cfg.k;
    const int n = cell.g.vertex_count();
    RichnessContext& ctx = cell.get_rich_ctx();
    mpz_class measured = 0;
    std::uint64_t examined = 0;
    try {
        for (int start = 0; start < n; ++start) {
            auto seqs = directed_paths(cell.g, start, 2 * k, cell.cfg.path_budget);
            for (const auto& p : seqs) {
                if (++examined > cell.cfg.walk_budget) return na("path budget exceeded");
                bool all_poor = true;
                for (int l = 1; l <= k && all_poor; ++l)
                    all_poor = cell.poor_all(p[k - l], p[k + l]);
                if (!all_poor) continue;
                bool bundle = false;
                for (int alpha = 1; alpha <= k && !bundle; ++alpha)
                    for (int beta = 1; beta <= k && !bundle; ++beta) {
                        if (alpha + beta <= k) continue;
                        if (ctx.has_T_disjoint(p[k - alpha], p[k + beta], alpha + beta))
                            bundle = true;
                    }
                if (bundle) measured += 1;
            }
        }
    } catch (const std::exception& e) {
        return na(std::string("budget: ") + e.what());
    }
    mpq_class raw(mpz_class(n) * pow_integer(cell.profile.min_degree, 2 * k - 1));
    AuditOutcome out;
    out.measured = measured.get_str();
    out.bound = rational_to_string(C * raw);
    out.ratio = ratio_of(measured, raw);
    out.flag = AuditFlag::pass;
    out.note = "directed;mode=" + cell.cfg.mode;
    return out;
}

// ---- audit 4.9-2kbad: not-good 2k-paths with good k-windows (strict) ----
AuditOutcome audit_2k_bad_structure(Cell& cell) {
    if (!cell.family.satisfies_pigeonhole())
        return na("family does not satisfy the pigeonhole inequality");
    RichnessContext& ctx = cell.get_rich_ctx();
    if (mpq_class(static_cast<long>(ctx.T())) > cell.family.L())
        return na("L below the disjointness demand T");
    const GoodnessTable* table = cell.get_table();
    if (!table) return na("classification budget: " + *cell.table_error);
    const int k = cell.cfg.k;
    mpz_class candidates = 0, violations = 0;
    AuditOutcome out;
    try {
        for (const auto& [path, flags] : table->paths(2 * k)) {
            if (flags.good) continue;
            bool windows_good = true;
            for (int offset = 0; offset <= k && windows_good; ++offset) {
                Path window = canonical_path({path.vertices.begin() + offset,
                                              path.vertices.begin() + offset + k + 1});
                windows_good = table->paths(k).at(window).good;
            }
            if (!windows_good) continue;
            candidates += 1;
            bool found = false;
            for (int alpha = 1; alpha <= k && !found; ++alpha)
                for (int beta = 1; beta <= k && !found; ++beta) {
                    if (alpha + beta <= k) continue;
                    if (ctx.has_T_disjoint(path.vertices[k - alpha], path.vertices[k + beta],
                                           alpha + beta)) {
                        found = true;
                        out.alpha = alpha;
                        out.beta = beta;
                    }
                }
            if (!found) violations += 1;
        }
    } catch (const std::exception& e) {
        return na(std::string("budget: ") + e.what());
    }
    if (cell.mode != PackingMode::exact_max && violations > 0)
        return na("greedy mode cannot certify missing bundles");
    out.measured = violations.get_str();
    out.bound = "0";
    out.flag = violations == 0 ? AuditFlag::pass : AuditFlag::fail;
    out.note = "candidates=" + candidates.get_str();
    return out;
}

AuditOutcome run_one_audit(const std::string& id, Cell& cell, const mpq_class& C) {
    if (id == "2.3") return audit_disjoint_guarantee(cell);
    if (id == "2.6") return audit_good_2k_count(cell, C);
    if (id == "3.1") return audit_k_paths_not_good(cell, C);
    if (id == "3.5") return audit_admissible_not_good_bound(cell);
    if (id == "4.2") return audit_rich_to_paths(cell);
    if (id == "4.4") return audit_aux_clique_free(cell);
    if (id == "4.5") return audit_poor_tuple_count(cell);
    if (id == "4.6") return audit_repeated_vertex_walks(cell);
    if (id == "4.7") return audit_bad_k_window_paths(cell, C);
    if (id == "4.8") return audit_poor_paths_with_bundle(cell, C);
    if (id == "4.9-2kbad") return audit_2k_bad_structure(cell);
    throw std::invalid_argument("unknown audit id '" + id + "'");
}

int resolve_workers(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("SUBDIVLAB_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

}  // namespace

std::vector<AuditRecord> run_lemma_audit(const ExperimentConfig& config) {
    if (config.k < 1) throw std::invalid_argument("config: k must be >= 1");
    MultiGraph pattern = parse_pattern_spec(config.pattern_spec);
    ThresholdFamily family = make_family(config.family_kind, config.L_text, 2 * config.k);
    mpq_class C = parse_rational(config.C_text);
    SubdivisionSpec hspec{pattern, 2 * config.k - 1};
    hspec.validate();

    const size_t n_audits = config.audits.size();
    const size_t n_hosts = config.hosts.size();
    const size_t n_seeds = config.seeds.size();
    std::vector<AuditRecord> records(n_audits * n_hosts * n_seeds);

    auto run_cell = [&](size_t host_idx, size_t seed_idx) {
        const HostSpec& host = config.hosts[host_idx];
        std::uint64_t seed = config.seeds[seed_idx];
        SimpleGraph g = host.kind == "file" ? read_simple_graph_file(host.path, host.n)
                                            : gen_random(host.kind, host.n, host.param, seed);
        Cell cell(config, std::move(g), hspec, family, seed);
        for (size_t audit_idx = 0; audit_idx < n_audits; ++audit_idx) {
            AuditRecord& rec =
                records[audit_idx * n_hosts * n_seeds + host_idx * n_seeds + seed_idx];
            rec.lemma = config.audits[audit_idx];
            rec.generator = host.kind;
            rec.n = cell.g.vertex_count();
            rec.param = host.kind == "file" ? host.path : format_param(host.param);
            rec.seed = seed;
            rec.delta = cell.profile.min_degree;
            rec.max_degree = cell.profile.max_degree;
            rec.ratio = cell.profile.ratio_finite() ? rational_to_string(cell.profile.ratio())
                                                    : "inf";
            rec.k = config.k;
            rec.L = config.L_text;
            rec.family = cell.family.kind_name();
            rec.pattern = config.pattern_spec;
            rec.s_size = cell.S.size();
            rec.mode = config.mode;
            AuditOutcome outcome;
            try {
                outcome = run_one_audit(config.audits[audit_idx], cell, C);
            } catch (const std::exception& e) {
                outcome = na(std::string("error: ") + e.what());
            }
            rec.measured = outcome.measured;
            rec.bound = outcome.bound;
            rec.ratio_value = outcome.ratio;
            rec.flag = outcome.flag;
            rec.alpha = outcome.alpha;
            rec.beta = outcome.beta;
            rec.note = outcome.note;
            rec.hfree = cell.hfree.value_or("-");
        }
    };

    const int workers = resolve_workers(config.workers);
    std::vector<std::pair<size_t, size_t>> cells;
    for (size_t h = 0; h < n_hosts; ++h)
        for (size_t s = 0; s < n_seeds; ++s) cells.emplace_back(h, s);
    if (workers <= 1) {
        for (auto [h, s] : cells) run_cell(h, s);
    } else {
        std::atomic<size_t> next{0};
        auto drain = [&] {
            while (true) {
                size_t idx = next.fetch_add(1);
                if (idx >= cells.size()) break;
                run_cell(cells[idx].first, cells[idx].second);
            }
        };
        std::vector<std::future<void>> futures;
        for (int w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, drain));
        for (auto& f : futures) f.get();
    }
    return records;
}

bool any_strict_failure(const std::vector<AuditRecord>& records) {
    for (const auto& rec : records)
        if (rec.flag == AuditFlag::fail) return true;
    return false;
}

std::string records_to_csv(const std::vector<AuditRecord>& records) {
    std::ostringstream out;
    out << "lemma,generator,n,param,seed,delta,Delta,K,hfree,k,L,family,pattern,S_size,mode,"
           "measured,bound,ratio,flag,alpha,beta,note\n";
    for (const auto& r : records) {
        out << r.lemma << ',' << r.generator << ',' << r.n << ',' << r.param << ',' << r.seed
            << ',' << r.delta << ',' << r.max_degree << ',' << r.ratio << ',' << r.hfree << ','
            << r.k << ',' << r.L << ',' << r.family << ',' << r.pattern << ',' << r.s_size << ','
            << r.mode << ',' << r.measured << ',' << r.bound << ',' << r.ratio_value << ','
            << audit_flag_name(r.flag) << ',' << r.alpha << ',' << r.beta << ',' << r.note
            << '\n';
    }
    return out.str();
}

void write_audit_report(const std::string& out_dir, const ExperimentConfig& config,
                        const std::vector<AuditRecord>& records) {
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream csv(out_dir + "/audit.csv", std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write " + out_dir + "/audit.csv");
        csv << records_to_csv(records);
    }
    {
        std::ofstream sidecar(out_dir + "/audit_config.json", std::ios::binary);
        if (!sidecar) throw std::runtime_error("cannot write " + out_dir + "/audit_config.json");
        sidecar << config.to_json();
    }
}

}  // namespace subdiv
