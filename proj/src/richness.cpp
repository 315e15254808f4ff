#include "subdivlab/richness.hpp"

#include <algorithm>
#include <stdexcept>

#include "subdivlab/numeric.hpp"
#include "subdivlab/paths.hpp"

namespace subdiv {

RamseyBound ramsey_bound(int colours, int clique_size) {
    if (colours < 1 || clique_size < 2)
        throw std::invalid_argument("ramsey_bound: need colours >= 1, clique size >= 2");
    RamseyBound b{colours, clique_size, 0, false};
    if (colours == 1) {
        b.value = clique_size;
        b.exact = true;
    } else if (colours == 2 && clique_size == 3) {
        b.value = 6;
        b.exact = true;
    } else if (colours == 2 && clique_size == 4) {
        b.value = 18;
        b.exact = true;
    } else if (colours == 3 && clique_size == 3) {
        b.value = 17;
        b.exact = true;
    } else {
        b.value = pow_integer(colours, static_cast<unsigned long>(colours) *
                                           static_cast<unsigned long>(clique_size));
    }
    return b;
}

mpq_class richness_threshold(int i, int j, int k, long long h_size,
                             const DegreeProfile& profile) {
    // coefficient 2(i+j)|V(H)|(2k+1) + 2(i+1)j, times (K*delta)^(i+j-1);
    // K*delta equals the profile's max degree exactly
    long long coeff = 2LL * (i + j) * h_size * (2 * k + 1) + 2LL * (i + 1) * j;
    if (coeff == 0) return mpq_class(0);
    mpq_class max_deg(profile.max_degree);
    if (i + j - 1 < 0 && max_deg == 0)
        throw std::domain_error("richness_threshold: zero max degree with negative exponent");
    return mpq_class(static_cast<long>(coeff)) * pow_rational(max_deg, i + j - 1);
}

RichnessContext::RichnessContext(const SimpleGraph& g, int k, const SubdivisionSpec& spec,
                                 DegreeProfile profile, PackingMode mode, RichnessBudget budget)
    : g_(g), k_(k), profile_(profile), mode_(mode), budget_(budget) {
    if (k < 1) throw std::invalid_argument("RichnessContext: k must be >= 1");
    if (spec.s != 2 * k - 1)
        throw std::invalid_argument("RichnessContext: spec must have s = 2k-1");
    spec.validate();
    h_size_ = spec.vertex_count();
    T_ = (h_size_ + 2) * (2LL * k + 1) + 1;
}

bool RichnessContext::has_T_disjoint(int a, int b, int length) const {
    if (a == b) return false;  // no positive-length paths from a vertex to itself
    int lo = std::min(a, b), hi = std::max(a, b);
    auto key = std::make_tuple(lo, hi, length);
    auto it = packing_memo_.find(key);
    if (it != packing_memo_.end()) return it->second;

    bool enough = false;
    if (T_ <= 0) {
        enough = true;
    } else {
        Packing greedy = max_disjoint_paths(g_, lo, hi, length, PackingMode::greedy_maximal, 0, 0,
                                            budget_.path_enumeration);
        if (greedy.size() >= T_) {
            enough = true;
        } else if (mode_ == PackingMode::exact_max) {
            try {
                Packing exact =
                    max_disjoint_paths(g_, lo, hi, length, PackingMode::exact_max,
                                       budget_.packing_nodes, static_cast<int>(T_),
                                       budget_.path_enumeration);
                enough = exact.size() >= T_;
            } catch (const PackingBudgetExceeded&) {
                budget_hit_ = true;
                enough = false;  // partial: recorded via budget_was_hit()
            }
        }
    }
    packing_memo_.emplace(key, enough);
    return enough;
}

RichnessReport RichnessContext::is_rich(int x, int y, int i, int j) const {
    if (i < 0 || j < 0 || i + j >= 2 * k_)
        throw std::invalid_argument("is_rich: need i, j >= 0 and i + j < 2k");
    RichnessReport report;
    report.x = x;
    report.y = y;
    report.i = i;
    report.j = j;
    report.T = T_;
    report.mode = mode_;
    report.threshold = richness_threshold(i, j, k_, h_size_, profile_);

    const int span = 2 * k_ - i - j;
    if (x == y) {
        report.rich = false;
        report.exact_certified = true;
        return report;
    }
    auto from_x = directed_paths(g_, x, i, budget_.path_enumeration);
    auto from_y = directed_paths(g_, y, j, budget_.path_enumeration);
    mpz_class witnesses = 0;
    for (const auto& p : from_x)
        for (const auto& q : from_y)
            if (has_T_disjoint(p.back(), q.back(), span)) witnesses += 1;
    report.witness_pairs = witnesses;
    report.rich = mpq_class(witnesses) > report.threshold;
    report.budget_hit = budget_hit_;
    // greedy packing certifies ">= T" but not "< T": rich verdicts are sound,
    // poor verdicts are heuristic unless the packing side was exact
    report.exact_certified = mode_ == PackingMode::exact_max && !budget_hit_;
    if (mode_ == PackingMode::greedy_maximal && report.rich) report.exact_certified = true;
    return report;
}

bool RichnessContext::is_poor_all(int x, int y) const {
    for (int i = 0; i <= k_ - 1; ++i)
        for (int j = 0; j <= k_ - 1; ++j)
            if (is_rich(x, y, i, j).rich) return false;
    return true;
}

RichnessReport is_rich(const SimpleGraph& g, int x, int y, int i, int j, int k,
                       const SubdivisionSpec& spec, const DegreeProfile& profile,
                       PackingMode mode) {
    RichnessContext ctx(g, k, spec, profile, mode);
    return ctx.is_rich(x, y, i, j);
}

DistantReport is_distant(const SimpleGraph& g, int u, int v, int k, const mpq_class& delta) {
    if (u == v) throw std::invalid_argument("is_distant: u == v");
    if (k < 1) throw std::invalid_argument("is_distant: k must be >= 1");
    DistantReport report;
    report.distant = true;
    for (int i = 1; i <= 4 * k - 2; ++i) {
        mpz_class walks = count_walks(g, u, v, i);
        // threshold delta^(i - 2k + 1/2), exponent doubled: 2i - 4k + 1
        if (!leq_half_power(walks, delta, 2L * i - 4L * k + 1)) report.distant = false;
        report.walk_counts.push_back(std::move(walks));
    }
    return report;
}

SimpleGraph AuxGraph::to_simple_graph() const {
    SimpleGraph g(static_cast<int>(tuples.size()));
    for (auto [s, t] : edges) g.add_edge(s, t);
    return g;
}

namespace {

// all (k+1)-tuples (v, u_1..u_k) with consecutive adjacency, lexicographic
std::vector<std::vector<int>> walk_tuples_from(const SimpleGraph& g, int v, int k,
                                               std::uint64_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> stack{v};
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(stack.size()) == k + 1) {
            if (cap != 0 && out.size() >= cap)
                throw EnumerationBudgetExceeded("aux graph tuple budget exceeded");
            out.push_back(stack);
            return;
        }
        for (int nb : g.neighbors(stack.back())) {
            stack.push_back(nb);
            self(self);
            stack.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

bool tuples_combined_distinct(const std::vector<int>& a, const std::vector<int>& b, int n) {
    // v, a_1..a_k, b_1..b_k must be 2k+1 distinct vertices
    static thread_local std::vector<int> stamp;
    static thread_local int tick = 0;
    if (static_cast<int>(stamp.size()) < n) stamp.assign(n, 0);
    ++tick;
    stamp[a[0]] = tick;
    for (size_t i = 1; i < a.size(); ++i) {
        if (stamp[a[i]] == tick) return false;
        stamp[a[i]] = tick;
    }
    for (size_t i = 1; i < b.size(); ++i) {
        if (stamp[b[i]] == tick) return false;
        stamp[b[i]] = tick;
    }
    return true;
}

}  // namespace

AuxGraph aux_graph(const RichnessContext& ctx, int v, int ell) {
    const int k = ctx.k();
    if (ell < 0 || ell > k) throw std::invalid_argument("aux_graph: ell must be in [0, k]");
    AuxGraph out;
    out.base_vertex = v;
    out.ell = ell;
    out.tuples = walk_tuples_from(ctx.graph(), v, k, ctx.budget().tuple_cap);

    const int count = static_cast<int>(out.tuples.size());
    const int lo = ell == 0 ? 1 : ell;
    const int hi = ell == 0 ? k : ell;
    for (int s = 0; s < count; ++s) {
        for (int t = s + 1; t < count; ++t) {
            const auto& a = out.tuples[s];
            const auto& b = out.tuples[t];
            if (!tuples_combined_distinct(a, b, ctx.graph().vertex_count())) continue;
            bool linked = false;
            for (int l = lo; l <= hi && !linked; ++l)
                for (int i = 0; i <= k - 1 && !linked; ++i)
                    for (int j = 0; j <= k - 1 && !linked; ++j)
                        if (ctx.is_rich(a[l], b[l], i, j).rich) linked = true;
            if (linked) out.edges.emplace_back(s, t);
        }
    }
    return out;
}

namespace {

struct CliqueSearch {
    const SimpleGraph& g;
    int target;
    std::vector<int> current;
    std::vector<int> found;

    bool extend(const std::vector<int>& candidates) {
        if (static_cast<int>(current.size()) == target) {
            found = current;
            return true;
        }
        if (current.size() + candidates.size() < static_cast<size_t>(target)) return false;
        for (size_t idx = 0; idx < candidates.size(); ++idx) {
            if (current.size() + (candidates.size() - idx) < static_cast<size_t>(target)) break;
            int v = candidates[idx];
            std::vector<int> next;
            for (size_t rest = idx + 1; rest < candidates.size(); ++rest)
                if (g.has_edge(v, candidates[rest])) next.push_back(candidates[rest]);
            current.push_back(v);
            if (extend(next)) return true;
            current.pop_back();
        }
        return false;
    }
};

}  // namespace

CliqueSearchResult clique_free_up_to(const SimpleGraph& g, int t) {
    if (t < 2) throw std::invalid_argument("clique_free_up_to: t must be >= 2");
    CliqueSearchResult result;
    if (g.vertex_count() < t) return result;
    CliqueSearch search{g, t, {}, {}};
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    if (search.extend(all)) {
        result.clique_free = false;
        result.witness = search.found;
    }
    return result;
}

}  // namespace subdiv
