#include "subdivlab/regularize.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subdiv {

namespace {

double density_score(long long edges, int m, double eps) {
    if (m == 0) return -1.0;
    return static_cast<double>(edges) / std::pow(static_cast<double>(m), 1.0 + eps);
}

}  // namespace

RegularizationResult extract_almost_regular(const SimpleGraph& g, double eps, double c) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("extract_almost_regular: eps must be in (0,1)");
    if (!(c > 0.0)) throw std::invalid_argument("extract_almost_regular: c must be > 0");
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("extract_almost_regular: empty graph");
    const long long e0 = g.edge_count();
    if (static_cast<double>(e0) < c * std::pow(static_cast<double>(n), 1.0 + eps))
        throw std::invalid_argument("extract_almost_regular: e(G) < c * n^(1+eps)");

    std::vector<int> current(n);
    std::iota(current.begin(), current.end(), 0);

    std::vector<int> best_subset = current;
    double best_score = density_score(e0, n, eps);

    // trimming rounds; each strictly shrinks the vertex set
    std::vector<int> subset = current;
    while (!subset.empty()) {
        SimpleGraph sub = g.induced(subset);
        long long e = sub.edge_count();
        int m = static_cast<int>(subset.size());
        double score = density_score(e, m, eps);
        if (score > best_score) {
            best_score = score;
            best_subset = subset;
        }
        double cutoff = 0.4 * (1.0 + eps) * static_cast<double>(e) / static_cast<double>(m);
        std::vector<int> kept;
        for (int i = 0; i < m; ++i)
            if (static_cast<double>(sub.degree(i)) >= cutoff) kept.push_back(subset[i]);
        if (kept.size() == subset.size()) break;
        subset = std::move(kept);
    }

    RegularizationResult result;
    result.vertex_subset = best_subset;
    result.subgraph = g.induced(best_subset);
    result.m = static_cast<int>(best_subset.size());
    long long e_best = result.subgraph.edge_count();
    if (result.m > 0) result.profile = degree_profile(result.subgraph);
    result.achieved_density_exponent =
        (result.m > 1 && e_best > 0)
            ? std::log(static_cast<double>(e_best)) / std::log(static_cast<double>(result.m)) - 1.0
            : 0.0;

    result.edge_target_met =
        result.m > 0 && static_cast<double>(e_best) >=
                            (2.0 * c / 5.0) * std::pow(static_cast<double>(result.m), 1.0 + eps);
    result.log2_ratio_target = std::log2(20.0) + 1.0 / (eps * eps) + 1.0;
    if (result.m > 0 && result.profile.min_degree > 0) {
        double log2_ratio = std::log2(static_cast<double>(result.profile.max_degree)) -
                            std::log2(static_cast<double>(result.profile.min_degree));
        result.ratio_target_met = log2_ratio <= result.log2_ratio_target;
    }
    result.size_target_met =
        static_cast<double>(result.m) >=
        std::pow(static_cast<double>(n), (eps - eps * eps) / (2.0 + 2.0 * eps));
    return result;
}

}  // namespace subdiv
