#include "subdivlab/random_graphs.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace subdiv {

namespace {

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

SimpleGraph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_erdos_renyi: negative n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_erdos_renyi: p outside [0,1]");
    std::mt19937_64 rng(seed);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_uniform(rng) < p) g.add_edge(u, v);
    return g;
}

SimpleGraph gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n)
        throw std::invalid_argument("gen_random_regular: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("gen_random_regular: n*d must be even");
    std::mt19937_64 rng(seed);
    if (d == 0) return SimpleGraph(n);
    const int points = n * d;
    // pairing model with local retries: match two random free points at a
    // time, skip loop/duplicate pairs, restart when stuck
    const int max_restarts = 200;
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        std::vector<int> free_points(points);
        for (int i = 0; i < points; ++i) free_points[i] = i;
        std::set<std::pair<int, int>> edges;
        bool stuck = false;
        while (!free_points.empty() && !stuck) {
            bool matched = false;
            for (int tries = 0; tries < 200 && !matched; ++tries) {
                size_t i = bounded_uniform(rng, free_points.size());
                size_t j = bounded_uniform(rng, free_points.size() - 1);
                if (j >= i) ++j;
                int u = free_points[i] / d, v = free_points[j] / d;
                if (u == v) continue;
                auto key = std::make_pair(std::min(u, v), std::max(u, v));
                if (!edges.insert(key).second) continue;
                if (i < j) std::swap(i, j);  // remove the larger index first
                free_points.erase(free_points.begin() + i);
                free_points.erase(free_points.begin() + j);
                matched = true;
            }
            if (!matched) stuck = true;
        }
        if (stuck) continue;
        SimpleGraph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
    throw std::runtime_error("gen_random_regular: no simple pairing found (infeasible or unlucky)");
}

SimpleGraph gen_random(const std::string& kind, int n, double parameter, std::uint64_t seed) {
    if (kind == "erdos-renyi") return gen_erdos_renyi(n, parameter, seed);
    if (kind == "random-regular") {
        int d = static_cast<int>(parameter);
        if (static_cast<double>(d) != parameter)
            throw std::invalid_argument("gen_random: random-regular needs an integer degree");
        return gen_random_regular(n, d, seed);
    }
    throw std::invalid_argument("gen_random: unknown kind '" + kind + "'");
}

}  // namespace subdiv
