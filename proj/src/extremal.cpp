#include "subdivlab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <set>
#include <stdexcept>

namespace subdiv {

namespace {

constexpr int kMaxCodeVertices = 11;  // C(11,2) = 55 bits

inline int pair_index(int i, int j) {  // i < j, colex order
    return j * (j - 1) / 2 + i;
}

struct CanonicalSearch {
    int n;
    std::vector<std::uint32_t> adj_bits;  // adjacency rows as bitmasks
    std::uint64_t best;
    int total_bits;
    std::vector<int> placed;  // position -> original vertex
    std::vector<char> used;

    explicit CanonicalSearch(const SimpleGraph& g)
        : n(g.vertex_count()), adj_bits(n, 0), used(n, 0) {
        total_bits = n * (n - 1) / 2;
        best = total_bits == 64 ? ~0ULL : (1ULL << total_bits) - 1;
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) adj_bits[u] |= 1u << v;
    }

    void dfs(int pos, std::uint64_t prefix, int bits) {
        if (pos == n) {
            best = std::min(best, prefix);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t block = 0;
            for (int i = 0; i < pos; ++i)
                block = (block << 1) | ((adj_bits[v] >> placed[i]) & 1u);
            std::uint64_t next = (prefix << pos) | block;
            int next_bits = bits + pos;
            if (next > (best >> (total_bits - next_bits))) continue;
            used[v] = 1;
            placed.push_back(v);
            dfs(pos + 1, next, next_bits);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) {
    if (g.vertex_count() > kMaxCodeVertices)
        throw std::invalid_argument("canonical_code: supports up to 11 vertices");
    if (g.vertex_count() < 2) return 0;
    CanonicalSearch search(g);
    search.dfs(0, 0, 0);
    return search.best;
}

SimpleGraph graph_from_code(int n, std::uint64_t code) {
    SimpleGraph g(n);
    int total_bits = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> (total_bits - 1 - pair_index(i, j))) & 1ULL) g.add_edge(i, j);
    return g;
}

namespace {

// the canonical code packs pair (i,j) at bit (total - 1 - pair_index(i,j));
// graph_from_code is its inverse. Edge deletion happens on the unpacked graph.
std::uint64_t code_of_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    int total_bits = n * (n - 1) / 2;
    std::uint64_t code = 0;
    for (auto [i, j] : edges) code |= 1ULL << (total_bits - 1 - pair_index(i, j));
    return code;
}

bool is_h_free(const SimpleGraph& g, const SubdivisionSpec& spec, std::uint64_t oracle_budget) {
    auto result = find_subdivision_exact(g, spec, oracle_budget);
    if (result.status == SearchStatus::budget_exhausted)
        throw std::runtime_error("extremal: exact oracle budget exhausted");
    return result.status == SearchStatus::none_certified;
}

}  // namespace

ExtremalResult ex_exact(int n, const SubdivisionSpec& spec, int cap,
                        std::uint64_t oracle_budget) {
    spec.validate();
    if (spec.pattern.edges().empty())
        throw std::invalid_argument("ex_exact: pattern has no edges, no graph is H-free");
    if (n < 1) throw std::invalid_argument("ex_exact: n must be >= 1");
    if (n > cap)
        throw std::invalid_argument("ex_exact: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
    if (n > kMaxCodeVertices) throw std::invalid_argument("ex_exact: n > 11 unsupported");

    ExtremalResult result;
    result.n = n;
    result.spec = spec;
    result.exhaustive = true;

    if (spec.vertex_count() > n) {  // H cannot fit at all
        result.witness = complete_graph(n);
        result.value = result.witness.edge_count();
        return result;
    }

    std::set<std::uint64_t> level{code_of_edges(n, complete_graph(n).edges())};
    for (long long m = static_cast<long long>(n) * (n - 1) / 2; m >= 0; --m) {
        for (std::uint64_t code : level) {
            SimpleGraph g = graph_from_code(n, code);
            if (is_h_free(g, spec, oracle_budget)) {
                result.value = m;
                result.witness = g;
                return result;
            }
        }
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            SimpleGraph g = graph_from_code(n, code);
            for (auto [u, v] : g.edges()) {
                g.remove_edge(u, v);
                next.insert(canonical_code(g));
                g.add_edge(u, v);
            }
        }
        level = std::move(next);
    }
    throw std::logic_error("ex_exact: exhausted all levels without an H-free graph");
}

namespace {

struct Chain {
    long long best_value = -1;
    SimpleGraph best_graph;
    std::uint64_t seed = 0;
};

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

Chain run_chain(int n, const SubdivisionSpec& spec, std::uint64_t iterations, std::uint64_t seed,
                const AnnealOptions& opt) {
    std::mt19937_64 rng(seed);
    SimpleGraph current(n);
    Chain chain;
    chain.seed = seed;
    chain.best_value = 0;
    chain.best_graph = current;
    double temperature = opt.t0;
    std::uint64_t since_improvement = 0;
    const std::uint64_t npairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    for (std::uint64_t it = 0; it < iterations; ++it) {
        std::uint64_t pick = bounded_uniform(rng, npairs);
        // unrank colex pair index
        int j = 1;
        while (static_cast<std::uint64_t>(j) * (j + 1) / 2 <= pick) ++j;
        int i = static_cast<int>(pick - static_cast<std::uint64_t>(j) * (j - 1) / 2);

        if (!current.has_edge(i, j)) {
            current.add_edge(i, j);
            bool keep = false;
            try {
                keep = is_h_free(current, spec, opt.oracle_budget);
            } catch (const std::runtime_error&) {
                keep = false;  // oracle budget hit: reject conservatively
            }
            if (!keep) current.remove_edge(i, j);
        } else {
            if (unit_uniform(rng) < std::exp(-1.0 / temperature)) current.remove_edge(i, j);
        }

        long long value = current.edge_count();
        if (value > chain.best_value) {
            chain.best_value = value;
            chain.best_graph = current;
            since_improvement = 0;
        } else if (++since_improvement >= opt.stagnation_limit) {
            current = chain.best_graph;
            temperature = opt.t0;
            since_improvement = 0;
        }
        temperature *= opt.cooling;
    }
    return chain;
}

}  // namespace

ExtremalResult ex_lower_search(int n, const SubdivisionSpec& spec, std::uint64_t iterations,
                               std::uint64_t seed, AnnealOptions options) {
    spec.validate();
    if (spec.pattern.edges().empty())
        throw std::invalid_argument("ex_lower_search: pattern has no edges");
    if (n < 1) throw std::invalid_argument("ex_lower_search: n must be >= 1");
    if (options.chains < 1) throw std::invalid_argument("ex_lower_search: chains must be >= 1");

    std::vector<Chain> chains(options.chains);
    auto work = [&](int idx) { chains[idx] = run_chain(n, spec, iterations, seed + idx, options); };
    if (options.workers <= 1) {
        for (int idx = 0; idx < options.chains; ++idx) work(idx);
    } else {
        std::vector<std::future<void>> futures;
        for (int idx = 0; idx < options.chains; ++idx)
            futures.push_back(std::async(std::launch::async, work, idx));
        for (auto& f : futures) f.get();
    }
    // deterministic winner: best value, earliest chain on ties
    int winner = 0;
    for (int idx = 1; idx < options.chains; ++idx)
        if (chains[idx].best_value > chains[winner].best_value) winner = idx;

    ExtremalResult result;
    result.n = n;
    result.spec = spec;
    result.value = chains[winner].best_value;
    result.witness = chains[winner].best_graph;
    result.exhaustive = false;
    result.seed = chains[winner].seed;
    result.iterations = iterations;
    if (!is_h_free(result.witness, spec, options.oracle_budget))
        throw std::logic_error("ex_lower_search: witness failed the oracle re-check");
    return result;
}

}  // namespace subdiv
