#pragma once

#include <cstdint>
#include <vector>

#include "subdivlab/graph.hpp"
#include "subdivlab/paths.hpp"

namespace subdiv {

enum class PackingMode { greedy_maximal, exact_max };

struct Packing {
    int u = 0, v = 0;
    int length = 0;
    std::vector<Path> paths;  // pairwise internally vertex-disjoint
    PackingMode mode = PackingMode::greedy_maximal;

    // exact_max only: true when the search exhausted all branches (the size
    // is the true maximum) or stopped early having reached the caller's
    // target (the size is a certified lower bound >= target).
    bool certified = true;
    bool target_reached = false;
    std::uint64_t nodes_used = 0;

    int size() const { return static_cast<int>(paths.size()); }
};

struct PackingBudgetExceeded : std::runtime_error {
    explicit PackingBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Internally vertex-disjoint u-v paths of the given length.
//   greedy_maximal: scan candidate paths in lexicographic order, keep each
//     path disjoint from all kept ones. Inclusion-maximal, deterministic.
//   exact_max: branch and bound over the candidate list; node budget capped,
//     throws PackingBudgetExceeded when certification is impossible within
//     it. target > 0 allows stopping as soon as `target` disjoint paths are
//     found (certifies "size >= target" without exhausting the search).
Packing max_disjoint_paths(const SimpleGraph& g, int u, int v, int length, PackingMode mode,
                           std::uint64_t node_budget = 10'000'000, int target = 0,
                           std::uint64_t enumeration_budget = 0);

// True iff the listed paths are pairwise internally vertex-disjoint u-v
// paths of the stated length in g.
bool verify_packing(const SimpleGraph& g, const Packing& p);

}  // namespace subdiv
