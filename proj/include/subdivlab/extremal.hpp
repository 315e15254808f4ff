#pragma once

#include <cstdint>
#include <vector>

#include "subdivlab/embedder.hpp"
#include "subdivlab/graph.hpp"
#include "subdivlab/subdivision.hpp"

namespace subdiv {

struct ExtremalResult {
    int n = 0;
    SubdivisionSpec spec;
    long long value = 0;       // exact maximum (exhaustive) or certified lower bound (search)
    SimpleGraph witness;       // H-free with e(witness) = value
    bool exhaustive = false;
    std::uint64_t seed = 0;        // search only: seed of the winning chain
    std::uint64_t iterations = 0;  // search only: per-chain iteration budget
};

// Canonical form of a small graph (n <= 11): minimum over all vertex
// permutations of the colex-packed upper-triangle bit string.
std::uint64_t canonical_code(const SimpleGraph& g);
SimpleGraph graph_from_code(int n, std::uint64_t code);

// Exact ex(n, F^s) by descending-edge-count level search with canonical-form
// isomorph rejection, H-freeness certified by the exact oracle per graph.
// Throws when n exceeds the cap or the oracle budget is hit.
ExtremalResult ex_exact(int n, const SubdivisionSpec& spec, int cap = 8,
                        std::uint64_t oracle_budget = 50'000'000);

struct AnnealOptions {
    int chains = 4;
    double t0 = 2.0;
    double cooling = 0.9995;
    std::uint64_t stagnation_limit = 2000;
    std::uint64_t oracle_budget = 5'000'000;
    int workers = 1;
};

// Simulated annealing over edge flips: additions are accepted only when the
// exact oracle certifies the new graph H-free, removals are accepted with
// the usual temperature probability. The result is a certified lower bound;
// the witness is re-verified by a fresh oracle run.
ExtremalResult ex_lower_search(int n, const SubdivisionSpec& spec, std::uint64_t iterations,
                               std::uint64_t seed, AnnealOptions options = AnnealOptions{});

}  // namespace subdiv
