#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "subdivlab/goodness.hpp"
#include "subdivlab/graph.hpp"
#include "subdivlab/richness.hpp"
#include "subdivlab/subdivision.hpp"

namespace subdiv {

// Explicit copy of F^s in a host graph: an injective branch map plus one
// host path per pattern edge copy. Paths are listed in sorted pattern-edge
// order with multiplicity copies consecutive, oriented from the image of
// the smaller pattern endpoint to the larger.
struct EmbeddingCertificate {
    SubdivisionSpec spec;
    std::vector<int> branch_map;            // pattern vertex -> host vertex
    std::vector<std::vector<int>> paths;    // one per edge copy, length s+1 each
};

// Complete check of the subdivision property: injectivity, path lengths and
// endpoints, adjacency, and pairwise internal disjointness (also from all
// branch images).
bool verify_certificate(const SimpleGraph& g, const EmbeddingCertificate& cert);

enum class SearchStatus { found, none_certified, budget_exhausted };

struct SubdivisionSearchResult {
    SearchStatus status = SearchStatus::none_certified;
    std::optional<EmbeddingCertificate> certificate;
    std::uint64_t nodes = 0;
};

// Exhaustive backtracking search for a copy of F^s. Branch images are tried
// in host-degree-descending order; edge paths are routed by DFS over unused
// vertices. "none_certified" is exhaustive; running out of the node budget
// yields "budget_exhausted" instead.
SubdivisionSearchResult find_subdivision_exact(const SimpleGraph& g, const SubdivisionSpec& spec,
                                               std::uint64_t node_budget = 50'000'000);

enum class StarveStep { s_too_small, no_good_paths, no_pivot, distant_filter_emptied };

std::string starve_step_name(StarveStep step);

struct FailureReport {
    int stage = 0;  // stages completed when starvation hit
    StarveStep step = StarveStep::s_too_small;
    std::size_t s_size = 0;
    std::size_t y_size = 0;
    std::size_t z_size = 0;
    std::size_t s_prime_size = 0;
    std::uint64_t good_pairs_total = 0;  // good 2k-paths inside S'
};

struct GuidedStageLog {
    int stage = 0;
    std::size_t s_size = 0;
    std::size_t y_size = 0;
    std::size_t z_size = 0;
    std::size_t s_prime_size = 0;
    int pivot = -1;
    std::uint64_t pivot_score = 0;
    // 0: S minus Y minus Z nonempty; 1: Z dropped; 2: filters emptied the
    // stage, candidates routed constructively
    int fallback_level = 0;
};

struct GuidedState {
    int k = 0;
    int t = 0;
    mpq_class eps;
    mpq_class L;
    std::vector<mpq_class> c;  // c_0..c_t, c_{l+1} = (3*5^(2k)+1) c_l + 2k eps
    std::vector<int> pivots;   // x_1..x_l chosen so far
    std::vector<GuidedStageLog> stages;
};

struct GuidedResult {
    std::optional<EmbeddingCertificate> certificate;
    std::optional<FailureReport> failure;
    GuidedState state;
};

// Stage-by-stage construction of K_t^(2k-1): keep a candidate set S, filter
// out vertices near short walks between chosen branch vertices (Y) and
// vertices not distant from one of them (Z), then pick the next branch
// vertex maximizing the number of S' vertices reachable by a good path of
// length 2k. When the filters empty a stage the engine degrades in logged
// steps (drop Z, then route candidates constructively with a used-vertex
// set) instead of giving up; disjointness is enforced by the router either
// way. Certificates are always verifier-checked; starvation produces a
// FailureReport naming the first empty step.
GuidedResult find_subdivision_guided(const SimpleGraph& g, int t, int k, double eps,
                                     const ThresholdFamily& family,
                                     std::uint64_t path_budget = 100'000'000);

struct HarvestResult {
    std::vector<std::vector<int>> tuples;  // (u_-k .. u_k), lexicographic
    bool complete = true;                  // false when the budget cut enumeration short
    std::uint64_t examined = 0;
};

// All (2k+1)-tuples (u_-k..u_k) with consecutive adjacency, endpoints in S,
// the two halves distinct as sequences, and (u_-l, u_l) poor for every
// 1 <= l <= k and all 0 <= i,j <= k-1.
HarvestResult harvest_poor_tuples(const RichnessContext& ctx, const std::vector<int>& S,
                                  std::uint64_t tuple_budget = 10'000'000);

// Re-verification used by callers and tests: checks the harvest conditions
// for one tuple.
bool check_poor_tuple(const RichnessContext& ctx, const std::vector<int>& S,
                      const std::vector<int>& tuple);

// Certificate JSON round-trip: {"branch_map": [...], "paths": [[...], ...]},
// 0-based vertex ids.
std::string certificate_to_json(const EmbeddingCertificate& cert);
EmbeddingCertificate certificate_from_json(const std::string& text, const SubdivisionSpec& spec);

}  // namespace subdiv
