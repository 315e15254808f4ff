#pragma once

#include <vector>

#include <gmpxx.h>

#include "subdivlab/graph.hpp"

namespace subdiv {

// Result of the degree-trimming extraction. The three target flags report
// whether the extracted subgraph meets the guarantees
//   e(G') >= (2c/5) * m^(1+eps)
//   max degree <= K_target * min degree,  K_target = 20 * 2^(1/eps^2 + 1)
//   m >= n^((eps - eps^2) / (2 + 2eps))
// on this instance; nothing is promised beyond truthful reporting.
struct RegularizationResult {
    std::vector<int> vertex_subset;  // original ids, ascending
    SimpleGraph subgraph;            // induced on vertex_subset
    DegreeProfile profile;           // of subgraph (all zero when empty)
    int m = 0;                       // vertex count of subgraph
    double achieved_density_exponent = 0.0;  // log e / log m - 1 (0 when undefined)

    bool edge_target_met = false;
    bool ratio_target_met = false;
    bool size_target_met = false;
    double log2_ratio_target = 0.0;  // log2 of K_target (K_target itself may overflow)

    bool empty() const { return m == 0; }
};

// Trimming extraction: repeatedly delete all vertices of degree below
// (2/5) * (1 + eps) * e(G*) / n* in the current subgraph, snapshot each
// round, and return the snapshot maximizing e / m^(1+eps).
// Requires 0 < eps < 1, c > 0 and e(G) >= c * n^(1+eps) (else throws).
RegularizationResult extract_almost_regular(const SimpleGraph& g, double eps, double c);

}  // namespace subdiv
