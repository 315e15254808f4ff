#pragma once

#include "subdivlab/graph.hpp"

namespace subdiv {

// F^s: every edge of the pattern F becomes a path with s internal vertices
// (length s + 1), paths pairwise internally vertex-disjoint.
struct SubdivisionSpec {
    MultiGraph pattern;
    int s = 0;

    int branch_count() const { return pattern.vertex_count(); }           // t = |V(F)|
    long long vertex_count() const {                                      // |V(F^s)|
        return pattern.vertex_count() + static_cast<long long>(s) * pattern.total_multiplicity();
    }
    long long edge_count() const {                                        // |E(F^s)|
        return static_cast<long long>(s + 1) * pattern.total_multiplicity();
    }

    void validate() const;  // throws on s < 0 or s = 0 with a multi-edge
};

// Branch vertices keep ids 0..t-1; internal vertices are numbered
// consecutively per edge copy, in sorted edge order, multiplicity copies in
// sequence. Internal vertices of the c-th path appear in path order.
SimpleGraph subdivide(const SubdivisionSpec& spec);

// Theta graph: two branch vertices joined by `paths` internally disjoint
// paths of length `path_len`.
SimpleGraph theta_graph(int path_len, int paths);

SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph petersen_graph();

}  // namespace subdiv
