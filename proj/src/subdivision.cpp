#include "subdivlab/subdivision.hpp"

#include <stdexcept>

namespace subdiv {

void SubdivisionSpec::validate() const {
    if (s < 0) throw std::invalid_argument("SubdivisionSpec: s must be >= 0");
    if (s == 0 && !pattern.is_simple())
        throw std::invalid_argument(
            "SubdivisionSpec: s = 0 on a pattern with a multi-edge would create parallel edges");
    if (pattern.vertex_count() < 1)
        throw std::invalid_argument("SubdivisionSpec: empty pattern");
}

SimpleGraph subdivide(const SubdivisionSpec& spec) {
    spec.validate();
    const int t = spec.pattern.vertex_count();
    SimpleGraph g(static_cast<int>(spec.vertex_count()));
    int next_internal = t;
    for (const auto& e : spec.pattern.edges()) {
        for (int copy = 0; copy < e.multiplicity; ++copy) {
            int prev = e.u;
            for (int step = 0; step < spec.s; ++step) {
                g.add_edge(prev, next_internal);
                prev = next_internal++;
            }
            g.add_edge(prev, e.v);
        }
    }
    return g;
}

SimpleGraph theta_graph(int path_len, int paths) {
    if (path_len < 1 || paths < 1) throw std::invalid_argument("theta_graph: bad parameters");
    if (path_len == 1 && paths > 1)
        throw std::invalid_argument("theta_graph: length-1 paths would be parallel edges");
    SubdivisionSpec spec{MultiGraph::parallel_edges(paths), path_len - 1};
    return subdivide(spec);
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

}  // namespace subdiv
