#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace subdiv {

// Undirected simple graph on vertex ids 0..n-1 with sorted neighbor lists.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(n) {}

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Both mutators keep neighbor lists sorted. add_edge rejects loops and
    // duplicates, remove_edge rejects missing edges.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v
    SimpleGraph induced(const std::vector<int>& vertices) const;
    SimpleGraph relabeled(const std::vector<int>& perm) const;  // vertex v -> perm[v]

    bool operator==(const SimpleGraph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Multigraph: unordered edges with multiplicity >= 1, loops forbidden.
class MultiGraph {
public:
    struct Edge {
        int u, v;       // u < v
        int multiplicity;
    };

    MultiGraph() = default;
    explicit MultiGraph(int n) : n_(n) {}

    static MultiGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Adds `mult` to the multiplicity of {u, v}, inserting the edge if new.
    void add_edge(int u, int v, int mult = 1);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted by (u, v)
    long long total_multiplicity() const;
    bool is_simple() const;  // all multiplicities == 1

    static MultiGraph complete(int t);                    // K_t
    static MultiGraph parallel_edges(int multiplicity);   // two vertices, given multiplicity

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;

    bool ratio_finite() const { return min_degree > 0; }
    // max/min degree as an exact rational; requires min_degree > 0.
    mpq_class ratio() const;
};

DegreeProfile degree_profile(const SimpleGraph& g);

// True iff max degree <= K * min degree with min degree > 0.
bool verify_almost_regular(const SimpleGraph& g, const mpq_class& K);

// Edge-list text format: one edge per line "u v" (0-based), '#' comment lines
// and blank lines ignored. The multigraph variant accepts an optional third
// column with the multiplicity (default 1); repeated lines accumulate.
// n is max id + 1 unless a larger n_hint is given.
SimpleGraph read_simple_graph(std::istream& in, int n_hint = 0);
SimpleGraph read_simple_graph_file(const std::string& path, int n_hint = 0);
MultiGraph read_multigraph(std::istream& in, int n_hint = 0);
MultiGraph read_multigraph_file(const std::string& path, int n_hint = 0);

void write_simple_graph(std::ostream& out, const SimpleGraph& g);
void write_simple_graph_file(const std::string& path, const SimpleGraph& g);
void write_multigraph(std::ostream& out, const MultiGraph& g);

}  // namespace subdiv
