#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "subdivlab/graph.hpp"

namespace subdiv {

// Simple path stored in canonical orientation: front() <= back().
struct Path {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    bool operator==(const Path& other) const = default;
    bool operator<(const Path& other) const { return vertices < other.vertices; }
};

// Reverses the sequence if needed so that front() <= back().
Path canonical_path(std::vector<int> vertices);

// True iff consecutive vertices are adjacent in g and all vertices distinct.
bool is_path_in(const SimpleGraph& g, const std::vector<int>& vertices);

// Number of walks of length i between u and v, exactly ((A^i)_{uv}).
mpz_class count_walks(const SimpleGraph& g, int u, int v, int i);

// All simple paths with exactly `length` edges between u and v, canonical
// orientation, lexicographic order. node_budget caps DFS extensions; 0 means
// unlimited. Throws EnumerationBudgetExceeded past the cap.
std::vector<Path> paths_between(const SimpleGraph& g, int u, int v, int length,
                                std::uint64_t node_budget = 0);

// All simple directed paths of length i starting at x, lexicographic order.
// i = 0 yields the single trivial path {x}.
std::vector<std::vector<int>> directed_paths(const SimpleGraph& g, int x, int i,
                                             std::uint64_t node_budget = 0);

// First simple path of exactly `length` edges from u to v in lexicographic
// order, or empty if none exists.
std::vector<int> first_path_between(const SimpleGraph& g, int u, int v, int length);

// reach[i] = set of vertices reachable from start by a walk of exactly i
// edges, for i = 0..max_len (as boolean masks).
std::vector<std::vector<char>> exact_length_reach(const SimpleGraph& g, int start, int max_len);

// rows[i][v] = number of walks of length i from start to v, i = 0..max_len.
std::vector<std::vector<mpz_class>> walk_count_rows(const SimpleGraph& g, int start, int max_len);

// Vertices at graph distance <= radius from any seed (multi-source BFS ball).
std::vector<char> bfs_ball(const SimpleGraph& g, const std::vector<int>& seeds, int radius);

struct EnumerationBudgetExceeded : std::runtime_error {
    explicit EnumerationBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subdiv
