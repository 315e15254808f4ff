#include "subdivlab/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace subdiv {

namespace {

struct ExactSearch {
    const std::vector<Path>& candidates;
    int n;
    std::uint64_t budget;
    int target;  // 0 = none
    std::uint64_t nodes = 0;
    std::vector<char> used;
    std::vector<int> current;
    std::vector<int> best;
    bool stopped_at_target = false;
    bool budget_hit = false;

    ExactSearch(const std::vector<Path>& cands, int n_, std::uint64_t budget_, int target_)
        : candidates(cands), n(n_), budget(budget_), target(target_), used(n_, 0) {}

    bool compatible(const Path& p) const {
        for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
            if (used[p.vertices[i]]) return false;
        return true;
    }

    void mark(const Path& p, char value) {
        for (size_t i = 1; i + 1 < p.vertices.size(); ++i) used[p.vertices[i]] = value;
    }

    // returns true to stop the whole search
    bool run(size_t start) {
        if (current.size() > best.size()) best = current;
        if (target > 0 && static_cast<int>(best.size()) >= target) {
            stopped_at_target = true;
            return true;
        }
        for (size_t i = start; i < candidates.size(); ++i) {
            if (current.size() + (candidates.size() - i) <= best.size()) break;
            if (!compatible(candidates[i])) continue;
            if (++nodes > budget) {
                budget_hit = true;
                return true;
            }
            mark(candidates[i], 1);
            current.push_back(static_cast<int>(i));
            bool stop = run(i + 1);
            current.pop_back();
            mark(candidates[i], 0);
            if (stop) return true;
        }
        return false;
    }
};

}  // namespace

Packing max_disjoint_paths(const SimpleGraph& g, int u, int v, int length, PackingMode mode,
                           std::uint64_t node_budget, int target,
                           std::uint64_t enumeration_budget) {
    if (u == v) throw std::invalid_argument("max_disjoint_paths: u == v");
    std::vector<Path> candidates = paths_between(g, u, v, length, enumeration_budget);
    Packing out;
    out.u = u;
    out.v = v;
    out.length = length;
    out.mode = mode;

    if (mode == PackingMode::greedy_maximal) {
        std::vector<char> used(g.vertex_count(), 0);
        for (const Path& p : candidates) {
            bool free = true;
            for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
                if (used[p.vertices[i]]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (size_t i = 1; i + 1 < p.vertices.size(); ++i) used[p.vertices[i]] = 1;
            out.paths.push_back(p);
        }
        out.certified = true;  // inclusion-maximal by construction
        return out;
    }

    ExactSearch search(candidates, g.vertex_count(), node_budget, target);
    search.run(0);
    if (search.budget_hit && !search.stopped_at_target)
        throw PackingBudgetExceeded("exact packing budget (" + std::to_string(node_budget) +
                                    " nodes) exceeded for pair " + std::to_string(u) + "," +
                                    std::to_string(v));
    for (int idx : search.best) out.paths.push_back(candidates[idx]);
    out.certified = true;
    out.target_reached = search.stopped_at_target;
    out.nodes_used = search.nodes;
    return out;
}

bool verify_packing(const SimpleGraph& g, const Packing& p) {
    std::vector<char> internal_used(g.vertex_count(), 0);
    int lo = std::min(p.u, p.v), hi = std::max(p.u, p.v);
    for (const Path& path : p.paths) {
        if (path.length() != p.length) return false;
        if (!is_path_in(g, path.vertices)) return false;
        if (path.front() != lo || path.back() != hi) return false;
        for (size_t i = 1; i + 1 < path.vertices.size(); ++i) {
            int w = path.vertices[i];
            if (w == lo || w == hi || internal_used[w]) return false;
            internal_used[w] = 1;
        }
    }
    return true;
}

}  // namespace subdiv
