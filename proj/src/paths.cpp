#include "subdivlab/paths.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace subdiv {

Path canonical_path(std::vector<int> vertices) {
    if (vertices.empty()) throw std::invalid_argument("canonical_path: empty sequence");
    if (vertices.front() > vertices.back()) std::reverse(vertices.begin(), vertices.end());
    return Path{std::move(vertices)};
}

bool is_path_in(const SimpleGraph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !g.has_edge(vertices[i - 1], v)) return false;
    }
    return true;
}

mpz_class count_walks(const SimpleGraph& g, int u, int v, int i) {
    if (i < 0) throw std::invalid_argument("count_walks: negative length");
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("count_walks: vertex out of range");
    std::vector<mpz_class> cur(n, 0), next(n, 0);
    cur[u] = 1;
    for (int step = 0; step < i; ++step) {
        for (int w = 0; w < n; ++w) next[w] = 0;
        for (int w = 0; w < n; ++w) {
            if (cur[w] == 0) continue;
            for (int nb : g.neighbors(w)) next[nb] += cur[w];
        }
        std::swap(cur, next);
    }
    return cur[v];
}

namespace {

struct PathDfs {
    const SimpleGraph& g;
    int target;       // -1 means any endpoint accepted
    int length;
    std::uint64_t budget;    // 0 = unlimited
    std::uint64_t nodes = 0;
    bool stop_at_first = false;
    std::vector<int> stack;
    std::vector<char> used;
    std::vector<std::vector<int>>* out;
    std::vector<int> first_found;

    PathDfs(const SimpleGraph& g_, int target_, int length_, std::uint64_t budget_,
            std::vector<std::vector<int>>* out_)
        : g(g_), target(target_), length(length_), budget(budget_),
          used(g_.vertex_count(), 0), out(out_) {}

    // returns true when the search should stop (first-path mode)
    bool run(int start) {
        stack.push_back(start);
        used[start] = 1;
        bool done = extend();
        used[start] = 0;
        stack.pop_back();
        return done;
    }

    bool extend() {
        if (static_cast<int>(stack.size()) == length + 1) {
            if (target >= 0 && stack.back() != target) return false;
            if (stop_at_first) {
                first_found = stack;
                return true;
            }
            out->push_back(stack);
            return false;
        }
        int remaining = length + 1 - static_cast<int>(stack.size());
        for (int nb : g.neighbors(stack.back())) {
            if (used[nb]) continue;
            if (target >= 0 && remaining == 1 && nb != target) continue;
            if (target >= 0 && nb == target && remaining != 1) continue;
            if (budget != 0 && ++nodes > budget)
                throw EnumerationBudgetExceeded("path enumeration budget exceeded");
            stack.push_back(nb);
            used[nb] = 1;
            bool done = extend();
            used[nb] = 0;
            stack.pop_back();
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

std::vector<Path> paths_between(const SimpleGraph& g, int u, int v, int length,
                                std::uint64_t node_budget) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("paths_between: vertex out of range");
    if (length >= 1 && u == v) throw std::invalid_argument("paths_between: u == v");
    if (length == 0) return u == v ? std::vector<Path>{Path{{u}}} : std::vector<Path>{};
    int a = std::min(u, v), b = std::max(u, v);
    std::vector<std::vector<int>> raw;
    PathDfs dfs(g, b, length, node_budget, &raw);
    dfs.run(a);
    std::vector<Path> out;
    out.reserve(raw.size());
    for (auto& seq : raw) out.push_back(Path{std::move(seq)});  // already canonical: a < b
    return out;
}

std::vector<std::vector<int>> directed_paths(const SimpleGraph& g, int x, int i,
                                             std::uint64_t node_budget) {
    if (x < 0 || x >= g.vertex_count())
        throw std::invalid_argument("directed_paths: vertex out of range");
    if (i < 0) throw std::invalid_argument("directed_paths: negative length");
    if (i == 0) return {{x}};
    std::vector<std::vector<int>> out;
    PathDfs dfs(g, -1, i, node_budget, &out);
    dfs.run(x);
    return out;
}

std::vector<int> first_path_between(const SimpleGraph& g, int u, int v, int length) {
    if (length == 0) return u == v ? std::vector<int>{u} : std::vector<int>{};
    if (u == v) return {};
    std::vector<std::vector<int>> unused;
    PathDfs dfs(g, v, length, 0, &unused);
    dfs.stop_at_first = true;
    dfs.run(u);
    return dfs.first_found;
}

std::vector<std::vector<char>> exact_length_reach(const SimpleGraph& g, int start, int max_len) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> reach(static_cast<size_t>(max_len) + 1,
                                         std::vector<char>(n, 0));
    reach[0][start] = 1;
    for (int i = 1; i <= max_len; ++i)
        for (int w = 0; w < n; ++w)
            if (reach[i - 1][w])
                for (int nb : g.neighbors(w)) reach[i][nb] = 1;
    return reach;
}

std::vector<std::vector<mpz_class>> walk_count_rows(const SimpleGraph& g, int start,
                                                    int max_len) {
    const int n = g.vertex_count();
    std::vector<std::vector<mpz_class>> rows(static_cast<size_t>(max_len) + 1,
                                             std::vector<mpz_class>(n, 0));
    rows[0][start] = 1;
    for (int i = 1; i <= max_len; ++i)
        for (int w = 0; w < n; ++w) {
            if (rows[i - 1][w] == 0) continue;
            for (int nb : g.neighbors(w)) rows[i][nb] += rows[i - 1][w];
        }
    return rows;
}

std::vector<char> bfs_ball(const SimpleGraph& g, const std::vector<int>& seeds, int radius) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::deque<int> queue;
    for (int s : seeds)
        if (dist[s] == -1) {
            dist[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        if (dist[w] == radius) continue;
        for (int nb : g.neighbors(w))
            if (dist[nb] == -1) {
                dist[nb] = dist[w] + 1;
                queue.push_back(nb);
            }
    }
    std::vector<char> ball(n, 0);
    for (int v = 0; v < n; ++v) ball[v] = dist[v] != -1;
    return ball;
}

}  // namespace subdiv
