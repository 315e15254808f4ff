#include "subdivlab/goodness.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace subdiv {

const PathFlags* GoodnessTable::lookup(const Path& path) const {
    int len = path.length();
    if (len < 1 || len > max_len()) return nullptr;
    const auto& m = by_len_[len - 1];
    auto it = m.find(path);
    return it == m.end() ? nullptr : &it->second;
}

PathFlags GoodnessTable::flags(const Path& path) const {
    const PathFlags* f = lookup(path);
    if (!f) throw std::out_of_range("GoodnessTable::flags: path not in table");
    return *f;
}

std::uint64_t GoodnessTable::admissible_count(int u, int w, int len) const {
    if (len < 1 || len > max_len())
        throw std::out_of_range("GoodnessTable::admissible_count: bad length");
    if (u > w) std::swap(u, w);
    const auto& m = pair_admissible_[len - 1];
    auto it = m.find({u, w});
    return it == m.end() ? 0 : it->second;
}

std::uint64_t GoodnessTable::good_count(int u, int w, int len) const {
    std::uint64_t a = admissible_count(u, w, len);
    if (a == 0) return 0;
    return mpz_class(static_cast<unsigned long>(a)) <= family_->f(len) ? a : 0;
}

const std::map<Path, PathFlags>& GoodnessTable::paths(int len) const {
    if (len < 1 || len > max_len()) throw std::out_of_range("GoodnessTable::paths: bad length");
    return by_len_[len - 1];
}

const std::map<std::pair<int, int>, std::uint64_t>& GoodnessTable::pair_counts(int len) const {
    if (len < 1 || len > max_len())
        throw std::out_of_range("GoodnessTable::pair_counts: bad length");
    return pair_admissible_[len - 1];
}

std::uint64_t GoodnessTable::total_paths() const {
    std::uint64_t total = 0;
    for (const auto& m : by_len_) total += m.size();
    return total;
}

namespace {

// Canonical simple paths of exactly `len` edges starting at `start` (i.e.
// start < other endpoint), lexicographic order.
std::vector<std::vector<int>> canonical_paths_from(const SimpleGraph& g, int start, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> stack{start};
    std::vector<char> used(g.vertex_count(), 0);
    used[start] = 1;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(stack.size()) == len + 1) {
            if (stack.back() > start) out.push_back(stack);
            return;
        }
        for (int nb : g.neighbors(stack.back())) {
            if (used[nb]) continue;
            stack.push_back(nb);
            used[nb] = 1;
            self(self);
            used[nb] = 0;
            stack.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

}  // namespace

GoodnessTable classify_paths(const SimpleGraph& g, const ThresholdFamily& family, int max_len,
                             std::uint64_t path_budget, int workers) {
    if (max_len < 1) throw std::invalid_argument("classify_paths: max_len must be >= 1");
    if (max_len > family.max_len())
        throw std::invalid_argument("classify_paths: max_len exceeds family range");
    GoodnessTable table;
    table.family_ = &family;
    table.by_len_.resize(max_len);
    table.pair_admissible_.resize(max_len);
    const int n = g.vertex_count();
    std::uint64_t total = 0;

    for (int len = 1; len <= max_len; ++len) {
        // enumerate, sharded by canonical start vertex
        std::vector<std::vector<std::vector<int>>> shards(n);
        auto work = [&](int begin, int end) {
            for (int start = begin; start < end; ++start)
                shards[start] = canonical_paths_from(g, start, len);
        };
        if (workers <= 1 || n < 2) {
            work(0, n);
        } else {
            int nthreads = std::min(workers, n);
            std::vector<std::future<void>> futures;
            int chunk = (n + nthreads - 1) / nthreads;
            for (int t = 0; t < nthreads; ++t)
                futures.push_back(std::async(std::launch::async, work, t * chunk,
                                             std::min(n, (t + 1) * chunk)));
            for (auto& f : futures) f.get();
        }

        auto& path_map = table.by_len_[len - 1];
        auto& pair_map = table.pair_admissible_[len - 1];
        for (int start = 0; start < n; ++start) {
            for (auto& seq : shards[start]) {
                if (++total > path_budget) throw ClassificationBudgetExceeded(len);
                Path p{std::move(seq)};
                bool admissible;
                if (len == 1) {
                    admissible = true;
                } else {
                    // both end-deleted subpaths good <=> all proper subpaths good
                    Path left = canonical_path({p.vertices.begin(), p.vertices.end() - 1});
                    Path right = canonical_path({p.vertices.begin() + 1, p.vertices.end()});
                    admissible = table.by_len_[len - 2].at(left).good &&
                                 table.by_len_[len - 2].at(right).good;
                }
                if (admissible) ++pair_map[{p.front(), p.back()}];
                path_map.emplace(std::move(p), PathFlags{admissible, false});
            }
        }
        const mpz_class& cutoff = family.f(len);
        for (auto& [p, flags] : path_map) {
            if (!flags.admissible) continue;
            std::uint64_t a = pair_map.at({p.front(), p.back()});
            flags.good = mpz_class(static_cast<unsigned long>(a)) <= cutoff;
        }
    }
    return table;
}

std::uint64_t count_good_between(const GoodnessTable& table, int u, int v, int len) {
    return table.good_count(u, v, len);
}

BadPairSet bad_pairs(const GoodnessTable& table, int len) {
    if (len < 2 || len > table.max_len()) throw std::out_of_range("bad_pairs: bad length");
    BadPairSet out{len, {}};
    const mpz_class& cutoff = table.family().f(len);
    for (const auto& [pair, count] : table.pair_counts(len))
        if (mpz_class(static_cast<unsigned long>(count)) > cutoff) out.pairs.push_back(pair);
    return out;
}

std::uint64_t count_good_within(const GoodnessTable& table, const std::vector<int>& S, int len) {
    if (len < 1 || len > table.max_len())
        throw std::out_of_range("count_good_within: bad length");
    std::vector<char> in_s;
    for (int v : S) {
        if (v < 0) throw std::invalid_argument("count_good_within: negative vertex");
        if (v >= static_cast<int>(in_s.size())) in_s.resize(v + 1, 0);
        in_s[v] = 1;
    }
    auto member = [&](int v) { return v < static_cast<int>(in_s.size()) && in_s[v]; };
    const mpz_class& cutoff = table.family().f(len);
    std::uint64_t total = 0;
    for (const auto& [pair, count] : table.pair_counts(len)) {
        if (!member(pair.first) || !member(pair.second)) continue;
        if (mpz_class(static_cast<unsigned long>(count)) <= cutoff) total += count;
    }
    return total;
}

}  // namespace subdiv
