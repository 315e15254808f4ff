#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "subdivlab/graph.hpp"
#include "subdivlab/paths.hpp"
#include "subdivlab/threshold.hpp"

namespace subdiv {

struct PathFlags {
    bool admissible = false;
    bool good = false;
};

// Complete classification of all simple paths of lengths 1..max_len:
//   - every length-1 path is admissible and good
//   - a path is admissible iff every proper contiguous subpath is good
//     (equivalently: both end-deleted subpaths of length l-1 are good)
//   - a path is good iff it is admissible and the number of admissible
//     paths of the same length between its endpoints is at most f(l)
// Per unordered pair, admissible_count(u, w, l) is that count A_l(u, w).
class GoodnessTable {
public:
    int max_len() const { return static_cast<int>(by_len_.size()); }

    const PathFlags* lookup(const Path& path) const;  // null if not a path of the table's graph
    PathFlags flags(const Path& path) const;          // throws if unknown

    std::uint64_t admissible_count(int u, int w, int len) const;
    std::uint64_t good_count(int u, int w, int len) const;  // 0 or A_l, never > f(l)

    // All classified paths of a given length, lexicographic order.
    const std::map<Path, PathFlags>& paths(int len) const;
    const std::map<std::pair<int, int>, std::uint64_t>& pair_counts(int len) const;

    std::uint64_t total_paths() const;

    friend GoodnessTable classify_paths(const SimpleGraph& g, const ThresholdFamily& family,
                                        int max_len, std::uint64_t path_budget, int workers);
    const ThresholdFamily& family() const { return *family_; }

private:
    std::vector<std::map<Path, PathFlags>> by_len_;                          // index len-1
    std::vector<std::map<std::pair<int, int>, std::uint64_t>> pair_admissible_;  // index len-1
    const ThresholdFamily* family_ = nullptr;
};

struct ClassificationBudgetExceeded : std::runtime_error {
    int offending_length;
    explicit ClassificationBudgetExceeded(int len)
        : std::runtime_error("path classification budget exceeded at length " +
                             std::to_string(len)),
          offending_length(len) {}
};

// workers > 1 shards the per-length enumeration over start vertices; shards
// are merged in vertex order so output is schedule-independent.
GoodnessTable classify_paths(const SimpleGraph& g, const ThresholdFamily& family, int max_len,
                             std::uint64_t path_budget = 100'000'000, int workers = 1);

std::uint64_t count_good_between(const GoodnessTable& table, int u, int v, int len);

struct BadPairSet {
    int length;
    std::vector<std::pair<int, int>> pairs;  // sorted, u < v
};

// Pairs joined by at least one admissible-but-not-good path of the given
// length, i.e. pairs with admissible_count > f(len).
BadPairSet bad_pairs(const GoodnessTable& table, int len);

// Number of good paths of the given length with both endpoints in S.
std::uint64_t count_good_within(const GoodnessTable& table, const std::vector<int>& S, int len);

}  // namespace subdiv
