#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they are used to check.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "subdivlab/graph.hpp"
#include "subdivlab/threshold.hpp"

namespace oracle {

// Hand-rolled big natural number (base 2^32 limbs); only what dense matrix
// powers need. Deliberately not GMP.
class BigNat {
public:
    BigNat() = default;
    explicit BigNat(std::uint64_t value);

    BigNat operator+(const BigNat& other) const;
    BigNat operator*(const BigNat& other) const;
    bool operator==(const BigNat& other) const { return limbs_ == other.limbs_; }

    std::string to_decimal() const;

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros
    void trim();
};

// (A^i)_{uv} by full dense matrix powers over BigNat.
BigNat matrix_power_entry(const subdiv::SimpleGraph& g, int u, int v, int i);

// Full A^i over BigNat.
std::vector<std::vector<BigNat>> matrix_power(const subdiv::SimpleGraph& g, int i);

// True iff g contains a 4-cycle: some vertex pair with >= 2 common neighbors.
bool contains_c4(const subdiv::SimpleGraph& g);

// max edges of a C_4-free graph on n vertices by direct iteration over all
// labeled graphs, no isomorph rejection. n <= 6 feasible.
long long brute_force_ex_c4(int n);

// Independent recomputation of the admissible/good classification straight
// from the recursive definition (all proper contiguous subpaths checked,
// admissible counts recounted by enumeration).
struct GoodnessOracle {
    GoodnessOracle(const subdiv::SimpleGraph& g, const subdiv::ThresholdFamily& family,
                   int max_len);

    bool admissible(const std::vector<int>& path) const;
    bool good(const std::vector<int>& path) const;
    // all simple paths of the given length as canonical vertex sequences
    std::vector<std::vector<int>> all_paths(int len) const;

private:
    const subdiv::SimpleGraph& g_;
    const subdiv::ThresholdFamily& family_;
    int max_len_;
    mutable std::map<std::vector<int>, int> admissible_memo_;  // -1 unknown, 0/1
    mutable std::map<std::vector<int>, int> good_memo_;

    std::vector<int> canonical(std::vector<int> p) const;
    long long admissible_count(int u, int v, int len) const;
};

}  // namespace oracle
