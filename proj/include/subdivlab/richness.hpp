#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "subdivlab/graph.hpp"
#include "subdivlab/packing.hpp"
#include "subdivlab/subdivision.hpp"

namespace subdiv {

// Verdict of the (i,j)-rich test on an ordered pair (x,y):
// count pairs (P,Q) of directed paths, P of length i from x and Q of length
// j from y, whose endpoints are joined by at least T pairwise internally
// vertex-disjoint paths of length 2k-i-j, where T = (|V(H)|+2)(2k+1)+1.
// Rich iff that count exceeds (2(i+j)|V(H)|(2k+1) + 2(i+1)j) * D^(i+j-1)
// with D the profile's exact max degree (ratio * min degree). A pair with
// x = y is always poor.
struct RichnessReport {
    int x = 0, y = 0;
    int i = 0, j = 0;
    long long T = 0;
    mpz_class witness_pairs;   // lower bound in greedy mode, exact otherwise
    mpq_class threshold;
    bool rich = false;
    PackingMode mode = PackingMode::greedy_maximal;
    bool exact_certified = false;  // poor verdicts are heuristic in greedy mode
    bool budget_hit = false;
};

struct DistantReport {
    bool distant = false;
    std::vector<mpz_class> walk_counts;  // lengths 1..4k-2
};

// Graph on the (k+1)-tuples (u_0..u_k) with u_0 = v and consecutive
// adjacency (repeats allowed). Tuples s < t are joined when the combined
// 2k+1 vertices v, u_1..u_k, u'_1..u'_k are distinct and some coordinate
// pair (u_l, u'_l) is (i,j)-rich for some 0 <= i,j <= k-1; ell = 0 takes the
// union over l = 1..k, otherwise only the fixed l is tested.
struct AuxGraph {
    int base_vertex = 0;
    int ell = 0;  // 0 = union over 1..k
    std::vector<std::vector<int>> tuples;          // lexicographic order
    std::vector<std::pair<int, int>> edges;        // tuple indices, s < t

    SimpleGraph to_simple_graph() const;
};

struct RamseyBound {
    int colours = 0;
    int clique_size = 0;
    mpz_class value;
    bool exact = false;  // false: crude upper bound colours^(colours*clique_size)
};

// R_k(t): exact for the tabulated small cases (R_1(t) = t, R_2(3) = 6,
// R_2(4) = 18, R_3(3) = 17), crude upper bound otherwise.
RamseyBound ramsey_bound(int colours, int clique_size);

struct RichnessBudget {
    std::uint64_t packing_nodes = 10'000'000;
    std::uint64_t path_enumeration = 50'000'000;
    std::uint64_t tuple_cap = 5'000'000;
};

// Shared, memoizing context for the rich/poor tests. The packing size
// needed per endpoint pair is cached across queries.
class RichnessContext {
public:
    RichnessContext(const SimpleGraph& g, int k, const SubdivisionSpec& spec,
                    DegreeProfile profile, PackingMode mode,
                    RichnessBudget budget = RichnessBudget{});

    RichnessReport is_rich(int x, int y, int i, int j) const;
    bool is_poor_all(int x, int y) const;  // poor for every 0 <= i,j <= k-1

    const SimpleGraph& graph() const { return g_; }
    int k() const { return k_; }
    long long h_size() const { return h_size_; }
    long long T() const { return T_; }
    PackingMode mode() const { return mode_; }
    const DegreeProfile& profile() const { return profile_; }
    const RichnessBudget& budget() const { return budget_; }

    // packing size between a and b at the given length: in greedy mode a
    // lower bound that certifies ">= T" when it reaches T, in exact mode a
    // target-T exact query. Returns true iff certified >= T.
    bool has_T_disjoint(int a, int b, int length) const;

private:
    const SimpleGraph& g_;
    int k_;
    long long h_size_;
    long long T_;
    DegreeProfile profile_;
    PackingMode mode_;
    RichnessBudget budget_;
    mutable std::map<std::tuple<int, int, int>, bool> packing_memo_;  // (a, b, len) -> >= T
    mutable bool budget_hit_ = false;

public:
    bool budget_was_hit() const { return budget_hit_; }
};

// Threshold of the (i,j)-rich test as an exact rational.
mpq_class richness_threshold(int i, int j, int k, long long h_size, const DegreeProfile& profile);

RichnessReport is_rich(const SimpleGraph& g, int x, int y, int i, int j, int k,
                       const SubdivisionSpec& spec, const DegreeProfile& profile,
                       PackingMode mode);

// u and v are distant when for every 1 <= i <= 4k-2 the number of walks of
// length i between them is at most delta^(i-2k+1/2); comparison is exact.
DistantReport is_distant(const SimpleGraph& g, int u, int v, int k, const mpq_class& delta);

// ell = 0 builds the union graph over l = 1..k.
AuxGraph aux_graph(const RichnessContext& ctx, int v, int ell);

struct CliqueSearchResult {
    bool clique_free = true;
    std::vector<int> witness;  // a K_t when clique_free is false
};

// Exact branch-and-bound: is g free of K_t?
CliqueSearchResult clique_free_up_to(const SimpleGraph& g, int t);

}  // namespace subdiv
