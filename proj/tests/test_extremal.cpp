#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "subdivlab/extremal.hpp"
#include "subdivlab/random_graphs.hpp"
#include "subdivlab/subdivision.hpp"

using namespace subdiv;

namespace {

SubdivisionSpec c4_spec() { return SubdivisionSpec{MultiGraph::parallel_edges(2), 1}; }

}  // namespace

TEST_CASE("canonical codes are permutation invariants") {
    std::mt19937_64 meta(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(meta() % 4);
        SimpleGraph g = gen_erdos_renyi(n, 0.5, meta());
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[meta() % (i + 1)]);
        CHECK(canonical_code(g) == canonical_code(g.relabeled(perm)));
        CHECK(canonical_code(graph_from_code(n, canonical_code(g))) == canonical_code(g));
    }
    // non-isomorphic graphs with equal degree sequences separate
    SimpleGraph c6 = cycle_graph(6);
    SimpleGraph two_triangles(6);
    for (auto [u, v] :
         std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_triangles.add_edge(u, v);
    CHECK(canonical_code(c6) != canonical_code(two_triangles));
}

TEST_CASE("exact extremal values for C_4 at tiny n") {
    // n = 3: C_4 cannot fit, the complete graph wins
    ExtremalResult r3 = ex_exact(3, c4_spec());
    CHECK(r3.value == 3);
    CHECK(r3.exhaustive);

    ExtremalResult r4 = ex_exact(4, c4_spec());
    CHECK(r4.value == 4);
    CHECK(!oracle::contains_c4(r4.witness));
    CHECK(r4.witness.edge_count() == 4);

    ExtremalResult r5 = ex_exact(5, c4_spec());
    CHECK(r5.value == 6);
    CHECK(!oracle::contains_c4(r5.witness));
}

TEST_CASE("exhaustive values match the labeled brute-force oracle") {
    for (int n = 3; n <= 5; ++n)
        CHECK(ex_exact(n, c4_spec()).value == oracle::brute_force_ex_c4(n));
}

TEST_CASE("monotonicity in n") {
    long long prev = 0;
    for (int n = 2; n <= 6; ++n) {
        long long value = ex_exact(n, c4_spec()).value;
        CHECK(value >= prev);
        prev = value;
    }
}

TEST_CASE("exact extremal for C_6 spot instance") {
    SubdivisionSpec c6{MultiGraph::complete(3), 1};
    ExtremalResult r = ex_exact(6, c6);
    CHECK(r.value >= 7);  // C_6-free graphs on 6 vertices beat the cycle bound
    CHECK(find_subdivision_exact(r.witness, c6).status == SearchStatus::none_certified);
}

TEST_CASE("cap errors") {
    CHECK_THROWS(ex_exact(9, c4_spec(), 8));
    SubdivisionSpec edgeless{MultiGraph(2), 1};
    CHECK_THROWS(ex_exact(4, edgeless));
}

TEST_CASE("annealing search reaches the exact value on tiny instances") {
    ExtremalResult exact = ex_exact(4, c4_spec());
    AnnealOptions opt;
    opt.chains = 2;
    ExtremalResult search = ex_lower_search(4, c4_spec(), 4000, 11, opt);
    CHECK(search.value == exact.value);
    CHECK(!oracle::contains_c4(search.witness));

    ExtremalResult small = ex_lower_search(5, c4_spec(), 4000, 12, opt);
    CHECK(small.value <= ex_exact(5, c4_spec()).value);
}

TEST_CASE("search witnesses are always H-free") {
    std::mt19937_64 meta(9);
    AnnealOptions opt;
    opt.chains = 2;
    for (int trial = 0; trial < 3; ++trial) {
        ExtremalResult r = ex_lower_search(8, c4_spec(), 3000, meta(), opt);
        CHECK(!oracle::contains_c4(r.witness));
        CHECK(r.witness.edge_count() == r.value);
    }
}

TEST_CASE("search clears the Petersen floor at n = 10") {
    // ex(10, C_4) = 16 with the Petersen graph at 15 edges; a modest budget
    // must reach at least 13
    CHECK(!oracle::contains_c4(petersen_graph()));
    AnnealOptions opt;
    opt.chains = 4;
    ExtremalResult r = ex_lower_search(10, c4_spec(), 20000, 7, opt);
    CHECK(r.value >= 13);
    CHECK(!oracle::contains_c4(r.witness));
}

TEST_CASE("search is deterministic per seed, including parallel chains") {
    AnnealOptions opt;
    opt.chains = 3;
    ExtremalResult a = ex_lower_search(7, c4_spec(), 3000, 42, opt);
    opt.workers = 3;
    ExtremalResult b = ex_lower_search(7, c4_spec(), 3000, 42, opt);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.seed == b.seed);
}
