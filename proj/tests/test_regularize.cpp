#include <doctest.h>

#include "subdivlab/regularize.hpp"
#include "subdivlab/subdivision.hpp"

using namespace subdiv;

TEST_CASE("complete graphs come back almost-regular") {
    SimpleGraph k20 = complete_graph(20);
    RegularizationResult r = extract_almost_regular(k20, 0.5, 1.0);
    CHECK(!r.empty());
    CHECK(r.ratio_target_met);  // complete graphs are 1-almost-regular
    CHECK(r.edge_target_met);
    CHECK(r.size_target_met);
    CHECK(verify_almost_regular(r.subgraph, r.profile.ratio()));
}

TEST_CASE("K_8 plus isolated vertices") {
    SimpleGraph g(58);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) g.add_edge(u, v);

    // e(G) = 28 < 1 * 58^1.2, rejected at the precondition
    CHECK_THROWS(extract_almost_regular(g, 0.2, 1.0));

    // a small enough c admits the input; trimming lands inside K_8
    RegularizationResult r = extract_almost_regular(g, 0.2, 0.2);
    CHECK(r.m == 8);
    CHECK(r.subgraph.edge_count() == 28);
    for (int v : r.vertex_subset) CHECK(v < 8);
    CHECK(r.profile.min_degree == 7);
    CHECK(r.edge_target_met);
    CHECK(r.ratio_target_met);
    CHECK(r.size_target_met);
}

TEST_CASE("result is an induced subgraph with a recomputable profile") {
    SimpleGraph g(12);
    for (int v = 1; v < 8; ++v) g.add_edge(0, v);  // star core
    for (int u = 8; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) g.add_edge(u, v);  // K_4 tail
    RegularizationResult r = extract_almost_regular(g, 0.1, 0.5);
    SimpleGraph reinduced = g.induced(r.vertex_subset);
    CHECK(reinduced == r.subgraph);
    DegreeProfile p = degree_profile(r.subgraph);
    CHECK(p.min_degree == r.profile.min_degree);
    CHECK(p.max_degree == r.profile.max_degree);
    CHECK(verify_almost_regular(r.subgraph, r.profile.ratio()));
}

TEST_CASE("parameter validation") {
    SimpleGraph k5 = complete_graph(5);
    CHECK_THROWS(extract_almost_regular(k5, 0.0, 1.0));
    CHECK_THROWS(extract_almost_regular(k5, 1.0, 1.0));
    CHECK_THROWS(extract_almost_regular(k5, 0.5, 0.0));
}
