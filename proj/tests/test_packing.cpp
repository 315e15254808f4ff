#include <doctest.h>

#include <random>

#include "subdivlab/goodness.hpp"
#include "subdivlab/packing.hpp"
#include "subdivlab/random_graphs.hpp"
#include "subdivlab/subdivision.hpp"

using namespace subdiv;

TEST_CASE("packing on spec instances") {
    SimpleGraph c4 = cycle_graph(4);
    Packing p1 = max_disjoint_paths(c4, 0, 2, 2, PackingMode::exact_max);
    CHECK(p1.size() == 2);
    CHECK(verify_packing(c4, p1));

    SimpleGraph theta = theta_graph(3, 5);
    Packing p2 = max_disjoint_paths(theta, 0, 1, 3, PackingMode::exact_max);
    CHECK(p2.size() == 5);
    CHECK(verify_packing(theta, p2));

    SimpleGraph k5 = complete_graph(5);
    Packing p3 = max_disjoint_paths(k5, 0, 1, 2, PackingMode::greedy_maximal);
    CHECK(p3.size() == 3);
    CHECK(verify_packing(k5, p3));
}

TEST_CASE("greedy is deterministic and maximal") {
    SimpleGraph g = gen_erdos_renyi(10, 0.5, 3);
    Packing a = max_disjoint_paths(g, 0, 1, 3, PackingMode::greedy_maximal);
    Packing b = max_disjoint_paths(g, 0, 1, 3, PackingMode::greedy_maximal);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) CHECK(a.paths[i].vertices == b.paths[i].vertices);
    CHECK(verify_packing(g, a));
    // maximality: every candidate path hits some chosen internal vertex
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& p : a.paths)
        for (size_t i = 1; i + 1 < p.vertices.size(); ++i) used[p.vertices[i]] = 1;
    for (const auto& cand : paths_between(g, 0, 1, 3)) {
        bool blocked = false;
        for (size_t i = 1; i + 1 < cand.vertices.size(); ++i)
            if (used[cand.vertices[i]]) blocked = true;
        CHECK(blocked);
    }
}

TEST_CASE("exact packing dominates greedy") {
    std::mt19937_64 meta(17);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(meta() % 5);
        SimpleGraph g = gen_erdos_renyi(n, 0.55, meta());
        int u = 0, v = 1;
        for (int len = 2; len <= 3; ++len) {
            Packing greedy = max_disjoint_paths(g, u, v, len, PackingMode::greedy_maximal);
            Packing exact = max_disjoint_paths(g, u, v, len, PackingMode::exact_max);
            CHECK(exact.size() >= greedy.size());
            CHECK(verify_packing(g, greedy));
            CHECK(verify_packing(g, exact));
        }
    }
}

TEST_CASE("length-2 exact packing equals the common neighbor count") {
    std::mt19937_64 meta(23);
    for (int trial = 0; trial < 20; ++trial) {
        SimpleGraph g = gen_erdos_renyi(8, 0.5, meta());
        int common = 0;
        for (int w = 2; w < 8; ++w)
            if (g.has_edge(0, w) && g.has_edge(1, w)) ++common;
        Packing p = max_disjoint_paths(g, 0, 1, 2, PackingMode::exact_max);
        CHECK(p.size() == common);
    }
}

TEST_CASE("target short-circuits the exact search") {
    SimpleGraph theta = theta_graph(2, 25);
    Packing p = max_disjoint_paths(theta, 0, 1, 2, PackingMode::exact_max, 10'000'000, 10);
    CHECK(p.target_reached);
    CHECK(p.size() >= 10);
}

TEST_CASE("exact packing budget error") {
    // dense bipartite-ish graph with many length-3 paths and tiny budget
    SimpleGraph g = complete_graph(9);
    CHECK_THROWS_AS(max_disjoint_paths(g, 0, 1, 3, PackingMode::exact_max, 3),
                    PackingBudgetExceeded);
}

TEST_CASE("verify_packing rejects corruption") {
    SimpleGraph c4 = cycle_graph(4);
    Packing p = max_disjoint_paths(c4, 0, 2, 2, PackingMode::exact_max);
    REQUIRE(p.size() == 2);
    Packing wrong_len = p;
    wrong_len.length = 3;
    CHECK(!verify_packing(c4, wrong_len));
    Packing shared = p;
    shared.paths[1] = shared.paths[0];
    CHECK(!verify_packing(c4, shared));
}
