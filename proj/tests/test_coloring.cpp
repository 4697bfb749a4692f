#include <gtest/gtest.h>

#include <random>

#include "oddhole/coloring.hpp"
#include "oddhole/generators.hpp"
#include "oracles.hpp"

using namespace oddhole;

namespace {

Graph grotzsch() { return mycielski(cycle(5)); }

bool oracle_critical(const Graph& g, int k) {
    if (oracle::chromatic_number(g) != k) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const Vertex gone[] = {v};
        if (oracle::chromatic_number(remove_vertices(g, gone).graph) != k - 1) return false;
    }
    return true;
}

}  // namespace

TEST(Coloring, PetersenIsThreeColourable) {
    const auto c = is_k_colorable(petersen(), 3);
    ASSERT_TRUE(c);
    EXPECT_TRUE(verify_coloring(petersen(), *c));
    EXPECT_FALSE(is_k_colorable(petersen(), 2));
    EXPECT_EQ(chromatic_number(petersen()).chi, 3);
}

TEST(Coloring, SmallCases) {
    EXPECT_EQ(chromatic_number(Graph::from_edges(0, {})).chi, 0);
    EXPECT_EQ(chromatic_number(Graph::from_edges(3, {})).chi, 1);
    EXPECT_EQ(chromatic_number(cycle(6)).chi, 2);
    EXPECT_EQ(chromatic_number(cycle(7)).chi, 3);
    EXPECT_EQ(chromatic_number(k4_subdivision(1, 1, 1).graph).chi, 4);
    EXPECT_FALSE(is_k_colorable(cycle(3), 0));
    EXPECT_TRUE(is_k_colorable(Graph::from_edges(0, {}), 0));
}

TEST(Coloring, GrotzschAndWheel) {
    const Graph g = grotzsch();
    EXPECT_EQ(g.num_vertices(), 11);
    EXPECT_EQ(g.num_edges(), 20);
    const auto r = chromatic_number(g);
    EXPECT_EQ(r.chi, 4);
    EXPECT_TRUE(verify_coloring(g, r.certificate));
    EXPECT_EQ(chromatic_number(odd_wheel(5)).chi, 4);
    EXPECT_EQ(chromatic_number(odd_wheel(7)).chi, 4);
}

TEST(Coloring, GeneralizedPetersenIsThreeChromatic) {
    for (int n : {5, 7, 8}) {
        const Graph g = generalized_petersen(n, 2);
        const auto r = chromatic_number(g);
        EXPECT_EQ(r.chi, 3) << n;
        EXPECT_TRUE(verify_coloring(g, r.certificate)) << n;
        EXPECT_EQ(r.chi, oracle::chromatic_number(g)) << n;
    }
}

TEST(Coloring, VerifyRejectsBadCertificates) {
    const Graph g = cycle(5);
    EXPECT_FALSE(verify_coloring(g, {3, {0, 1, 0, 1, 0}}));  // 4 ~ 0
    EXPECT_FALSE(verify_coloring(g, {3, {0, 1, 0, 1}}));     // too short
    EXPECT_FALSE(verify_coloring(g, {2, {0, 1, 0, 1, 2}}));  // out of range
    EXPECT_TRUE(verify_coloring(g, {3, {0, 1, 0, 1, 2}}));
}

TEST(Coloring, MatchesOracle) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (i % 5));
        const auto r = chromatic_number(g);
        ASSERT_EQ(r.chi, oracle::chromatic_number(g));
        ASSERT_TRUE(verify_coloring(g, r.certificate));
        ASSERT_EQ(r.certificate.k, r.chi);
        ASSERT_LE(greedy_clique_bound(g), r.chi);
    }
}

TEST(Coloring, MycielskiRaisesChromaticNumberByOne) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        if (g.num_edges() == 0) continue;
        ASSERT_EQ(chromatic_number(mycielski(g)).chi, oracle::chromatic_number(g) + 1);
    }
}

TEST(Criticality, Examples) {
    const auto w5 = is_k_vertex_critical(odd_wheel(5), 4);
    EXPECT_TRUE(w5.is_critical);
    EXPECT_EQ(w5.chi, 4);
    EXPECT_TRUE(is_k_vertex_critical(grotzsch(), 4).is_critical);
    EXPECT_TRUE(is_k_vertex_critical(cycle(7), 3).is_critical);
    EXPECT_TRUE(is_k_vertex_critical(k4_subdivision(1, 1, 1).graph, 4).is_critical);

    const auto p = is_k_vertex_critical(petersen(), 4);
    EXPECT_FALSE(p.is_critical);
    EXPECT_EQ(p.chi, 3);

    // C5 with a pendant: deleting the pendant keeps chi = 3.
    const std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}};
    const auto pend = is_k_vertex_critical(Graph::from_edge_list(6, pairs), 3);
    EXPECT_FALSE(pend.is_critical);
    EXPECT_EQ(pend.failing_vertex, 5);
}

TEST(Criticality, MatchesOracle) {
    std::mt19937_64 rng(43);
    int critical = 0;
    for (int i = 0; i < 300; ++i) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(rng, n, 0.6);
        for (int k : {3, 4}) {
            const bool want = oracle_critical(g, k);
            critical += want;
            ASSERT_EQ(is_k_vertex_critical(g, k).is_critical, want);
        }
    }
    EXPECT_GT(critical, 0);
}
