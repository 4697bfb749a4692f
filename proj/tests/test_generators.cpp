#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include "oddhole/coloring.hpp"
#include "oddhole/generators.hpp"
#include "oddhole/graph_io.hpp"
#include "oddhole/holes.hpp"
#include "oracles.hpp"

using namespace oddhole;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("oddhole_gen_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Generators, Cycle) {
    EXPECT_EQ(cycle(7).num_edges(), 7);
    EXPECT_TRUE(cycle(7).adjacent(6, 0));
    EXPECT_THROW(cycle(2), MalformedInput);
}

TEST(Generators, Theta) {
    const Graph g = theta(2, 3, 4);
    EXPECT_EQ(g.num_vertices(), 8);
    EXPECT_EQ(g.num_edges(), 9);
    EXPECT_EQ(g.degree(0), 3);
    EXPECT_EQ(g.degree(1), 3);
    EXPECT_EQ(theta(1, 2, 3).num_vertices(), 5);
    EXPECT_TRUE(theta(1, 2, 3).adjacent(0, 1));
    EXPECT_THROW(theta(1, 1, 2), MalformedInput);
    EXPECT_THROW(theta(0, 2, 2), MalformedInput);
}

TEST(Generators, OddWheel) {
    const Graph w = odd_wheel(5);
    EXPECT_EQ(w.num_vertices(), 6);
    EXPECT_EQ(w.num_edges(), 10);
    EXPECT_EQ(w.degree(5), 5);
    EXPECT_EQ(chromatic_number(w).chi, 4);
    EXPECT_THROW(odd_wheel(4), MalformedInput);
}

TEST(Generators, K4SubdivisionCounts) {
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= p; ++q)
            for (int l = 1; l <= q; ++l) {
                const K4Host h = k4_subdivision(p, q, l);
                ASSERT_EQ(h.graph.num_vertices(), 2 * (p + q + l) - 2);
                ASSERT_EQ(h.graph.num_edges(), 2 * (p + q + l));
                ASSERT_EQ(h.subdivision.arris(0, 1).length(), p);
                ASSERT_EQ(h.subdivision.arris(2, 3).length(), p);
                ASSERT_EQ(h.subdivision.arris(0, 3).length(), q);
                ASSERT_EQ(h.subdivision.arris(1, 2).length(), q);
                ASSERT_EQ(h.subdivision.arris(0, 2).length(), l);
                ASSERT_EQ(h.subdivision.arris(1, 3).length(), l);
            }
    const K4Host big = k4_subdivision(5, 5, 1);
    EXPECT_EQ(big.graph.num_vertices(), 20);
    EXPECT_EQ(big.graph.num_edges(), 22);
    const auto m = g_ell_membership(big.graph);
    EXPECT_TRUE(m.member);
    EXPECT_EQ(m.ell, 5);
    EXPECT_THROW(k4_subdivision(0, 1, 1), MalformedInput);
}

TEST(Generators, K4SubdivisionUnequalPairs) {
    const K4Host h = k4_subdivision(std::array<int, 6>{1, 2, 3, 4, 5, 6});
    for (int i = 0; i < 6; ++i) EXPECT_EQ(h.subdivision.arrises[i].length(), i + 1);
    EXPECT_EQ(h.graph.num_edges(), 21);
    EXPECT_EQ(h.graph.num_vertices(), 4 + 15);
}

TEST(Generators, GeneralizedPetersen) {
    const Graph g = generalized_petersen(5, 2);
    EXPECT_EQ(g.num_vertices(), 10);
    EXPECT_EQ(g.num_edges(), 15);
    EXPECT_EQ(girth(g), oracle::girth(g));
    EXPECT_EQ(girth(g), 5);
    EXPECT_EQ(g, petersen());
    const Graph g7 = generalized_petersen(7, 2);
    EXPECT_EQ(girth(g7), oracle::girth(g7));
    EXPECT_EQ(girth(g7), 5);
    EXPECT_THROW(generalized_petersen(4, 2), MalformedInput);
}

TEST(Generators, Mycielski) {
    const Graph g = mycielski(cycle(5));
    EXPECT_EQ(g.num_vertices(), 11);
    EXPECT_EQ(g.num_edges(), 20);
    EXPECT_EQ(g.degree(10), 5);
    EXPECT_EQ(girth(g), 4);
    EXPECT_EQ(chromatic_number(g).chi, 4);
}

TEST(SplitMix64, KnownSequence) {
    // Reference values of splitmix64 seeded with 0.
    SplitMix64 r(0);
    EXPECT_EQ(r.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(r.next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(r.next(), 0x06c45d188009454fULL);
    SplitMix64 b(9);
    for (int i = 0; i < 1000; ++i) ASSERT_LT(b.below(7), 7u);
}

TEST(RandomGirthGraph, MeetsTargets) {
    const Graph g = random_girth_graph(20, 22, 11, 1, 10000);
    EXPECT_EQ(g.num_vertices(), 20);
    EXPECT_EQ(g.num_edges(), 22);
    ASSERT_TRUE(oracle::girth(g));
    EXPECT_GE(*oracle::girth(g), 11);

    const Graph t = random_girth_graph(14, 14, 7, 3, 200);
    EXPECT_EQ(t.num_edges(), 14);
    EXPECT_GE(oracle::girth(t).value_or(100), 7);
}

TEST(RandomGirthGraph, DeterministicPerSeed) {
    EXPECT_EQ(random_girth_graph(16, 17, 5, 7, 50), random_girth_graph(16, 17, 5, 7, 50));
    EXPECT_NE(random_girth_graph(16, 17, 5, 7, 50), random_girth_graph(16, 17, 5, 8, 50));
}

TEST(RandomGirthGraph, ImpossibleTargetThrows) {
    // Ten edges on five vertices is K5, which has triangles.
    EXPECT_THROW(random_girth_graph(5, 10, 4, 1, 20), ExhaustedAttempts);
}

TEST(Corpus, SizeAndUniqueIds) {
    const auto corpus = builtin_corpus();
    EXPECT_EQ(corpus.size(), 180u);
    std::map<std::string, int> ids;
    for (const auto& e : corpus) ++ids[e.id];
    for (const auto& [id, count] : ids) EXPECT_EQ(count, 1) << id;
    EXPECT_EQ(ids.count("grotzsch"), 1u);
    EXPECT_EQ(ids.count("random_49"), 1u);
}

TEST(Corpus, Deterministic) {
    const auto a = builtin_corpus();
    const auto b = builtin_corpus();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_EQ(a[i].id, b[i].id);
        ASSERT_EQ(a[i].graph, b[i].graph);
    }
}

TEST(Corpus, RandomEntriesMeetTheirGirth) {
    for (const auto& e : builtin_corpus()) {
        if (e.id.rfind("random_", 0) != 0) continue;
        const int i = std::stoi(e.id.substr(7));
        ASSERT_GE(girth(e.graph).value_or(1000), 5 + 2 * (i % 3)) << e.id;
    }
}

TEST(Corpus, BalancedK4SubdivisionsAreMembers) {
    int checked = 0;
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= p; ++q)
            for (int l = 1; l <= q; ++l) {
                if ((p + q + l) % 2 == 0) continue;
                const int ell = (p + q + l - 1) / 2;
                if (p > ell || ell < 2) continue;
                const auto m = g_ell_membership(k4_subdivision(p, q, l).graph);
                ASSERT_TRUE(m.member) << p << q << l;
                ASSERT_EQ(m.ell, ell);
                ++checked;
            }
    EXPECT_GT(checked, 10);
}

TEST(Corpus, FileRoundTripWithManifest) {
    TempDir dir;
    const auto file = dir.path() / "corpus.g6";
    const auto corpus = builtin_corpus();
    write_corpus(file, corpus);
    ASSERT_TRUE(std::filesystem::exists(manifest_path(file)));
    const auto back = load_corpus(file);
    ASSERT_EQ(back.size(), corpus.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        ASSERT_EQ(back[i].id, corpus[i].id);
        ASSERT_EQ(back[i].provenance, corpus[i].provenance);
        ASSERT_EQ(back[i].graph, corpus[i].graph);
    }
}

TEST(Corpus, LoadWithoutManifestUsesLineIds) {
    TempDir dir;
    const auto file = dir.path() / "plain.g6";
    {
        std::ofstream out(file);
        out << write_graph6(cycle(5)) << "\n\n" << write_graph6(petersen()) << "\n";
    }
    const auto back = load_corpus(file);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].graph, cycle(5));
    EXPECT_EQ(back[1].graph, petersen());
    EXPECT_NE(back[1].id.find(":3"), std::string::npos) << back[1].id;
}
