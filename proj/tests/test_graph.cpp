#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oddhole/errors.hpp"
#include "oddhole/generators.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/graph_io.hpp"
#include "oracles.hpp"

using namespace oddhole;

namespace {

Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<std::pair<int, int>> v(pairs);
    return Graph::from_edge_list(n, v);
}

Graph two_triangles_sharing_vertex() { return from_pairs(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

}  // namespace

TEST(Graph, TriangleFromEdgeList) {
    const Graph g = from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
    EXPECT_EQ(g.num_vertices(), 3);
    EXPECT_EQ(g.num_edges(), 3);
    EXPECT_TRUE(g.adjacent(2, 0));
    EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(Graph, SingleVertex) {
    const Graph g = from_pairs(1, {});
    EXPECT_EQ(g.num_vertices(), 1);
    EXPECT_EQ(g.num_edges(), 0);
    EXPECT_EQ(g.degree(0), 0);
}

TEST(Graph, PetersenIsCubicWithFifteenEdges) {
    const Graph g = petersen();
    EXPECT_EQ(g.num_edges(), 15);
    for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(Graph, RejectsBadEdges) {
    EXPECT_THROW(from_pairs(3, {{0, 3}}), MalformedInput);
    EXPECT_THROW(from_pairs(3, {{-1, 0}}), MalformedInput);
    EXPECT_THROW(from_pairs(3, {{1, 1}}), MalformedInput);
    EXPECT_THROW(from_pairs(3, {{0, 1}, {1, 0}}), MalformedInput);
}

TEST(Graph, NeighborsSortedAndSymmetric) {
    const Graph g = from_pairs(4, {{3, 0}, {2, 0}, {1, 0}});
    const auto n0 = g.neighbors(0);
    EXPECT_EQ(std::vector<Vertex>(n0.begin(), n0.end()), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(g.neighbors(3).size(), 1u);
}

TEST(Graph6, DecodesStarByHand) {
    // n = 'D' - 63 = 5; "?{" = 000000 111100: the last four pairs (i, 4).
    const Graph g = parse_graph6("D?{");
    EXPECT_EQ(g.num_vertices(), 5);
    const std::vector<Edge> want{{0, 4}, {1, 4}, {2, 4}, {3, 4}};
    EXPECT_EQ(g.edges(), want);
}

TEST(Graph6, TriangleRoundTrip) {
    const Graph g = cycle(3);
    EXPECT_EQ(write_graph6(g), "Bw");
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
}

TEST(Graph6, PetersenKnownEncoding) {
    // The usual labelling differs from GP(5,2), so only the round trip and
    // shape are checked here.
    const Graph g = parse_graph6("IheA@GUAo");
    EXPECT_EQ(g.num_vertices(), 10);
    EXPECT_EQ(g.num_edges(), 15);
}

TEST(Graph6, RejectsMalformed) {
    EXPECT_THROW(parse_graph6(""), MalformedInput);
    EXPECT_THROW(parse_graph6("D?"), MalformedInput);        // truncated
    EXPECT_THROW(parse_graph6("D?{{"), MalformedInput);      // too long
    EXPECT_THROW(parse_graph6("D? {"), MalformedInput);      // bad character
    EXPECT_THROW(parse_graph6(":Fa@x^"), MalformedInput);    // sparse6
}

TEST(Graph6, HeaderAccepted) { EXPECT_EQ(parse_graph6(">>graph6<<Bw"), cycle(3)); }

TEST(Graph6, LargeSizeHeader) {
    const Graph g = cycle(70);
    const std::string s = write_graph6(g);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, RandomRoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const int n = static_cast<int>(rng() % 21);
        const Graph g = oracle::random_graph(rng, n, 0.3);
        const Graph back = parse_graph6(write_graph6(g));
        ASSERT_EQ(oracle::matrix_of(back), oracle::matrix_of(g)) << write_graph6(g);
    }
}

TEST(Dimacs, RoundTripAndErrors) {
    const Graph g = petersen();
    EXPECT_EQ(parse_dimacs(write_dimacs(g)), g);
    EXPECT_EQ(parse_dimacs("c hello\np edge 3 2\ne 1 2\ne 2 3\n").num_edges(), 2);
    EXPECT_THROW(parse_dimacs("p edge 3 1\ne 1 4\n"), MalformedInput);
    EXPECT_THROW(parse_dimacs("e 1 2\n"), MalformedInput);
    EXPECT_THROW(parse_dimacs("p edge 3 2\ne 1 2\n"), MalformedInput);
}

TEST(Json, RoundTripAndErrors) {
    const Graph g = theta(2, 3, 4);
    EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
    EXPECT_THROW(graph_from_json(nlohmann::json{{"n", 2}, {"edges", {{0, 5}}}}), MalformedInput);
    EXPECT_THROW(graph_from_json(nlohmann::json{{"edges", nlohmann::json::array()}}), MalformedInput);
}

TEST(GraphReader, Graph6LinesWithIds) {
    std::istringstream in("Bw\n\nD?{\n");
    GraphReader reader(in, std::nullopt, "f.g6");
    auto a = reader.next();
    auto b = reader.next();
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->id, "f.g6:1");
    EXPECT_EQ(b->id, "f.g6:3");
    EXPECT_EQ(b->graph.num_vertices(), 5);
    EXPECT_FALSE(reader.next());
}

TEST(GraphReader, ErrorNamesLine) {
    std::istringstream in("Bw\nD?\n");
    GraphReader reader(in, GraphFormat::graph6, "f");
    reader.next();
    try {
        reader.next();
        FAIL() << "expected MalformedInput";
    } catch (const MalformedInput& e) {
        EXPECT_NE(std::string(e.what()).find("f:2"), std::string::npos) << e.what();
    }
}

TEST(GraphReader, DetectsDimacsAndJson) {
    std::istringstream dimacs("p edge 2 1\ne 1 2\n");
    GraphReader r1(dimacs, std::nullopt, "d");
    auto g1 = r1.next();
    ASSERT_TRUE(g1);
    EXPECT_EQ(g1->graph.num_edges(), 1);
    EXPECT_EQ(g1->labels, (std::vector<long long>{1, 2}));

    std::istringstream json(R"([{"id":"a","n":3,"edges":[[0,1]]},{"n":2,"edges":[]}])");
    GraphReader r2(json, std::nullopt, "j");
    auto a = r2.next();
    auto b = r2.next();
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->id, "a");
    EXPECT_EQ(b->graph.num_vertices(), 2);
    EXPECT_FALSE(r2.next());
}

TEST(GraphReader, EmptyInput) {
    std::istringstream in("");
    GraphReader reader(in, std::nullopt, "e");
    EXPECT_FALSE(reader.next());
}

TEST(InducedSubgraph, Basics) {
    const Graph tri = cycle(3);
    const Vertex two[] = {0, 1};
    EXPECT_EQ(induced_subgraph(tri, two).graph.num_edges(), 1);
    EXPECT_EQ(induced_subgraph(tri, std::span<const Vertex>{}).graph.num_vertices(), 0);
    const Vertex bad[] = {0, 3};
    EXPECT_THROW(induced_subgraph(tri, bad), MalformedInput);
}

TEST(InducedSubgraph, PetersenOuterRimIsC5) {
    const Vertex outer[] = {0, 1, 2, 3, 4};
    const InducedSubgraph s = induced_subgraph(petersen(), outer);
    EXPECT_EQ(s.graph, cycle(5));
    EXPECT_EQ(s.to_host, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(ClosedNeighborhood, Examples) {
    const Vertex zero[] = {0};
    EXPECT_EQ(closed_neighborhood(cycle(5), zero), (std::vector<Vertex>{0, 1, 4}));
    EXPECT_EQ(closed_neighborhood(k4_subdivision(1, 1, 1).graph, zero), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(closed_neighborhood(petersen(), zero).size(), 4u);
}

TEST(InducedPredicates, Examples) {
    const std::vector<Vertex> c5{0, 1, 2, 3, 4};
    EXPECT_TRUE(is_induced_cycle(cycle(5), c5));
    EXPECT_FALSE(is_induced_path(k4_subdivision(1, 1, 1).graph, std::vector<Vertex>{0, 1, 2}));
    // theta(2,3,4): the length-2 path is 0-2-1.
    EXPECT_TRUE(is_induced_path(theta(2, 3, 4), std::vector<Vertex>{0, 2, 1}));
    EXPECT_FALSE(is_induced_cycle(cycle(5), std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Blocks, Examples) {
    const Graph path = from_pairs(3, {{0, 1}, {1, 2}});
    const auto bp = blocks_and_cutvertices(path);
    EXPECT_EQ(bp.blocks.size(), 2u);
    EXPECT_TRUE(bp.blocks[0].is_bridge && bp.blocks[1].is_bridge);
    EXPECT_EQ(bp.cut_vertices, (std::vector<Vertex>{1}));

    const auto bc = blocks_and_cutvertices(cycle(5));
    EXPECT_EQ(bc.blocks.size(), 1u);
    EXPECT_TRUE(bc.cut_vertices.empty());

    const auto bt = blocks_and_cutvertices(two_triangles_sharing_vertex());
    EXPECT_EQ(bt.blocks.size(), 2u);
    EXPECT_EQ(bt.cut_vertices, (std::vector<Vertex>{2}));
}

TEST(Blocks, PartitionEdgesAndMatchBruteForce) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(rng, n, 0.25);
        const auto d = blocks_and_cutvertices(g);
        ASSERT_EQ(d.cut_vertices, oracle::cut_vertices(g));
        // Every edge lies in exactly one block.
        for (const Edge& e : g.edges()) {
            int holders = 0;
            for (const Block& b : d.blocks)
                holders += std::binary_search(b.vertices.begin(), b.vertices.end(), e.u) &&
                           std::binary_search(b.vertices.begin(), b.vertices.end(), e.v);
            ASSERT_EQ(holders, 1);
        }
        // Two blocks share at most one vertex, and it is a cut-vertex.
        for (std::size_t a = 0; a < d.blocks.size(); ++a)
            for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
                std::vector<Vertex> common;
                std::set_intersection(d.blocks[a].vertices.begin(), d.blocks[a].vertices.end(),
                                      d.blocks[b].vertices.begin(), d.blocks[b].vertices.end(),
                                      std::back_inserter(common));
                ASSERT_LE(common.size(), 1u);
                if (!common.empty())
                    ASSERT_TRUE(std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), common[0]));
            }
    }
}

TEST(SymmetricDifference, ThetaIdentity) {
    const Graph g = theta(2, 3, 4);
    // Paths: 0-2-1, 0-3-4-1, 0-5-6-7-1.
    const CycleSeq c1{{0, 2, 1, 4, 3}};
    const CycleSeq c2{{0, 2, 1, 7, 6, 5}};
    const CycleSeq c3{{0, 3, 4, 1, 7, 6, 5}};
    EXPECT_EQ(edge_symmetric_difference(edges_of(c1), edges_of(c2)), edges_of(c3));
    EXPECT_TRUE(edge_symmetric_difference(edges_of(c1), edges_of(c1)).empty());
    EXPECT_TRUE(is_cycle(g, c3.vertices));
}

TEST(GraphInvariants, DegreeSumOnCorpus) {
    for (const auto& e : builtin_corpus()) {
        int sum = 0;
        for (Vertex v = 0; v < e.graph.num_vertices(); ++v) {
            sum += e.graph.degree(v);
            for (Vertex w : e.graph.neighbors(v)) ASSERT_TRUE(e.graph.adjacent(w, v));
        }
        ASSERT_EQ(sum, 2 * e.graph.num_edges()) << e.id;
    }
}
