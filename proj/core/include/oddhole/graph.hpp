#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace oddhole {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

/// Ordered list of distinct vertices; length counts edges.
struct VertexPath {
    std::vector<Vertex> vertices;

    int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    /// Vertices strictly between the two ends.
    std::span<const Vertex> interior() const {
        if (vertices.size() < 2) return {};
        return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
    }

    auto operator<=>(const VertexPath&) const = default;
};

/// Cyclic vertex sequence; the closing edge back->front is implicit.
struct CycleSeq {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool is_odd() const { return vertices.size() % 2 == 1; }

    auto operator<=>(const CycleSeq&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Throws MalformedInput on out-of-range ids, self-loops or repeated pairs.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
    static Graph from_edges(int n, std::span<const Edge> edges);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return m_; }
    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// Sorted ascending.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    // Dense bit matrix for small graphs; empty when n is too large.
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
};

/// A vertex-induced subgraph together with its relabeling.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;    // local id -> host id
    std::vector<Vertex> from_host;  // host id -> local id, or -1
};

/// Vertex set of a biconnected component (or a bridge, or an isolated vertex).
struct Block {
    std::vector<Vertex> vertices;
    bool is_bridge = false;

    auto operator<=>(const Block&) const = default;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;
};

/// Throws MalformedInput when a vertex is out of range.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);
/// Same vertex ids, listed edges dropped (edges not present are ignored).
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

/// S together with every vertex adjacent to S, sorted.
std::vector<Vertex> closed_neighborhood(const Graph& g, std::span<const Vertex> vertices);

bool is_induced_path(const Graph& g, std::span<const Vertex> seq);
bool is_induced_cycle(const Graph& g, std::span<const Vertex> seq);
bool is_path(const Graph& g, std::span<const Vertex> seq);
bool is_cycle(const Graph& g, std::span<const Vertex> seq);

/// Component label per vertex (labels 0..k-1 in order of smallest member).
std::vector<int> component_labels(const Graph& g);
int count_components(const Graph& g);
/// Components of g with the masked vertices and edges deleted.
int count_components_without(const Graph& g, const std::vector<char>& removed_vertices,
                             std::span<const Edge> removed_edges = {});

BlockDecomposition blocks_and_cutvertices(const Graph& g);

EdgeSet edges_of(const VertexPath& p);
EdgeSet edges_of(const CycleSeq& c);
EdgeSet edge_symmetric_difference(const EdgeSet& a, const EdgeSet& b);

/// BFS distances from src (-1 when unreachable).
std::vector<int> bfs_distances(const Graph& g, Vertex src);

}  // namespace oddhole
