#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "oddhole/errors.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

// A set is a cut when deleting it increases the number of components; for a
// connected graph that is the usual "leaves the graph disconnected".

enum class CutKind { k1, k2, path, edge_pair, vertex_set };

std::string_view to_string(CutKind k);

struct CutWitness {
    CutKind kind = CutKind::vertex_set;
    int path_order = 0;            // i for a P_i-cut
    std::vector<Vertex> vertices;  // removed vertices (path order for P_i-cuts)
    std::vector<Edge> edges;       // removed edges for kind edge_pair
    int components_after = 0;
};

/// Re-checks a witness against its host from scratch.
bool verify_cut(const Graph& g, const CutWitness& w);

bool is_vertex_cut(const Graph& g, std::span<const Vertex> removed);

/// Cut-vertices, found by deleting each vertex in turn.
std::vector<Vertex> k1_cuts(const Graph& g);
/// Edges uv whose endpoint pair is a cut.
std::vector<Edge> k2_cuts(const Graph& g);

enum class PathCutMode { induced, any };

/// Paths on i vertices whose vertex set is a cut. Induced paths only unless
/// mode is `any`. Each path reported once, from its smaller end.
std::vector<CutWitness> pi_cuts(const Graph& g, int i, PathCutMode mode, SearchBudget& budget);
std::vector<CutWitness> pi_cuts(const Graph& g, int i, PathCutMode mode = PathCutMode::induced);

/// Pairs of edges whose deletion disconnects the graph.
std::vector<std::pair<Edge, Edge>> two_edge_cuts(const Graph& g);
/// Size of a minimum edge cut (0 for disconnected graphs and n <= 1).
int edge_connectivity(const Graph& g);

/// Inclusion-minimal cuts X with {x, y} <= X <= N[{x, y}], sorted by size
/// then lexicographically. The 2^|N[{x,y}] - {x,y}| candidates are charged
/// against the budget up front.
std::vector<std::vector<Vertex>> constrained_vertex_cuts(const Graph& g, Vertex x, Vertex y,
                                                         SearchBudget& budget);
std::vector<std::vector<Vertex>> constrained_vertex_cuts(const Graph& g, Vertex x, Vertex y);

using PathVisitor = std::function<bool(const VertexPath&)>;

/// Every induced (x, y)-path of length <= max_len; return false to stop.
void enumerate_induced_paths(const Graph& g, Vertex x, Vertex y, std::optional<int> max_len,
                             SearchBudget& budget, const PathVisitor& visit);
std::vector<VertexPath> induced_paths_between(const Graph& g, Vertex x, Vertex y,
                                              std::optional<int> max_len, SearchBudget& budget);
std::vector<VertexPath> induced_paths_between(const Graph& g, Vertex x, Vertex y,
                                              std::optional<int> max_len = std::nullopt);

/// k when every induced (x, y)-path has length k; nullopt when lengths differ
/// or no path exists.
std::optional<int> all_same_length(const Graph& g, Vertex x, Vertex y, SearchBudget& budget);
std::optional<int> all_same_length(const Graph& g, Vertex x, Vertex y);

/// Induced path whose first vertex is the only one with a neighbour in H1 and
/// whose last vertex is the only one with a neighbour in H2.
struct DirectConnection {
    VertexPath path;
    std::vector<Vertex> attach1;  // neighbours of path.front() in H1
    std::vector<Vertex> attach2;  // neighbours of path.back() in H2

    auto operator<=>(const DirectConnection&) const = default;
};

enum class ConnectionMode { shortest, exhaustive };

bool is_direct_connection(const Graph& g, std::span<const Vertex> h1, std::span<const Vertex> h2,
                          const VertexPath& path);

/// Shortest mode returns the interiors of all shortest H1-H2 paths; exhaustive
/// mode returns every direct connection. Throws NoConnection when no H1-H2
/// path exists at all.
std::vector<DirectConnection> direct_connections(const Graph& g, std::span<const Vertex> h1,
                                                 std::span<const Vertex> h2, ConnectionMode mode,
                                                 SearchBudget& budget);
std::vector<DirectConnection> direct_connections(const Graph& g, std::span<const Vertex> h1,
                                                 std::span<const Vertex> h2,
                                                 ConnectionMode mode = ConnectionMode::shortest);

}  // namespace oddhole
