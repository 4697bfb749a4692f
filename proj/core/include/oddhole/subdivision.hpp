#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddhole/errors.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

/// Index of the arris joining branch[i] and branch[j] (i < j):
/// (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
int arris_index(int i, int j);

/// A subgraph isomorphic to a subdivided K4.
///
/// Branch vertices are sorted ascending and every arris runs from the lower
/// to the higher branch position, which makes the representation canonical:
/// two equal subgraphs always compare equal.
///
/// Opposite (vertex-disjoint) arrises are grouped positionally:
///   pair 0: (0,1) & (2,3)    pair 1: (0,3) & (1,2)    pair 2: (0,2) & (1,3)
/// Faces are the subdivided triangles, in the order
///   {0,1,2}  {0,2,3}  {0,1,3}  {1,2,3}
/// so faces 0 and 1 share an arris of pair 2, as do faces 2 and 3.
struct K4Subdivision {
    std::array<Vertex, 4> branch{};
    std::array<VertexPath, 6> arrises;
    std::array<CycleSeq, 4> faces;

    static constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 5}, {2, 3}, {1, 4}}};
    static constexpr std::array<std::array<int, 3>, 4> kFaceBranches{{{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {1, 2, 3}}};

    const VertexPath& arris(int i, int j) const { return arrises[arris_index(i, j)]; }
    int total_length() const;
    std::vector<Vertex> vertices() const;  // sorted
    EdgeSet edges() const;

    friend bool operator==(const K4Subdivision& a, const K4Subdivision& b) {
        return a.branch == b.branch && a.arrises == b.arrises;
    }
    friend bool operator<(const K4Subdivision& a, const K4Subdivision& b) {
        return a.branch != b.branch ? a.branch < b.branch : a.arrises < b.arrises;
    }
};

/// Builds the canonical form from four branch vertices and the six connecting
/// paths in any order and orientation. Throws MalformedInput when the paths
/// do not connect the six branch pairs.
K4Subdivision make_k4_subdivision(std::array<Vertex, 4> branch, std::vector<VertexPath> paths);

/// Full structural re-check against the host: arrises are paths of g joining
/// the right branch pairs, internally disjoint, branch degree 3, interior
/// degree 2, faces rebuilt from the arrises. Empty string on success.
std::string validate_k4_subdivision(const Graph& g, const K4Subdivision& h);

/// The three opposite arris pairs.
std::array<std::array<VertexPath, 2>, 3> arris_pairs(const K4Subdivision& h);

/// Longest arris length minus shortest arris length.
int difference(const K4Subdivision& h);

/// Total arris length equals 4*ell + 2.
bool edge_count_check(const K4Subdivision& h, int ell);

struct OddK4Verdict {
    K4Subdivision subdivision;
    bool is_odd = false;
    std::array<int, 4> face_lengths{};
    std::optional<int> non_odd_face;
};

/// Every face must be an odd hole of the host g, not just of h.
OddK4Verdict is_odd_k4_subdivision(const Graph& g, const K4Subdivision& h);

struct K4SearchOptions {
    std::optional<int> max_arris_len;
    bool require_odd_faces = false;
    /// Restrict to witnesses whose opposite arrises have equal length <= ell.
    /// Only applied with require_odd_faces on a host verified to be in the
    /// girth-(2*ell+1) class; silently off otherwise.
    bool pruned = false;
    /// Class parameter for pruning; computed by membership test when absent.
    std::optional<int> ell;
};

using K4Visitor = std::function<bool(const K4Subdivision&)>;

/// Emits every K4-subdivision subgraph matching the options exactly once, in
/// canonical order (branch 4-tuple, then arris sequences). Return false from
/// the visitor to stop.
void enumerate_k4_subdivisions(const Graph& g, const K4SearchOptions& opts, SearchBudget& budget,
                               const K4Visitor& visit);
std::vector<K4Subdivision> k4_subdivisions(const Graph& g, const K4SearchOptions& opts, SearchBudget& budget);
std::vector<K4Subdivision> k4_subdivisions(const Graph& g, const K4SearchOptions& opts = {});

enum class OddK4Status { found, absent_certified, absent_budget };

std::string_view to_string(OddK4Status s);

struct OddK4Search {
    OddK4Status status = OddK4Status::absent_certified;
    std::optional<OddK4Verdict> witness;
    std::uint64_t expansions = 0;
};

/// First odd K4-subdivision in canonical order. Budget exhaustion is reported
/// as absent_budget, never as absent_certified.
OddK4Search find_odd_k4_subdivision(const Graph& g, SearchBudget& budget, bool allow_pruning = true);
OddK4Search find_odd_k4_subdivision(const Graph& g);

}  // namespace oddhole
