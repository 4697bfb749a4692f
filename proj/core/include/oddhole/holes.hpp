#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oddhole/errors.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

/// Return false to stop the enumeration early.
using CycleVisitor = std::function<bool(const CycleSeq&)>;

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Every induced cycle (triangles included) of length <= max_len, each exactly
/// once. Cycles are emitted rotated to start at their smallest vertex and
/// oriented so that the second vertex is smaller than the last.
void enumerate_induced_cycles(const Graph& g, std::optional<int> max_len, SearchBudget& budget,
                              const CycleVisitor& visit);
std::vector<CycleSeq> induced_cycles(const Graph& g, std::optional<int> max_len = std::nullopt);

/// Every cycle, induced or not, in the same canonical form.
void enumerate_cycles(const Graph& g, std::optional<int> max_len, SearchBudget& budget,
                      const CycleVisitor& visit);

/// Induced cycles of odd length >= 5.
std::vector<CycleSeq> odd_holes(const Graph& g, SearchBudget& budget);
std::vector<CycleSeq> odd_holes(const Graph& g);

bool is_hole(const Graph& g, const CycleSeq& c);
bool is_odd_hole(const Graph& g, const CycleSeq& c);

enum class GellFailure { none, acyclic, girth_even, girth_too_small, long_odd_hole };

std::string_view to_string(GellFailure f);

/// Membership in the class of graphs with girth 2*ell+1 (ell >= 2) and no odd
/// hole longer than the girth.
struct GellVerdict {
    bool member = false;
    int ell = 0;
    std::optional<int> girth;
    GellFailure failure = GellFailure::none;
    std::optional<CycleSeq> witness;  // long odd hole, when that is the failure
};

/// Decided by exhaustive induced-cycle enumeration; throws
/// SearchBudgetExceeded rather than guessing.
GellVerdict g_ell_membership(const Graph& g, SearchBudget& budget);
GellVerdict g_ell_membership(const Graph& g);

/// Two branch vertices joined by three internally disjoint paths.
struct ThetaStructure {
    std::array<Vertex, 2> branch{};
    std::array<VertexPath, 3> paths;  // each runs branch[0] -> branch[1], sorted
};

/// Whether G[S] is exactly a theta graph.
std::optional<ThetaStructure> is_induced_theta(const Graph& g, std::span<const Vertex> vertices);

/// A chordal path of a hole. path runs from its smaller end to its larger end;
/// both arcs run between the same ends, arc1 being the one whose second vertex
/// has the smaller id.
struct ChordalPathRecord {
    CycleSeq hole;
    VertexPath path;
    VertexPath arc1;
    VertexPath arc2;
};

/// All induced paths P with both ends on the hole and interior off it such
/// that hole + P induces a theta subgraph.
std::vector<ChordalPathRecord> chordal_paths(const Graph& g, const CycleSeq& hole, SearchBudget& budget);
std::vector<ChordalPathRecord> chordal_paths(const Graph& g, const CycleSeq& hole);

/// The two arcs of a cycle between two of its vertices, both starting at `from`.
std::array<VertexPath, 2> cycle_arcs(const CycleSeq& c, Vertex from, Vertex to);

}  // namespace oddhole
