#pragma once

#include <optional>
#include <vector>

#include "oddhole/graph.hpp"

namespace oddhole {

struct ColoringCertificate {
    int k = 0;
    std::vector<int> assignment;  // vertex -> colour in 0..k-1
};

/// True iff every colour is in range and no edge is monochromatic.
bool verify_coloring(const Graph& g, const ColoringCertificate& c);

/// Exact k-colourability by saturation-ordered backtracking.
std::optional<ColoringCertificate> is_k_colorable(const Graph& g, int k);

struct ChromaticResult {
    int chi = 0;
    ColoringCertificate certificate;
};

ChromaticResult chromatic_number(const Graph& g);

/// Size of a greedily grown clique; a lower bound for chi.
int greedy_clique_bound(const Graph& g);

struct CriticalityVerdict {
    int k = 0;
    bool is_critical = false;
    int chi = 0;
    std::optional<Vertex> failing_vertex;  // v with chi(G - v) == chi(G)
};

/// chi(G) == k and chi(G - v) == k - 1 for every v. When chi(G) == k the scan
/// stops at the first vertex whose deletion keeps chi.
CriticalityVerdict is_k_vertex_critical(const Graph& g, int k);

}  // namespace oddhole
