#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "oddhole/graph.hpp"
#include "oddhole/subdivision.hpp"

namespace oddhole {

/// C_n on 0..n-1 in cyclic order. Requires n >= 3.
Graph cycle(int n);

/// Two branch vertices 0 and 1 joined by internally disjoint paths of lengths
/// a, b, c. Interior vertices are numbered 2.. path by path. At most one
/// length may be 1.
Graph theta(int a, int b, int c);

/// Rim 0..n_rim-1 plus hub n_rim. Requires odd n_rim >= 3.
Graph odd_wheel(int n_rim);

struct K4Host {
    Graph graph;
    K4Subdivision subdivision;
};

/// Branch vertices 0..3. Opposite arris pairs get equal lengths:
/// (0,1)&(2,3) length p, (0,3)&(1,2) length q, (0,2)&(1,3) length l.
K4Host k4_subdivision(int p, int q, int l);

/// Arbitrary arris lengths, indexed as arris_index.
K4Host k4_subdivision(const std::array<int, 6>& lengths);

/// Outer cycle 0..n-1, inner vertices n..2n-1 with i ~ i+k, spokes i ~ n+i.
Graph generalized_petersen(int n, int k);
Graph petersen();

/// Vertices v_i = i, shadows u_i = n + i, apex 2n.
Graph mycielski(const Graph& g);

/// splitmix64; the state advances by 0x9e3779b97f4a7c15 per draw.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Each attempt shuffles all vertex pairs and inserts them greedily whenever
/// the insertion keeps girth >= girth_min, stopping at m edges. Throws
/// ExhaustedAttempts when no attempt reaches m edges.
Graph random_girth_graph(int n, int m, int girth_min, std::uint64_t seed, int max_attempts);

struct CorpusEntry {
    std::string id;
    Graph graph;
    std::string provenance;
};

std::vector<CorpusEntry> builtin_corpus();

/// Writes one graph6 line per entry to `path` and a manifest next to it
/// (`path` + ".manifest.json") listing id and provenance by line.
void write_corpus(const std::filesystem::path& path, const std::vector<CorpusEntry>& entries);

/// Reads a corpus written by write_corpus. Without a manifest, ids are
/// "<file>:<line>".
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

std::filesystem::path manifest_path(const std::filesystem::path& corpus);

}  // namespace oddhole
