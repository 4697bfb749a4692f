#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Graph container and are only usable on small graphs.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "oddhole/graph.hpp"

namespace oracle {

using oddhole::Edge;
using oddhole::Graph;
using oddhole::Vertex;

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix_of(const Graph& g) {
    Matrix a(g.num_vertices(), std::vector<char>(g.num_vertices(), 0));
    for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

// Components of the graph on `alive` vertices, using only edges in `a`.
inline int components(const Matrix& a, const std::vector<char>& alive) {
    const int n = static_cast<int>(a.size());
    std::vector<char> seen(n, 0);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || seen[s]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (a[v][w] && alive[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

// Shortest cycle through each edge: drop the edge, BFS between its ends.
inline std::optional<int> girth(const Graph& g) {
    Matrix a = matrix_of(g);
    const int n = g.num_vertices();
    std::optional<int> best;
    for (const Edge& e : g.edges()) {
        a[e.u][e.v] = a[e.v][e.u] = 0;
        std::vector<int> dist(n, -1);
        std::vector<int> queue{e.u};
        dist[e.u] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int w = 0; w < n; ++w)
                if (a[queue[h]][w] && dist[w] < 0) {
                    dist[w] = dist[queue[h]] + 1;
                    queue.push_back(w);
                }
        if (dist[e.v] >= 0 && (!best || dist[e.v] + 1 < *best)) best = dist[e.v] + 1;
        a[e.u][e.v] = a[e.v][e.u] = 1;
    }
    return best;
}

// Lengths of all induced cycles, found as vertex subsets inducing a connected
// 2-regular graph. n <= ~16.
inline std::multiset<int> induced_cycle_lengths(const Graph& g) {
    const Matrix a = matrix_of(g);
    const int n = g.num_vertices();
    std::multiset<int> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < 3) continue;
        std::vector<char> alive(n, 0);
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v) {
            if (!(mask >> v & 1)) continue;
            alive[v] = 1;
            int d = 0;
            for (int w = 0; w < n; ++w) d += (mask >> w & 1) && a[v][w];
            two_regular = d == 2;
        }
        if (two_regular && components(a, alive) == 1) out.insert(size);
    }
    return out;
}

inline std::vector<Vertex> cut_vertices(const Graph& g) {
    const Matrix a = matrix_of(g);
    const int n = g.num_vertices();
    std::vector<char> alive(n, 1);
    const int base = components(a, alive);
    std::vector<Vertex> out;
    for (int v = 0; v < n; ++v) {
        alive[v] = 0;
        if (components(a, alive) > base) out.push_back(v);
        alive[v] = 1;
    }
    return out;
}

inline std::size_t two_edge_cut_count(const Graph& g) {
    Matrix a = matrix_of(g);
    const auto edges = g.edges();
    const std::vector<char> alive(g.num_vertices(), 1);
    const int base = components(a, alive);
    std::size_t count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            for (const Edge& e : {edges[i], edges[j]}) a[e.u][e.v] = a[e.v][e.u] = 0;
            if (components(a, alive) > base) ++count;
            for (const Edge& e : {edges[i], edges[j]}) a[e.u][e.v] = a[e.v][e.u] = 1;
        }
    return count;
}

// Exhaustive k-colouring by counting through all k^n assignments.
inline bool k_colorable(const Graph& g, int k) {
    const int n = g.num_vertices();
    if (n == 0) return true;
    if (k <= 0) return false;
    const auto edges = g.edges();
    std::vector<int> colour(n, 0);
    while (true) {
        bool ok = true;
        for (const Edge& e : edges)
            if (colour[e.u] == colour[e.v]) {
                ok = false;
                break;
            }
        if (ok) return true;
        int i = 0;
        while (i < n && ++colour[i] == k) colour[i++] = 0;
        if (i == n) return false;
    }
}

inline int chromatic_number(const Graph& g) {
    int k = 0;
    while (!k_colorable(g, k)) ++k;
    return k;
}

// Lengths of induced (x,y)-paths, as vertex subsets inducing a path with ends
// x and y.
inline std::multiset<int> induced_path_lengths(const Graph& g, Vertex x, Vertex y) {
    const Matrix a = matrix_of(g);
    const int n = g.num_vertices();
    std::multiset<int> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> x & 1) || !(mask >> y & 1)) continue;
        std::vector<char> alive(n, 0);
        bool ok = true;
        int edges = 0;
        for (int v = 0; v < n && ok; ++v) {
            if (!(mask >> v & 1)) continue;
            alive[v] = 1;
            int d = 0;
            for (int w = 0; w < n; ++w) d += (mask >> w & 1) && a[v][w];
            edges += d;
            ok = (v == x || v == y) ? d == 1 : d == 2;
        }
        if (ok && components(a, alive) == 1) out.insert(edges / 2);
    }
    return out;
}

// A K4-subdivision found by edge-subset search: its branch vertices and the
// six arrises as vertex lists between branch vertices.
struct K4Sub {
    std::array<Vertex, 4> branch{};
    std::vector<std::vector<Vertex>> arrises;
};

// Every subgraph that is a K4-subdivision, by enumerating edge subsets.
// Feasible for up to ~22 edges.
inline std::vector<K4Sub> k4_subdivisions(const Graph& g) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.num_vertices();
    std::vector<K4Sub> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const int size = std::popcount(mask);
        if (size < 6) continue;
        std::vector<std::vector<Vertex>> adj(n);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                adj[edges[i].u].push_back(edges[i].v);
                adj[edges[i].v].push_back(edges[i].u);
            }
        std::vector<Vertex> branch;
        int used = 0;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const int d = static_cast<int>(adj[v].size());
            if (d == 0) continue;
            ++used;
            if (d == 3)
                branch.push_back(v);
            else if (d != 2)
                ok = false;
        }
        if (!ok || branch.size() != 4 || size != used + 2) continue;
        // Walk every arris out of each branch vertex.
        std::set<std::pair<Vertex, Vertex>> pairs;
        std::vector<std::vector<Vertex>> arrises;
        for (Vertex b : branch)
            for (Vertex first : adj[b]) {
                std::vector<Vertex> walk{b, first};
                while (adj[walk.back()].size() == 2) {
                    const Vertex cur = walk.back();
                    const Vertex prev = walk[walk.size() - 2];
                    walk.push_back(adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
                    if (walk.size() > static_cast<std::size_t>(n) + 1) break;
                }
                if (walk.back() == b || adj[walk.back()].size() != 3) {
                    ok = false;
                    break;
                }
                if (b < walk.back()) {
                    pairs.insert({b, walk.back()});
                    arrises.push_back(walk);
                }
            }
        if (!ok || pairs.size() != 6 || arrises.size() != 6) continue;
        // A stray cycle elsewhere would leave used vertices off the arrises.
        std::size_t covered = 4;
        for (const auto& p : arrises) covered += p.size() - 2;
        if (covered != static_cast<std::size_t>(used)) continue;
        K4Sub h;
        std::copy(branch.begin(), branch.end(), h.branch.begin());
        h.arrises = arrises;
        out.push_back(std::move(h));
    }
    return out;
}

inline bool is_induced_odd_hole(const Matrix& a, const std::vector<Vertex>& cyc) {
    const std::size_t len = cyc.size();
    if (len < 5 || len % 2 == 0) return false;
    int edges = 0;
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) edges += a[cyc[i]][cyc[j]];
    return edges == static_cast<int>(len);
}

// Faces: for each branch triple, the union of the three arrises between them.
inline bool is_odd(const Graph& g, const K4Sub& h) {
    const Matrix a = matrix_of(g);
    auto arris = [&](Vertex s, Vertex t) -> const std::vector<Vertex>& {
        for (const auto& p : h.arrises)
            if ((p.front() == s && p.back() == t) || (p.front() == t && p.back() == s)) return p;
        return h.arrises.front();
    };
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<Vertex> tri;
        for (int i = 0; i < 4; ++i)
            if (i != skip) tri.push_back(h.branch[i]);
        std::set<Vertex> face;
        for (auto [s, t] : {std::pair{tri[0], tri[1]}, std::pair{tri[1], tri[2]}, std::pair{tri[0], tri[2]}})
            for (Vertex v : arris(s, t)) face.insert(v);
        if (!is_induced_odd_hole(a, std::vector<Vertex>(face.begin(), face.end()))) return false;
    }
    return true;
}

// Sorted edge list of a K4Sub, for set comparisons.
inline std::vector<Edge> edge_list(const K4Sub& h) {
    std::vector<Edge> out;
    for (const auto& p : h.arrises)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace oracle
