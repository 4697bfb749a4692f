#include "oddhole/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "oddhole/errors.hpp"

namespace oddhole {

namespace {

constexpr int kMaxBitMatrixOrder = 8192;

void check_range(const Graph& g, std::span<const Vertex> vertices) {
    for (Vertex v : vertices) {
        if (!g.contains(v))
            throw MalformedInput("vertex " + std::to_string(v) + " out of range for graph on " +
                                 std::to_string(g.num_vertices()) + " vertices");
    }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw MalformedInput("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw MalformedInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 "} out of range for " + std::to_string(n) + " vertices");
        if (e.u == e.v) throw MalformedInput("self-loop at vertex " + std::to_string(e.u));
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (std::size_t v = 0; v < g.adj_.size(); ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end())
            throw MalformedInput("duplicate edge {" + std::to_string(v) + "," + std::to_string(*dup) +
                                 "}");
    }
    g.m_ = static_cast<int>(edges.size());
    if (n <= kMaxBitMatrixOrder) {
        g.words_ = (static_cast<std::size_t>(n) + 63) / 64;
        g.bits_.assign(g.words_ * static_cast<std::size_t>(n), 0);
        for (const Edge& e : edges) {
            g.bits_[static_cast<std::size_t>(e.u) * g.words_ + static_cast<std::size_t>(e.v) / 64] |=
                std::uint64_t{1} << (e.v % 64);
            g.bits_[static_cast<std::size_t>(e.v) * g.words_ + static_cast<std::size_t>(e.u) / 64] |=
                std::uint64_t{1} << (e.u % 64);
        }
    }
    return g;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw MalformedInput("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") out of range for " + std::to_string(n) + " vertices");
        edges.emplace_back(a, b);
    }
    return from_edges(n, edges);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!bits_.empty())
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                (v % 64)) & 1U;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    check_range(g, vertices);
    InducedSubgraph sub;
    sub.from_host.assign(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        sub.from_host[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_host.size());
        sub.to_host.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex v : sorted)
        for (Vertex w : g.neighbors(v))
            if (v < w && sub.from_host[static_cast<std::size_t>(w)] >= 0)
                edges.emplace_back(sub.from_host[static_cast<std::size_t>(v)],
                                   sub.from_host[static_cast<std::size_t>(w)]);
    sub.graph = Graph::from_edges(static_cast<int>(sorted.size()), edges);
    return sub;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
    check_range(g, removed);
    std::vector<char> gone(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
    std::vector<Edge> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
    return Graph::from_edges(g.num_vertices(), kept);
}

std::vector<Vertex> closed_neighborhood(const Graph& g, std::span<const Vertex> vertices) {
    check_range(g, vertices);
    std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : vertices) {
        in[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) in[static_cast<std::size_t>(w)] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (in[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

namespace {

bool distinct_in_range(const Graph& g, std::span<const Vertex> seq) {
    std::vector<Vertex> s(seq.begin(), seq.end());
    for (Vertex v : s)
        if (!g.contains(v)) return false;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

bool is_path(const Graph& g, std::span<const Vertex> seq) {
    if (seq.empty() || !distinct_in_range(g, seq)) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[i + 1])) return false;
    return true;
}

bool is_cycle(const Graph& g, std::span<const Vertex> seq) {
    return seq.size() >= 3 && is_path(g, seq) && g.adjacent(seq.front(), seq.back());
}

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
    if (!is_path(g, seq)) return false;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 2; j < seq.size(); ++j)
            if (g.adjacent(seq[i], seq[j])) return false;
    return true;
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> seq) {
    if (!is_cycle(g, seq)) return false;
    const std::size_t k = seq.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.adjacent(seq[i], seq[j])) return false;
        }
    return true;
}

std::vector<int> component_labels(const Graph& g) {
    std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

int count_components(const Graph& g) {
    const auto labels = component_labels(g);
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int count_components_without(const Graph& g, const std::vector<char>& removed_vertices,
                             std::span<const Edge> removed_edges) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    int count = 0;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (seen[static_cast<std::size_t>(s)] ||
            (!removed_vertices.empty() && removed_vertices[static_cast<std::size_t>(s)]))
            continue;
        ++count;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                if (!removed_vertices.empty() && removed_vertices[static_cast<std::size_t>(w)]) continue;
                if (!removed_edges.empty() &&
                    std::find(removed_edges.begin(), removed_edges.end(), Edge(v, w)) !=
                        removed_edges.end())
                    continue;
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return count;
}

BlockDecomposition blocks_and_cutvertices(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    BlockDecomposition out;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> frames;
    int clock = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        if (g.degree(root) == 0) {
            out.blocks.push_back(Block{{root}, false});
            disc[static_cast<std::size_t>(root)] = clock++;
            continue;
        }
        int root_children = 0;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                const auto vi = static_cast<std::size_t>(f.v);
                const auto wi = static_cast<std::size_t>(w);
                if (disc[wi] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[wi] = low[wi] = clock++;
                    if (f.v == root) ++root_children;
                    frames.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[wi] < disc[vi]) {
                    edge_stack.emplace_back(f.v, w);
                    low[vi] = std::min(low[vi], disc[wi]);
                }
                continue;
            }
            const Vertex v = f.v;
            const Vertex parent = f.parent;
            frames.pop_back();
            if (parent < 0) continue;
            const auto vi = static_cast<std::size_t>(v);
            const auto pi = static_cast<std::size_t>(parent);
            low[pi] = std::min(low[pi], low[vi]);
            if (low[vi] >= disc[pi]) {
                if (parent != root) is_cut[pi] = 1;
                Block block;
                std::size_t edge_count = 0;
                const Edge tree_edge(parent, v);
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    ++edge_count;
                    block.vertices.push_back(e.u);
                    block.vertices.push_back(e.v);
                    if (e == tree_edge) break;
                }
                std::sort(block.vertices.begin(), block.vertices.end());
                block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                                     block.vertices.end());
                block.is_bridge = edge_count == 1;
                out.blocks.push_back(std::move(block));
            }
        }
        if (root_children > 1) is_cut[static_cast<std::size_t>(root)] = 1;
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    return out;
}

EdgeSet edges_of(const VertexPath& p) {
    EdgeSet out;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        out.emplace(p.vertices[i], p.vertices[i + 1]);
    return out;
}

EdgeSet edges_of(const CycleSeq& c) {
    EdgeSet out;
    const auto k = c.vertices.size();
    for (std::size_t i = 0; i < k; ++i) out.emplace(c.vertices[i], c.vertices[(i + 1) % k]);
    return out;
}

EdgeSet edge_symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.end()));
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace oddhole
