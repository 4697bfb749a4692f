#include "oddhole/cuts.hpp"

#include <algorithm>
#include <queue>

namespace oddhole {

namespace {

std::vector<char> mask_of(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<char> mask(g.num_vertices(), 0);
    for (Vertex v : vertices) mask[v] = 1;
    return mask;
}

}  // namespace

std::string_view to_string(CutKind k) {
    switch (k) {
        case CutKind::k1: return "K1";
        case CutKind::k2: return "K2";
        case CutKind::path: return "P";
        case CutKind::edge_pair: return "EdgePair";
        case CutKind::vertex_set: return "VertexSet";
    }
    return "unknown";
}

bool is_vertex_cut(const Graph& g, std::span<const Vertex> removed) {
    return count_components_without(g, mask_of(g, removed)) > count_components(g);
}

bool verify_cut(const Graph& g, const CutWitness& w) {
    const int before = count_components(g);
    int after = 0;
    if (w.kind == CutKind::edge_pair) {
        for (const Edge& e : w.edges)
            if (!g.contains(e.u) || !g.contains(e.v) || !g.adjacent(e.u, e.v)) return false;
        after = count_components_without(g, {}, w.edges);
    } else {
        for (Vertex v : w.vertices)
            if (!g.contains(v)) return false;
        if (w.kind == CutKind::k1 && w.vertices.size() != 1) return false;
        if (w.kind == CutKind::k2 && (w.vertices.size() != 2 || !g.adjacent(w.vertices[0], w.vertices[1])))
            return false;
        if (w.kind == CutKind::path && (static_cast<int>(w.vertices.size()) != w.path_order ||
                                        !is_induced_path(g, w.vertices)))
            return false;
        after = count_components_without(g, mask_of(g, w.vertices));
    }
    return after > before && after == w.components_after;
}

std::vector<Vertex> k1_cuts(const Graph& g) {
    const int before = count_components(g);
    std::vector<Vertex> out;
    std::vector<char> mask(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        mask[v] = 1;
        if (count_components_without(g, mask) > before) out.push_back(v);
        mask[v] = 0;
    }
    return out;
}

std::vector<Edge> k2_cuts(const Graph& g) {
    const int before = count_components(g);
    std::vector<Edge> out;
    std::vector<char> mask(g.num_vertices(), 0);
    for (const Edge& e : g.edges()) {
        mask[e.u] = mask[e.v] = 1;
        if (count_components_without(g, mask) > before) out.push_back(e);
        mask[e.u] = mask[e.v] = 0;
    }
    return out;
}

std::vector<CutWitness> pi_cuts(const Graph& g, int i, PathCutMode mode, SearchBudget& budget) {
    std::vector<CutWitness> out;
    if (i < 1 || i > g.num_vertices()) return out;
    const int before = count_components(g);
    std::vector<char> on_path(g.num_vertices(), 0);
    std::vector<int> touch(g.num_vertices(), 0);
    std::vector<Vertex> path;

    auto push = [&](Vertex v) {
        path.push_back(v);
        on_path[v] = 1;
        for (Vertex w : g.neighbors(v)) ++touch[w];
    };
    auto pop = [&] {
        const Vertex v = path.back();
        path.pop_back();
        on_path[v] = 0;
        for (Vertex w : g.neighbors(v)) --touch[w];
    };
    auto report = [&] {
        if (path.size() > 1 && path.front() > path.back()) return;
        const int after = count_components_without(g, on_path);
        if (after <= before) return;
        CutWitness w;
        w.kind = i == 1 ? CutKind::k1 : (i == 2 ? CutKind::k2 : CutKind::path);
        w.path_order = i;
        w.vertices = path;
        w.components_after = after;
        out.push_back(std::move(w));
    };
    std::function<void()> extend = [&] {
        budget.charge("path cut enumeration");
        if (static_cast<int>(path.size()) == i) {
            report();
            return;
        }
        for (Vertex v : g.neighbors(path.back())) {
            if (on_path[v]) continue;
            if (mode == PathCutMode::induced && touch[v] != 1) continue;
            push(v);
            extend();
            pop();
        }
    };
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        push(s);
        extend();
        pop();
    }
    return out;
}

std::vector<CutWitness> pi_cuts(const Graph& g, int i, PathCutMode mode) {
    SearchBudget budget;
    return pi_cuts(g, i, mode, budget);
}

std::vector<std::pair<Edge, Edge>> two_edge_cuts(const Graph& g) {
    const int before = count_components(g);
    const auto edges = g.edges();
    std::vector<std::pair<Edge, Edge>> out;
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const Edge removed[2] = {edges[a], edges[b]};
            if (count_components_without(g, {}, removed) > before) out.emplace_back(edges[a], edges[b]);
        }
    return out;
}

namespace {

// Unit-capacity max flow between s and t in an undirected graph, stopping
// once `cap` units have been routed.
int max_flow(const Graph& g, Vertex s, Vertex t, int cap) {
    const int n = g.num_vertices();
    // flow[v][k] is the flow on arc v -> neighbors(v)[k], in {-1, 0, 1}.
    std::vector<std::vector<int>> flow(n);
    for (Vertex v = 0; v < n; ++v) flow[v].assign(g.neighbors(v).size(), 0);
    auto index_of = [&](Vertex v, Vertex w) {
        const auto nb = g.neighbors(v);
        return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
    };
    int total = 0;
    std::vector<Vertex> prev(n);
    while (total < cap) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[s] = s;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty() && prev[t] < 0) {
            const Vertex v = q.front();
            q.pop();
            const auto nb = g.neighbors(v);
            for (std::size_t k = 0; k < nb.size(); ++k) {
                const Vertex w = nb[k];
                if (prev[w] < 0 && flow[v][k] < 1) {
                    prev[w] = v;
                    q.push(w);
                }
            }
        }
        if (prev[t] < 0) break;
        for (Vertex w = t; w != s; w = prev[w]) {
            const Vertex v = prev[w];
            ++flow[v][index_of(v, w)];
            --flow[w][index_of(w, v)];
        }
        ++total;
    }
    return total;
}

}  // namespace

int edge_connectivity(const Graph& g) {
    const int n = g.num_vertices();
    if (n <= 1 || count_components(g) > 1) return 0;
    int best = n;
    for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
    for (Vertex t = 1; t < n && best > 0; ++t) best = std::min(best, max_flow(g, 0, t, best));
    return best;
}

std::vector<std::vector<Vertex>> constrained_vertex_cuts(const Graph& g, Vertex x, Vertex y,
                                                         SearchBudget& budget) {
    if (!g.contains(x) || !g.contains(y)) throw MalformedInput("constrained_vertex_cuts: vertex out of range");
    if (x == y) throw MalformedInput("constrained_vertex_cuts: x and y must differ");
    const Vertex xy[2] = {x, y};
    std::vector<Vertex> candidates;
    for (Vertex v : closed_neighborhood(g, xy))
        if (v != x && v != y) candidates.push_back(v);
    if (candidates.size() >= 62) throw SearchBudgetExceeded(budget.limit(), "constrained vertex cuts");
    const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
    budget.charge("constrained vertex cuts", subsets);

    const int before = count_components(g);
    std::vector<char> mask(g.num_vertices(), 0);
    mask[x] = mask[y] = 1;
    auto cuts_with = [&](std::uint64_t bits) {
        for (std::size_t k = 0; k < candidates.size(); ++k) mask[candidates[k]] = (bits >> k) & 1U;
        return count_components_without(g, mask) > before;
    };

    std::vector<std::vector<Vertex>> out;
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        if (!cuts_with(bits)) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < candidates.size() && minimal; ++k)
            if ((bits >> k) & 1U) minimal = !cuts_with(bits & ~(std::uint64_t{1} << k));
        if (!minimal) continue;
        std::vector<Vertex> cut{x, y};
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if ((bits >> k) & 1U) cut.push_back(candidates[k]);
        std::sort(cut.begin(), cut.end());
        out.push_back(std::move(cut));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<std::vector<Vertex>> constrained_vertex_cuts(const Graph& g, Vertex x, Vertex y) {
    SearchBudget budget;
    return constrained_vertex_cuts(g, x, y, budget);
}

void enumerate_induced_paths(const Graph& g, Vertex x, Vertex y, std::optional<int> max_len,
                             SearchBudget& budget, const PathVisitor& visit) {
    if (!g.contains(x) || !g.contains(y)) throw MalformedInput("induced paths: vertex out of range");
    if (x == y) throw MalformedInput("induced paths: x and y must differ");
    std::vector<char> on_path(g.num_vertices(), 0);
    std::vector<int> touch(g.num_vertices(), 0);
    VertexPath path;
    bool stopped = false;

    auto push = [&](Vertex v) {
        path.vertices.push_back(v);
        on_path[v] = 1;
        for (Vertex w : g.neighbors(v)) ++touch[w];
    };
    auto pop = [&] {
        const Vertex v = path.vertices.back();
        path.vertices.pop_back();
        on_path[v] = 0;
        for (Vertex w : g.neighbors(v)) --touch[w];
    };
    std::function<void()> extend = [&] {
        budget.charge("induced path enumeration");
        const Vertex u = path.back();
        const bool must_finish = g.adjacent(u, y);
        for (Vertex v : g.neighbors(u)) {
            if (stopped) return;
            if (on_path[v] || touch[v] != 1) continue;
            if (v == y) {
                push(v);
                if (!visit(path)) stopped = true;
                pop();
                continue;
            }
            if (must_finish) continue;
            // v would sit at position |path|; y needs at least one more edge.
            if (max_len && path.length() + 2 > *max_len) continue;
            push(v);
            extend();
            pop();
        }
    };
    if (max_len && *max_len < 1) return;
    push(x);
    extend();
}

std::vector<VertexPath> induced_paths_between(const Graph& g, Vertex x, Vertex y,
                                              std::optional<int> max_len, SearchBudget& budget) {
    std::vector<VertexPath> out;
    enumerate_induced_paths(g, x, y, max_len, budget, [&](const VertexPath& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<VertexPath> induced_paths_between(const Graph& g, Vertex x, Vertex y,
                                              std::optional<int> max_len) {
    SearchBudget budget;
    return induced_paths_between(g, x, y, max_len, budget);
}

std::optional<int> all_same_length(const Graph& g, Vertex x, Vertex y, SearchBudget& budget) {
    std::optional<int> length;
    bool mixed = false;
    enumerate_induced_paths(g, x, y, std::nullopt, budget, [&](const VertexPath& p) {
        if (!length) {
            length = p.length();
            return true;
        }
        if (*length != p.length()) {
            mixed = true;
            return false;
        }
        return true;
    });
    if (mixed) return std::nullopt;
    return length;
}

std::optional<int> all_same_length(const Graph& g, Vertex x, Vertex y) {
    SearchBudget budget;
    return all_same_length(g, x, y, budget);
}

bool is_direct_connection(const Graph& g, std::span<const Vertex> h1, std::span<const Vertex> h2,
                          const VertexPath& path) {
    if (path.vertices.empty() || !is_induced_path(g, path.vertices)) return false;
    const auto in1 = mask_of(g, h1);
    const auto in2 = mask_of(g, h2);
    auto touches = [&](Vertex v, const std::vector<char>& in) {
        for (Vertex w : g.neighbors(v))
            if (in[w]) return true;
        return false;
    };
    const auto& pv = path.vertices;
    for (std::size_t k = 0; k < pv.size(); ++k) {
        if (in1[pv[k]] || in2[pv[k]]) return false;
        if (touches(pv[k], in1) != (k == 0)) return false;
        if (touches(pv[k], in2) != (k + 1 == pv.size())) return false;
    }
    return true;
}

std::vector<DirectConnection> direct_connections(const Graph& g, std::span<const Vertex> h1,
                                                 std::span<const Vertex> h2, ConnectionMode mode,
                                                 SearchBudget& budget) {
    for (Vertex v : h1)
        if (!g.contains(v)) throw MalformedInput("direct connections: vertex out of range");
    for (Vertex v : h2)
        if (!g.contains(v)) throw MalformedInput("direct connections: vertex out of range");
    const auto in1 = mask_of(g, h1);
    const auto in2 = mask_of(g, h2);
    for (Vertex v : h2)
        if (in1[v]) throw MalformedInput("direct connections: H1 and H2 must be disjoint");

    // Multi-source BFS from H1 decides reachability and gives shortest-path layers.
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<Vertex> q;
    for (Vertex v : h1) {
        dist[v] = 0;
        q.push(v);
    }
    int reach = -1;
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        if (in2[v]) {
            if (reach < 0) reach = dist[v];
            continue;
        }
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    if (reach < 0) throw NoConnection("no path joins H1 and H2");

    auto attachments = [&](Vertex v, const std::vector<char>& in) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v))
            if (in[w]) out.push_back(w);
        return out;
    };
    auto make = [&](std::vector<Vertex> vertices) {
        DirectConnection dc;
        dc.path.vertices = std::move(vertices);
        dc.attach1 = attachments(dc.path.front(), in1);
        dc.attach2 = attachments(dc.path.back(), in2);
        return dc;
    };

    std::vector<DirectConnection> out;
    std::vector<Vertex> path;
    if (mode == ConnectionMode::shortest) {
        // Walk back from H2 vertices at distance `reach` along decreasing layers;
        // the interior of each shortest path is a direct connection.
        std::function<void(Vertex)> back = [&](Vertex v) {
            budget.charge("direct connections");
            path.push_back(v);
            if (dist[v] == 1) {
                out.push_back(make(std::vector<Vertex>(path.rbegin(), path.rend())));
            } else {
                for (Vertex w : g.neighbors(v))
                    if (dist[w] == dist[v] - 1) back(w);
            }
            path.pop_back();
        };
        if (reach >= 2) {
            for (Vertex t : h2) {
                if (dist[t] != reach) continue;
                for (Vertex w : g.neighbors(t))
                    if (dist[w] == reach - 1 && !in1[w] && !in2[w]) back(w);
            }
        }
    } else {
        std::vector<char> on_path(g.num_vertices(), 0);
        std::vector<int> touch(g.num_vertices(), 0);
        auto touches = [&](Vertex v, const std::vector<char>& in) {
            for (Vertex w : g.neighbors(v))
                if (in[w]) return true;
            return false;
        };
        auto push = [&](Vertex v) {
            path.push_back(v);
            on_path[v] = 1;
            for (Vertex w : g.neighbors(v)) ++touch[w];
        };
        auto pop = [&] {
            const Vertex v = path.back();
            path.pop_back();
            on_path[v] = 0;
            for (Vertex w : g.neighbors(v)) --touch[w];
        };
        std::function<void()> extend = [&] {
            budget.charge("direct connections");
            for (Vertex v : g.neighbors(path.back())) {
                if (on_path[v] || in1[v] || in2[v] || touch[v] != 1 || touches(v, in1)) continue;
                push(v);
                if (touches(v, in2))
                    out.push_back(make(path));
                else
                    extend();
                pop();
            }
        };
        for (Vertex s = 0; s < g.num_vertices(); ++s) {
            if (in1[s] || in2[s] || !touches(s, in1)) continue;
            push(s);
            if (touches(s, in2))
                out.push_back(make(path));
            else
                extend();
            pop();
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<DirectConnection> direct_connections(const Graph& g, std::span<const Vertex> h1,
                                                 std::span<const Vertex> h2, ConnectionMode mode) {
    SearchBudget budget;
    return direct_connections(g, h1, h2, mode, budget);
}

}  // namespace oddhole
