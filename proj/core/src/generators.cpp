#include "oddhole/generators.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "oddhole/errors.hpp"
#include "oddhole/graph_io.hpp"

namespace oddhole {

namespace {

std::string join_params(std::initializer_list<int> xs, char sep) {
    std::string out;
    for (int x : xs) {
        if (!out.empty()) out += sep;
        out += std::to_string(x);
    }
    return out;
}

void add_path(std::vector<Edge>& edges, Vertex from, Vertex to, int length, int& next_id) {
    Vertex prev = from;
    for (int i = 1; i < length; ++i) {
        edges.emplace_back(prev, next_id);
        prev = next_id++;
    }
    edges.emplace_back(prev, to);
}

}  // namespace

Graph cycle(int n) {
    if (n < 3) throw MalformedInput("cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph theta(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw MalformedInput("theta: path lengths must be positive");
    if ((a == 1) + (b == 1) + (c == 1) > 1) throw MalformedInput("theta: two paths of length 1 would repeat an edge");
    std::vector<Edge> edges;
    int next_id = 2;
    for (int len : {a, b, c}) add_path(edges, 0, 1, len, next_id);
    return Graph::from_edges(next_id, edges);
}

Graph odd_wheel(int n_rim) {
    if (n_rim < 3 || n_rim % 2 == 0) throw MalformedInput("odd_wheel: rim length must be odd and at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n_rim; ++i) {
        edges.emplace_back(i, (i + 1) % n_rim);
        edges.emplace_back(i, n_rim);
    }
    return Graph::from_edges(n_rim + 1, edges);
}

K4Host k4_subdivision(const std::array<int, 6>& lengths) {
    for (int len : lengths)
        if (len < 1) throw MalformedInput("k4_subdivision: arris lengths must be positive");
    std::vector<Edge> edges;
    std::vector<VertexPath> paths;
    int next_id = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const int first_new = next_id;
            add_path(edges, i, j, lengths[arris_index(i, j)], next_id);
            VertexPath p;
            p.vertices.push_back(i);
            for (int v = first_new; v < next_id; ++v) p.vertices.push_back(v);
            p.vertices.push_back(j);
            paths.push_back(std::move(p));
        }
    K4Host host;
    host.graph = Graph::from_edges(next_id, edges);
    host.subdivision = make_k4_subdivision({0, 1, 2, 3}, std::move(paths));
    return host;
}

K4Host k4_subdivision(int p, int q, int l) {
    std::array<int, 6> lengths{};
    lengths[arris_index(0, 1)] = lengths[arris_index(2, 3)] = p;
    lengths[arris_index(0, 3)] = lengths[arris_index(1, 2)] = q;
    lengths[arris_index(0, 2)] = lengths[arris_index(1, 3)] = l;
    return k4_subdivision(lengths);
}

Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n) throw MalformedInput("generalized_petersen: need n >= 3 and 1 <= k < n/2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n + i);
        edges.emplace_back(n + i, n + (i + k) % n);
    }
    return Graph::from_edges(2 * n, edges);
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph mycielski(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.push_back(e);
        edges.emplace_back(e.u, n + e.v);
        edges.emplace_back(n + e.u, e.v);
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return Graph::from_edges(2 * n + 1, edges);
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
}

namespace {

// Distance from src to dst through the partial graph, capped at `cap`.
int capped_distance(const std::vector<std::vector<Vertex>>& adj, Vertex src, Vertex dst, int cap,
                    std::vector<int>& dist, std::vector<Vertex>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(src);
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        if (v == dst) return dist[v];
        if (dist[v] >= cap) continue;
        for (Vertex w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return -1;
}

}  // namespace

Graph random_girth_graph(int n, int m, int girth_min, std::uint64_t seed, int max_attempts) {
    if (n < 1 || m < 0 || girth_min < 3 || max_attempts < 1)
        throw MalformedInput("random_girth_graph: parameters must be positive, girth_min >= 3");
    if (static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
        throw ExhaustedAttempts("random_girth_graph: more edges than vertex pairs");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    SplitMix64 rng(seed);
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
        std::vector<std::vector<Vertex>> adj(n);
        std::vector<Edge> chosen;
        for (const Edge& e : pairs) {
            if (static_cast<int>(chosen.size()) == m) break;
            // A new edge closes a cycle of length dist + 1.
            const int d = capped_distance(adj, e.u, e.v, girth_min - 2, dist, queue);
            if (d >= 0 && d + 1 < girth_min) continue;
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
            chosen.push_back(e);
        }
        if (static_cast<int>(chosen.size()) == m) return Graph::from_edges(n, chosen);
    }
    throw ExhaustedAttempts("random_girth_graph: no graph with " + std::to_string(m) + " edges and girth >= " +
                            std::to_string(girth_min) + " after " + std::to_string(max_attempts) + " attempts");
}

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> out;
    for (int n = 5; n <= 15; ++n)
        out.push_back({"cycle_" + std::to_string(n), cycle(n), "cycle(" + std::to_string(n) + ")"});
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            for (int c = b; c <= 6; ++c) {
                if (a == 1 && b == 1) continue;
                out.push_back({"theta_" + join_params({a, b, c}, '_'), theta(a, b, c),
                               "theta(" + join_params({a, b, c}, ',') + ")"});
            }
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= p; ++q)
            for (int l = 1; l <= q; ++l)
                out.push_back({"k4sub_" + join_params({p, q, l}, '_'), k4_subdivision(p, q, l).graph,
                               "k4_subdivision(" + join_params({p, q, l}, ',') + ")"});
    for (int n = 5; n <= 12; ++n)
        out.push_back({"gp_" + std::to_string(n) + "_2", generalized_petersen(n, 2),
                       "generalized_petersen(" + std::to_string(n) + ",2)"});
    out.push_back({"k4", k4_subdivision(1, 1, 1).graph, "k4_subdivision(1,1,1)"});
    out.push_back({"wheel_5", odd_wheel(5), "odd_wheel(5)"});
    out.push_back({"wheel_7", odd_wheel(7), "odd_wheel(7)"});
    out.push_back({"grotzsch", mycielski(cycle(5)), "mycielski(cycle(5))"});
    out.push_back({"mycielski_c7", mycielski(cycle(7)), "mycielski(cycle(7))"});
    for (int i = 0; i < 50; ++i) {
        const int n = 12 + i % 9;
        const int girth_min = 5 + 2 * (i % 3);
        const std::uint64_t seed = static_cast<std::uint64_t>(i) + 1;
        for (int m = n + 1 + i % 4; m >= 0; --m) {
            try {
                Graph g = random_girth_graph(n, m, girth_min, seed, 200);
                out.push_back({"random_" + std::to_string(i), std::move(g),
                               "random_girth_graph(" + join_params({n, m, girth_min}, ',') + ",seed=" +
                                   std::to_string(seed) + ",attempts=200)"});
                break;
            } catch (const ExhaustedAttempts&) {
            }
        }
    }
    return out;
}

std::filesystem::path manifest_path(const std::filesystem::path& corpus) {
    std::filesystem::path p = corpus;
    p += ".manifest.json";
    return p;
}

void write_corpus(const std::filesystem::path& path, const std::vector<CorpusEntry>& entries) {
    std::ofstream g6(path);
    if (!g6) throw MalformedInput("cannot open " + path.string() + " for writing");
    nlohmann::json manifest;
    manifest["schema_version"] = 1;
    manifest["entries"] = nlohmann::json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        g6 << write_graph6(entries[i].graph) << '\n';
        manifest["entries"].push_back(
            {{"line", i + 1}, {"id", entries[i].id}, {"provenance", entries[i].provenance}});
    }
    std::ofstream mf(manifest_path(path));
    if (!mf) throw MalformedInput("cannot open " + manifest_path(path).string() + " for writing");
    mf << manifest.dump(2) << '\n';
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path.string());
    std::vector<CorpusEntry> out;
    std::vector<std::size_t> lines;
    GraphReader reader(in, GraphFormat::graph6, path.filename().string());
    while (auto parsed = reader.next()) {
        lines.push_back(parsed->line);
        out.push_back({parsed->id, std::move(parsed->graph), parsed->id});
    }

    std::ifstream mf(manifest_path(path));
    if (!mf) return out;
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(mf);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(manifest_path(path).string() + ": " + e.what());
    }
    for (const auto& entry : manifest.at("entries")) {
        const std::size_t line = entry.at("line").get<std::size_t>();
        const auto it = std::find(lines.begin(), lines.end(), line);
        if (it == lines.end()) throw MalformedInput("manifest names line " + std::to_string(line) + " with no graph");
        CorpusEntry& e = out[static_cast<std::size_t>(it - lines.begin())];
        e.id = entry.at("id").get<std::string>();
        e.provenance = entry.value("provenance", e.provenance);
    }
    return out;
}

}  // namespace oddhole
