#include "oddhole/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oddhole {

bool verify_coloring(const Graph& g, const ColoringCertificate& c) {
    if (static_cast<int>(c.assignment.size()) != g.num_vertices()) return false;
    for (int colour : c.assignment)
        if (colour < 0 || colour >= c.k) return false;
    for (const Edge& e : g.edges())
        if (c.assignment[e.u] == c.assignment[e.v]) return false;
    return true;
}

namespace {

// Saturation-degree state shared by the greedy pass and the exact search.
class Dsatur {
public:
    Dsatur(const Graph& g, int k)
        : g_(g), k_(k), colour_(g.num_vertices(), -1), seen_(g.num_vertices(), std::vector<int>(k, 0)),
          saturation_(g.num_vertices(), 0), free_degree_(g.num_vertices(), 0) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) free_degree_[v] = g.degree(v);
    }

    // Uncoloured vertex of maximum saturation, then maximum uncoloured
    // degree, then smallest id; -1 when everything is coloured.
    Vertex select() const {
        Vertex best = -1;
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (colour_[v] >= 0) continue;
            if (best < 0 || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && free_degree_[v] > free_degree_[best]))
                best = v;
        }
        return best;
    }

    bool allowed(Vertex v, int c) const { return seen_[v][c] == 0; }
    int saturation(Vertex v) const { return saturation_[v]; }

    void assign(Vertex v, int c) {
        colour_[v] = c;
        for (Vertex w : g_.neighbors(v)) {
            if (seen_[w][c]++ == 0) ++saturation_[w];
            --free_degree_[w];
        }
    }

    void unassign(Vertex v) {
        const int c = colour_[v];
        colour_[v] = -1;
        for (Vertex w : g_.neighbors(v)) {
            if (--seen_[w][c] == 0) --saturation_[w];
            ++free_degree_[w];
        }
    }

    bool search(int used) {
        const Vertex v = select();
        if (v < 0) return true;
        if (saturation_[v] >= k_) return false;
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (!allowed(v, c)) continue;
            assign(v, c);
            if (search(std::max(used, c + 1))) return true;
            unassign(v);
        }
        return false;
    }

    ColoringCertificate certificate() const {
        return ColoringCertificate{k_, colour_};
    }

private:
    const Graph& g_;
    int k_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> seen_;  // seen_[v][c]: neighbours of v coloured c
    std::vector<int> saturation_;
    std::vector<int> free_degree_;
};

ColoringCertificate greedy_dsatur(const Graph& g) {
    const int n = g.num_vertices();
    Dsatur state(g, std::max(n, 1));
    int used = 0;
    for (Vertex v = state.select(); v >= 0; v = state.select()) {
        int c = 0;
        while (!state.allowed(v, c)) ++c;
        state.assign(v, c);
        used = std::max(used, c + 1);
    }
    ColoringCertificate cert = state.certificate();
    cert.k = used;
    return cert;
}

}  // namespace

std::optional<ColoringCertificate> is_k_colorable(const Graph& g, int k) {
    if (k < 0) return std::nullopt;
    if (g.num_vertices() == 0) return ColoringCertificate{k, {}};
    if (k == 0) return std::nullopt;
    Dsatur state(g, k);
    if (!state.search(0)) return std::nullopt;
    return state.certificate();
}

int greedy_clique_bound(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    int best = 1;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        std::vector<Vertex> clique{s};
        std::vector<Vertex> cand(g.neighbors(s).begin(), g.neighbors(s).end());
        std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        for (Vertex v : cand) {
            bool joins = true;
            for (Vertex u : clique)
                if (!g.adjacent(u, v)) {
                    joins = false;
                    break;
                }
            if (joins) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

ChromaticResult chromatic_number(const Graph& g) {
    if (g.num_vertices() == 0) return {0, ColoringCertificate{0, {}}};
    ColoringCertificate upper = greedy_dsatur(g);
    for (int k = greedy_clique_bound(g); k < upper.k; ++k)
        if (auto cert = is_k_colorable(g, k)) return {k, *cert};
    return {upper.k, upper};
}

CriticalityVerdict is_k_vertex_critical(const Graph& g, int k) {
    CriticalityVerdict verdict;
    verdict.k = k;
    verdict.chi = chromatic_number(g).chi;
    if (verdict.chi != k) return verdict;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const Vertex gone[1] = {v};
        const int chi_v = chromatic_number(remove_vertices(g, gone).graph).chi;
        if (chi_v != verdict.chi && chi_v != verdict.chi - 1)
            throw std::logic_error("chromatic number dropped by " + std::to_string(verdict.chi - chi_v) +
                                   " after deleting one vertex");
        if (chi_v == verdict.chi) {
            verdict.failing_vertex = v;
            return verdict;
        }
    }
    verdict.is_critical = true;
    return verdict;
}

}  // namespace oddhole
