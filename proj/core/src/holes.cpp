#include "oddhole/holes.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace oddhole {

std::optional<int> girth(const Graph& g) {
    const int n = g.num_vertices();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    std::queue<Vertex> q;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        q = {};
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            if (2 * dist[v] + 1 >= best) break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

namespace {

// Canonical-start DFS shared by the induced and the plain cycle enumerators.
// Paths start at their smallest vertex `s` and only use larger vertices;
// a cycle closes when the path returns next to `s`, and is kept only in the
// orientation where path[1] < last.
class CycleSearch {
public:
    CycleSearch(const Graph& g, std::optional<int> max_len, bool induced, SearchBudget& budget,
                const CycleVisitor& visit)
        : g_(g), max_len_(max_len), induced_(induced), budget_(budget), visit_(visit),
          on_path_(g.num_vertices(), 0), touch_(g.num_vertices(), 0) {}

    void run() {
        for (Vertex s = 0; s < g_.num_vertices() && !stopped_; ++s) {
            start_ = s;
            push(s);
            extend();
            pop();
        }
    }

private:
    void push(Vertex v) {
        path_.push_back(v);
        on_path_[v] = 1;
        for (Vertex w : g_.neighbors(v)) ++touch_[w];
    }

    void pop() {
        const Vertex v = path_.back();
        path_.pop_back();
        on_path_[v] = 0;
        for (Vertex w : g_.neighbors(v)) --touch_[w];
    }

    bool room_for(std::size_t cycle_len) const {
        return !max_len_ || static_cast<int>(cycle_len) <= *max_len_;
    }

    void extend() {
        budget_.charge(induced_ ? "induced cycle enumeration" : "cycle enumeration");
        const Vertex u = path_.back();
        for (Vertex v : g_.neighbors(u)) {
            if (stopped_) return;
            if (v <= start_ || on_path_[v]) continue;
            if (path_.size() == 1) {
                if (!room_for(3)) continue;
                push(v);
                extend();
                pop();
                continue;
            }
            const bool closes = g_.adjacent(v, start_);
            if (induced_) {
                if (closes) {
                    if (touch_[v] == 2 && path_[1] < v && room_for(path_.size() + 1)) emit(v);
                } else if (touch_[v] == 1 && room_for(path_.size() + 2)) {
                    push(v);
                    extend();
                    pop();
                }
            } else {
                if (closes && path_[1] < v && room_for(path_.size() + 1)) emit(v);
                if (room_for(path_.size() + 2)) {
                    push(v);
                    extend();
                    pop();
                }
            }
        }
    }

    void emit(Vertex last) {
        CycleSeq c;
        c.vertices = path_;
        c.vertices.push_back(last);
        if (!visit_(c)) stopped_ = true;
    }

    const Graph& g_;
    std::optional<int> max_len_;
    bool induced_;
    SearchBudget& budget_;
    const CycleVisitor& visit_;
    std::vector<char> on_path_;
    std::vector<int> touch_;  // number of path vertices adjacent to each vertex
    std::vector<Vertex> path_;
    Vertex start_ = 0;
    bool stopped_ = false;
};

}  // namespace

void enumerate_induced_cycles(const Graph& g, std::optional<int> max_len, SearchBudget& budget,
                              const CycleVisitor& visit) {
    CycleSearch(g, max_len, true, budget, visit).run();
}

std::vector<CycleSeq> induced_cycles(const Graph& g, std::optional<int> max_len) {
    SearchBudget budget;
    std::vector<CycleSeq> out;
    enumerate_induced_cycles(g, max_len, budget, [&](const CycleSeq& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

void enumerate_cycles(const Graph& g, std::optional<int> max_len, SearchBudget& budget,
                      const CycleVisitor& visit) {
    CycleSearch(g, max_len, false, budget, visit).run();
}

std::vector<CycleSeq> odd_holes(const Graph& g, SearchBudget& budget) {
    std::vector<CycleSeq> out;
    enumerate_induced_cycles(g, std::nullopt, budget, [&](const CycleSeq& c) {
        if (c.is_odd() && c.length() >= 5) out.push_back(c);
        return true;
    });
    return out;
}

std::vector<CycleSeq> odd_holes(const Graph& g) {
    SearchBudget budget;
    return odd_holes(g, budget);
}

bool is_hole(const Graph& g, const CycleSeq& c) {
    return c.length() >= 4 && is_induced_cycle(g, c.vertices);
}

bool is_odd_hole(const Graph& g, const CycleSeq& c) {
    return c.is_odd() && c.length() >= 5 && is_induced_cycle(g, c.vertices);
}

std::string_view to_string(GellFailure f) {
    switch (f) {
        case GellFailure::none: return "none";
        case GellFailure::acyclic: return "acyclic";
        case GellFailure::girth_even: return "girth-even";
        case GellFailure::girth_too_small: return "girth-too-small";
        case GellFailure::long_odd_hole: return "long-odd-hole";
    }
    return "unknown";
}

GellVerdict g_ell_membership(const Graph& g, SearchBudget& budget) {
    GellVerdict verdict;
    verdict.girth = girth(g);
    if (!verdict.girth) {
        verdict.failure = GellFailure::acyclic;
        return verdict;
    }
    const int gir = *verdict.girth;
    if (gir % 2 == 0) {
        verdict.failure = GellFailure::girth_even;
        return verdict;
    }
    if (gir < 5) {
        verdict.failure = GellFailure::girth_too_small;
        return verdict;
    }
    enumerate_induced_cycles(g, std::nullopt, budget, [&](const CycleSeq& c) {
        if (c.is_odd() && c.length() > gir) {
            verdict.witness = c;
            return false;
        }
        return true;
    });
    if (verdict.witness) {
        verdict.failure = GellFailure::long_odd_hole;
        return verdict;
    }
    verdict.member = true;
    verdict.ell = (gir - 1) / 2;
    return verdict;
}

GellVerdict g_ell_membership(const Graph& g) {
    SearchBudget budget;
    return g_ell_membership(g, budget);
}

std::optional<ThetaStructure> is_induced_theta(const Graph& g, std::span<const Vertex> vertices) {
    const InducedSubgraph sub = induced_subgraph(g, vertices);
    const Graph& h = sub.graph;
    if (h.num_vertices() < 4 || count_components(h) != 1) return std::nullopt;
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        if (h.degree(v) == 3)
            branch.push_back(v);
        else if (h.degree(v) != 2)
            return std::nullopt;
    }
    if (branch.size() != 2) return std::nullopt;

    ThetaStructure theta;
    theta.branch = {sub.to_host[branch[0]], sub.to_host[branch[1]]};
    std::size_t covered = 2;
    for (int k = 0; k < 3; ++k) {
        Vertex prev = branch[0];
        Vertex cur = h.neighbors(branch[0])[k];
        VertexPath p{{sub.to_host[prev], sub.to_host[cur]}};
        while (cur != branch[1]) {
            if (cur == branch[0] || h.degree(cur) != 2) return std::nullopt;
            ++covered;
            const auto nb = h.neighbors(cur);
            const Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            p.vertices.push_back(sub.to_host[cur]);
        }
        theta.paths[k] = std::move(p);
    }
    if (covered != static_cast<std::size_t>(h.num_vertices())) return std::nullopt;
    std::sort(theta.paths.begin(), theta.paths.end());
    return theta;
}

std::array<VertexPath, 2> cycle_arcs(const CycleSeq& c, Vertex from, Vertex to) {
    const auto& cv = c.vertices;
    const int k = c.length();
    const int i = static_cast<int>(std::find(cv.begin(), cv.end(), from) - cv.begin());
    const int j = static_cast<int>(std::find(cv.begin(), cv.end(), to) - cv.begin());
    std::array<VertexPath, 2> arcs;
    for (int p = i;; p = (p + 1) % k) {
        arcs[0].vertices.push_back(cv[p]);
        if (p == j) break;
    }
    for (int p = i;; p = (p + k - 1) % k) {
        arcs[1].vertices.push_back(cv[p]);
        if (p == j) break;
    }
    return arcs;
}

namespace {

class ChordalSearch {
public:
    ChordalSearch(const Graph& g, const CycleSeq& hole, SearchBudget& budget)
        : g_(g), hole_(hole), budget_(budget), on_hole_(g.num_vertices(), 0),
          hole_touch_(g.num_vertices(), 0), on_path_(g.num_vertices(), 0),
          path_touch_(g.num_vertices(), 0) {
        for (Vertex v : hole.vertices) on_hole_[v] = 1;
        for (Vertex v : hole.vertices)
            for (Vertex w : g.neighbors(v)) ++hole_touch_[w];
    }

    std::vector<ChordalPathRecord> run() {
        for (Vertex a : hole_.vertices) {
            push(a);
            for (Vertex w : g_.neighbors(a)) {
                if (on_hole_[w]) continue;
                budget_.charge("chordal path enumeration");
                if (hole_touch_[w] == 1) {
                    push(w);
                    extend();
                    pop();
                } else if (hole_touch_[w] == 2) {
                    push(w);
                    finish(other_hole_neighbor(w, a));
                    pop();
                }
            }
            pop();
        }
        std::sort(out_.begin(), out_.end(), [](const auto& x, const auto& y) { return x.path < y.path; });
        return std::move(out_);
    }

private:
    Vertex other_hole_neighbor(Vertex w, Vertex not_this) const {
        for (Vertex x : g_.neighbors(w))
            if (on_hole_[x] && x != not_this) return x;
        return -1;
    }

    void push(Vertex v) {
        path_.push_back(v);
        on_path_[v] = 1;
        for (Vertex w : g_.neighbors(v)) ++path_touch_[w];
    }

    void pop() {
        const Vertex v = path_.back();
        path_.pop_back();
        on_path_[v] = 0;
        for (Vertex w : g_.neighbors(v)) --path_touch_[w];
    }

    void extend() {
        const Vertex u = path_.back();
        for (Vertex v : g_.neighbors(u)) {
            if (on_hole_[v] || on_path_[v] || path_touch_[v] != 1) continue;
            budget_.charge("chordal path enumeration");
            if (hole_touch_[v] == 0) {
                push(v);
                extend();
                pop();
            } else if (hole_touch_[v] == 1) {
                push(v);
                finish(other_hole_neighbor(v, -1));
                pop();
            }
        }
    }

    void finish(Vertex b) {
        const Vertex a = path_.front();
        // Adjacent ends would make the path itself non-induced.
        if (b < 0 || b == a || a > b || g_.adjacent(a, b)) return;
        ChordalPathRecord rec;
        rec.hole = hole_;
        rec.path.vertices = path_;
        rec.path.vertices.push_back(b);
        auto arcs = cycle_arcs(hole_, a, b);
        if (arcs[0].vertices[1] > arcs[1].vertices[1]) std::swap(arcs[0], arcs[1]);
        rec.arc1 = std::move(arcs[0]);
        rec.arc2 = std::move(arcs[1]);
        out_.push_back(std::move(rec));
    }

    const Graph& g_;
    const CycleSeq& hole_;
    SearchBudget& budget_;
    std::vector<char> on_hole_;
    std::vector<int> hole_touch_;
    std::vector<char> on_path_;
    std::vector<int> path_touch_;
    std::vector<Vertex> path_;
    std::vector<ChordalPathRecord> out_;
};

}  // namespace

std::vector<ChordalPathRecord> chordal_paths(const Graph& g, const CycleSeq& hole, SearchBudget& budget) {
    return ChordalSearch(g, hole, budget).run();
}

std::vector<ChordalPathRecord> chordal_paths(const Graph& g, const CycleSeq& hole) {
    SearchBudget budget;
    return chordal_paths(g, hole, budget);
}

}  // namespace oddhole
