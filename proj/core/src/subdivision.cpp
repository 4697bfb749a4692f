#include "oddhole/subdivision.hpp"

#include <algorithm>
#include <map>

#include "oddhole/holes.hpp"

namespace oddhole {

int arris_index(int i, int j) {
    if (i > j) std::swap(i, j);
    static constexpr int kIndex[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return kIndex[i][j];
}

int K4Subdivision::total_length() const {
    int total = 0;
    for (const auto& a : arrises) total += a.length();
    return total;
}

std::vector<Vertex> K4Subdivision::vertices() const {
    std::vector<Vertex> out(branch.begin(), branch.end());
    for (const auto& a : arrises)
        for (Vertex v : a.interior()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSet K4Subdivision::edges() const {
    EdgeSet out;
    for (const auto& a : arrises) out.merge(edges_of(a));
    return out;
}

namespace {

CycleSeq face_cycle(const K4Subdivision& h, int a, int b, int c) {
    // a -> b, b -> c, then c -> a along the reversed (a, c) arris.
    CycleSeq face;
    const auto& ab = h.arris(a, b).vertices;
    const auto& bc = h.arris(b, c).vertices;
    const auto& ac = h.arris(a, c).vertices;
    face.vertices.assign(ab.begin(), ab.end());
    face.vertices.insert(face.vertices.end(), bc.begin() + 1, bc.end());
    face.vertices.insert(face.vertices.end(), ac.rbegin() + 1, ac.rend() - 1);
    return face;
}

void fill_faces(K4Subdivision& h) {
    for (std::size_t f = 0; f < 4; ++f) {
        const auto& t = K4Subdivision::kFaceBranches[f];
        h.faces[f] = face_cycle(h, t[0], t[1], t[2]);
    }
}

}  // namespace

K4Subdivision make_k4_subdivision(std::array<Vertex, 4> branch, std::vector<VertexPath> paths) {
    std::sort(branch.begin(), branch.end());
    if (std::adjacent_find(branch.begin(), branch.end()) != branch.end())
        throw MalformedInput("K4 subdivision: branch vertices must be distinct");
    if (paths.size() != 6) throw MalformedInput("K4 subdivision: expected six arrises");
    K4Subdivision h;
    h.branch = branch;
    std::array<bool, 6> filled{};
    auto position = [&](Vertex v) {
        return static_cast<int>(std::find(branch.begin(), branch.end(), v) - branch.begin());
    };
    for (auto& p : paths) {
        if (p.vertices.size() < 2) throw MalformedInput("K4 subdivision: arris shorter than one edge");
        int i = position(p.front());
        int j = position(p.back());
        if (i == 4 || j == 4 || i == j) throw MalformedInput("K4 subdivision: arris ends are not two branch vertices");
        if (i > j) {
            std::reverse(p.vertices.begin(), p.vertices.end());
            std::swap(i, j);
        }
        const int idx = arris_index(i, j);
        if (filled[idx]) throw MalformedInput("K4 subdivision: two arrises join the same branch pair");
        filled[idx] = true;
        h.arrises[idx] = std::move(p);
    }
    fill_faces(h);
    return h;
}

std::string validate_k4_subdivision(const Graph& g, const K4Subdivision& h) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (!g.contains(h.branch[i])) return "branch vertex out of range";
        if (i > 0 && h.branch[i - 1] >= h.branch[i]) return "branch vertices not strictly increasing";
    }
    std::map<Vertex, int> degree;
    std::map<Vertex, int> owner;  // interior vertex -> arris
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const auto& a = h.arris(i, j);
            if (a.vertices.size() < 2) return "empty arris";
            if (a.front() != h.branch[i] || a.back() != h.branch[j]) return "arris ends do not match branch pair";
            if (!is_path(g, a.vertices)) return "arris is not a path of the host";
            for (Vertex v : a.interior()) {
                if (std::find(h.branch.begin(), h.branch.end(), v) != h.branch.end())
                    return "arris interior contains a branch vertex";
                if (!owner.emplace(v, arris_index(i, j)).second) return "arrises are not internally disjoint";
            }
            for (std::size_t k = 0; k + 1 < a.vertices.size(); ++k) {
                ++degree[a.vertices[k]];
                ++degree[a.vertices[k + 1]];
            }
        }
    if (h.edges().size() != static_cast<std::size_t>(h.total_length())) return "repeated edge";
    for (auto [v, d] : degree) {
        const bool is_branch = std::find(h.branch.begin(), h.branch.end(), v) != h.branch.end();
        if (is_branch && d != 3) return "branch vertex without degree 3";
        if (!is_branch && d != 2) return "interior vertex without degree 2";
    }
    for (const auto& pair : K4Subdivision::kPairs) {
        const auto& a = h.arrises[pair[0]].vertices;
        const auto& b = h.arrises[pair[1]].vertices;
        for (Vertex v : a)
            if (std::find(b.begin(), b.end(), v) != b.end()) return "opposite arrises share a vertex";
    }
    K4Subdivision rebuilt = h;
    fill_faces(rebuilt);
    if (rebuilt.faces != h.faces) return "faces do not match arrises";
    for (const auto& f : h.faces)
        if (!is_cycle(g, f.vertices)) return "face is not a cycle of the host";
    return {};
}

std::array<std::array<VertexPath, 2>, 3> arris_pairs(const K4Subdivision& h) {
    std::array<std::array<VertexPath, 2>, 3> out;
    for (std::size_t p = 0; p < 3; ++p)
        out[p] = {h.arrises[K4Subdivision::kPairs[p][0]], h.arrises[K4Subdivision::kPairs[p][1]]};
    return out;
}

int difference(const K4Subdivision& h) {
    const auto [lo, hi] = std::minmax_element(h.arrises.begin(), h.arrises.end(),
                                              [](const auto& a, const auto& b) { return a.length() < b.length(); });
    return hi->length() - lo->length();
}

bool edge_count_check(const K4Subdivision& h, int ell) { return h.total_length() == 4 * ell + 2; }

OddK4Verdict is_odd_k4_subdivision(const Graph& g, const K4Subdivision& h) {
    OddK4Verdict verdict;
    verdict.subdivision = h;
    verdict.is_odd = true;
    for (std::size_t f = 0; f < 4; ++f) {
        verdict.face_lengths[f] = h.faces[f].length();
        if (verdict.is_odd && !is_odd_hole(g, h.faces[f])) {
            verdict.is_odd = false;
            verdict.non_odd_face = static_cast<int>(f);
        }
    }
    return verdict;
}

namespace {

// Every K4-subdivision has a unique smallest branch vertex b0; the face
// avoiding b0 is a cycle C through the other three branch vertices, and the
// rest is a tripod of three internally disjoint b0-C paths. The search fixes
// b0, walks every candidate base cycle C, and grows tripods whose legs start
// at increasing neighbours of b0, so each subgraph is generated once.
class K4Search {
public:
    K4Search(const Graph& g, const K4SearchOptions& opts, std::optional<int> prune_ell, SearchBudget& budget)
        : g_(g), opts_(opts), prune_ell_(prune_ell), budget_(budget), on_base_(g.num_vertices(), 0),
          used_(g.num_vertices(), 0), touch_core_(g.num_vertices(), 0),
          touch_end_(g.num_vertices(), 0) {
        leg_cap_ = opts.max_arris_len;
        if (prune_ell_) leg_cap_ = leg_cap_ ? std::min(*leg_cap_, *prune_ell_) : *prune_ell_;
    }

    void run(const K4Visitor& visit) {
        collect_bases();
        for (Vertex b0 = 0; b0 < g_.num_vertices(); ++b0) {
            if (g_.degree(b0) < 3) continue;
            b0_ = b0;
            group_.clear();
            for (const CycleSeq& base : bases_) {
                if (std::count_if(base.vertices.begin(), base.vertices.end(), [&](Vertex v) { return v > b0; }) < 3)
                    continue;
                if (std::find(base.vertices.begin(), base.vertices.end(), b0) != base.vertices.end()) continue;
                search_base(base);
            }
            std::sort(group_.begin(), group_.end());
            for (const auto& h : group_)
                if (!visit(h)) return;
        }
    }

private:
    void collect_bases() {
        std::optional<int> cap;
        if (opts_.max_arris_len) cap = 3 * *opts_.max_arris_len;
        if (prune_ell_) cap = 2 * *prune_ell_ + 1;
        auto keep = [&](const CycleSeq& c) {
            bases_.push_back(c);
            return true;
        };
        if (opts_.require_odd_faces) {
            enumerate_induced_cycles(g_, cap, budget_, [&](const CycleSeq& c) {
                if (c.is_odd() && c.length() >= 5) bases_.push_back(c);
                return true;
            });
        } else {
            enumerate_cycles(g_, cap, budget_, keep);
        }
    }

    void search_base(const CycleSeq& base) {
        base_ = &base;
        for (Vertex v : base.vertices) on_base_[v] = 1;
        place_core(b0_);
        start_leg(0, -1);
        unplace_core(b0_);
        for (Vertex v : base.vertices) on_base_[v] = 0;
    }

    void place_core(Vertex v) {
        used_[v] = 1;
        for (Vertex w : g_.neighbors(v)) ++touch_core_[w];
    }
    void unplace_core(Vertex v) {
        used_[v] = 0;
        for (Vertex w : g_.neighbors(v)) --touch_core_[w];
    }
    void place_end(Vertex v) {
        used_[v] = 1;
        for (Vertex w : g_.neighbors(v)) ++touch_end_[w];
    }
    void unplace_end(Vertex v) {
        used_[v] = 0;
        for (Vertex w : g_.neighbors(v)) --touch_end_[w];
    }

    bool within_cap(int len) const { return !leg_cap_ || len <= *leg_cap_; }

    void start_leg(int k, Vertex previous_first) {
        for (Vertex v : g_.neighbors(b0_)) {
            if (v <= previous_first) continue;
            legs_[k].assign({b0_});
            step(k, v, 1);
        }
    }

    // Try to append v to leg k, which would then have length `len`.
    void step(int k, Vertex v, int len) {
        if (used_[v]) return;
        budget_.charge("K4 subdivision search");
        const bool odd = opts_.require_odd_faces;
        if (on_base_[v]) {
            if (v < b0_ || !within_cap(len)) return;
            if (odd && touch_core_[v] != 1) return;
            legs_[k].push_back(v);
            place_end(v);
            if (k == 2)
                complete();
            else
                start_leg(k + 1, legs_[k][1]);
            unplace_end(v);
            legs_[k].pop_back();
            return;
        }
        if (!within_cap(len + 1)) return;
        if (odd && (touch_core_[v] != 1 || touch_end_[v] != 0)) return;
        legs_[k].push_back(v);
        place_core(v);
        for (Vertex w : g_.neighbors(v)) step(k, w, len + 1);
        unplace_core(v);
        legs_[k].pop_back();
    }

    VertexPath base_arc(Vertex from, Vertex to, Vertex avoid) const {
        auto arcs = cycle_arcs(*base_, from, to);
        const auto& first = arcs[0].vertices;
        return std::find(first.begin(), first.end(), avoid) == first.end() ? arcs[0] : arcs[1];
    }

    void complete() {
        const Vertex c0 = legs_[0].back();
        const Vertex c1 = legs_[1].back();
        const Vertex c2 = legs_[2].back();
        std::vector<VertexPath> paths;
        for (const auto& leg : legs_) paths.push_back(VertexPath{leg});
        paths.push_back(base_arc(c0, c1, c2));
        paths.push_back(base_arc(c1, c2, c0));
        paths.push_back(base_arc(c0, c2, c1));
        K4Subdivision h = make_k4_subdivision({b0_, c0, c1, c2}, std::move(paths));

        if (opts_.max_arris_len)
            for (const auto& a : h.arrises)
                if (a.length() > *opts_.max_arris_len) return;
        if (prune_ell_) {
            for (const auto& pair : K4Subdivision::kPairs) {
                const int len = h.arrises[pair[0]].length();
                if (len != h.arrises[pair[1]].length() || len > *prune_ell_) return;
            }
        }
        if (opts_.require_odd_faces)
            for (const auto& f : h.faces)
                if (!is_odd_hole(g_, f)) return;
        group_.push_back(std::move(h));
    }

    const Graph& g_;
    const K4SearchOptions& opts_;
    std::optional<int> prune_ell_;
    SearchBudget& budget_;
    std::optional<int> leg_cap_;
    std::vector<CycleSeq> bases_;
    const CycleSeq* base_ = nullptr;
    Vertex b0_ = 0;
    std::vector<char> on_base_;
    std::vector<char> used_;
    std::vector<int> touch_core_;  // adjacency to b0 and leg interiors
    std::vector<int> touch_end_;   // adjacency to leg ends on the base
    std::array<std::vector<Vertex>, 3> legs_;
    std::vector<K4Subdivision> group_;
};

std::optional<int> pruning_parameter(const Graph& g, const K4SearchOptions& opts, SearchBudget& budget) {
    if (!opts.pruned || !opts.require_odd_faces) return std::nullopt;
    if (opts.ell) return opts.ell;
    const GellVerdict membership = g_ell_membership(g, budget);
    if (!membership.member) return std::nullopt;
    return membership.ell;
}

}  // namespace

void enumerate_k4_subdivisions(const Graph& g, const K4SearchOptions& opts, SearchBudget& budget,
                               const K4Visitor& visit) {
    K4Search(g, opts, pruning_parameter(g, opts, budget), budget).run(visit);
}

std::vector<K4Subdivision> k4_subdivisions(const Graph& g, const K4SearchOptions& opts, SearchBudget& budget) {
    std::vector<K4Subdivision> out;
    enumerate_k4_subdivisions(g, opts, budget, [&](const K4Subdivision& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

std::vector<K4Subdivision> k4_subdivisions(const Graph& g, const K4SearchOptions& opts) {
    SearchBudget budget;
    return k4_subdivisions(g, opts, budget);
}

std::string_view to_string(OddK4Status s) {
    switch (s) {
        case OddK4Status::found: return "found";
        case OddK4Status::absent_certified: return "absent-certified";
        case OddK4Status::absent_budget: return "absent-budget";
    }
    return "unknown";
}

OddK4Search find_odd_k4_subdivision(const Graph& g, SearchBudget& budget, bool allow_pruning) {
    OddK4Search result;
    K4SearchOptions opts;
    opts.require_odd_faces = true;
    opts.pruned = allow_pruning;
    try {
        enumerate_k4_subdivisions(g, opts, budget, [&](const K4Subdivision& h) {
            result.witness = is_odd_k4_subdivision(g, h);
            return false;
        });
        result.status = result.witness ? OddK4Status::found : OddK4Status::absent_certified;
    } catch (const SearchBudgetExceeded&) {
        result.witness.reset();
        result.status = OddK4Status::absent_budget;
    }
    result.expansions = budget.used();
    return result;
}

OddK4Search find_odd_k4_subdivision(const Graph& g) {
    SearchBudget budget;
    return find_odd_k4_subdivision(g, budget);
}

}  // namespace oddhole
