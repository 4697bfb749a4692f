#include "oddhole/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "oddhole/coloring.hpp"
#include "oddhole/cuts.hpp"
#include "oddhole/serialize.hpp"

namespace oddhole {

using nlohmann::json;

std::string_view to_string(LemmaId id) {
    switch (id) {
        case LemmaId::L2_1: return "L2.1";
        case LemmaId::L2_2: return "L2.2";
        case LemmaId::L2_3: return "L2.3";
        case LemmaId::L2_4: return "L2.4";
        case LemmaId::L2_5: return "L2.5";
        case LemmaId::L2_6: return "L2.6";
        case LemmaId::THM: return "THM";
    }
    return "?";
}

std::optional<LemmaId> parse_lemma_id(std::string_view name) {
    for (LemmaId id : kAllLemmas)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

std::string_view to_string(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::holds: return "holds";
        case LemmaStatus::vacuous: return "vacuous";
        case LemmaStatus::violated: return "violated";
        case LemmaStatus::budget: return "budget";
    }
    return "?";
}

bool SuiteConfig::wants(LemmaId id) const {
    return lemmas.empty() || std::find(lemmas.begin(), lemmas.end(), id) != lemmas.end();
}

const VertexPath& same_parity_arc(const ChordalPathRecord& rec) {
    return rec.arc1.length() % 2 == rec.path.length() % 2 ? rec.arc1 : rec.arc2;
}

const VertexPath& other_arc(const ChordalPathRecord& rec) {
    return &same_parity_arc(rec) == &rec.arc1 ? rec.arc2 : rec.arc1;
}

namespace {

std::string chordal_conclusion(int ell, const ChordalPathRecord& rec, const std::vector<ChordalPathRecord>& all) {
    const int p1 = same_parity_arc(rec).length();
    const int p2 = other_arc(rec).length();
    if (p1 < ell + 1) return "|P1| = " + std::to_string(p1) + " < ell + 1";
    if (p2 > ell) return "|P2| = " + std::to_string(p2) + " > ell";
    if (p1 <= p2) return "|P1| <= |P2|";
    for (const auto& other : all)
        if (other.path.front() == rec.path.front() && other.path.back() == rec.path.back() &&
            other.path.length() != p1)
            return "chordal path " + json(other.path.vertices).dump() + " with the same ends has length " +
                   std::to_string(other.path.length());
    return {};
}

std::string same_length_conclusion(const Graph& g, const VertexPath& p, const BlockDecomposition& blocks) {
    std::vector<char> on_path(g.num_vertices(), 0);
    for (Vertex v : p.vertices) on_path[v] = 1;
    for (const Block& b : blocks.blocks) {
        std::vector<Vertex> shared;
        for (Vertex v : b.vertices)
            if (on_path[v]) shared.push_back(v);
        for (std::size_t i = 0; i < shared.size(); ++i)
            for (std::size_t j = i + 1; j < shared.size(); ++j)
                if (!g.adjacent(shared[i], shared[j]))
                    return "block " + json(b.vertices).dump() + " contains non-adjacent path vertices " +
                           std::to_string(shared[i]) + " and " + std::to_string(shared[j]);
    }
    for (Vertex v : p.interior())
        if (!std::binary_search(blocks.cut_vertices.begin(), blocks.cut_vertices.end(), v))
            return "interior vertex " + std::to_string(v) + " is not a cut-vertex";
    return {};
}

ChordalPathRecord record_for(const CycleSeq& hole, const VertexPath& path) {
    ChordalPathRecord rec;
    rec.hole = hole;
    rec.path = path;
    auto arcs = cycle_arcs(hole, path.front(), path.back());
    if (arcs[0].vertices[1] > arcs[1].vertices[1]) std::swap(arcs[0], arcs[1]);
    rec.arc1 = arcs[0];
    rec.arc2 = arcs[1];
    return rec;
}

bool has_low_connectivity(const Graph& g) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 2) return true;
    return !k1_cuts(g).empty() || !k2_cuts(g).empty();
}

CutWitness cut_from_json(const json& j) {
    CutWitness w;
    const std::string kind = j.at("kind").get<std::string>();
    bool known = false;
    for (CutKind k : {CutKind::k1, CutKind::k2, CutKind::path, CutKind::edge_pair, CutKind::vertex_set})
        if (to_string(k) == kind) {
            w.kind = k;
            known = true;
        }
    if (!known) throw MalformedInput("unknown cut kind " + kind);
    w.path_order = j.value("i", 0);
    w.vertices = j.value("vertices", std::vector<Vertex>{});
    for (const auto& e : j.value("edges", json::array())) w.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    w.components_after = j.at("components_after").get<int>();
    return w;
}

// Components of G - X, each as a sorted host vertex list.
std::vector<std::vector<Vertex>> components_without(const Graph& g, const std::vector<Vertex>& removed) {
    const InducedSubgraph rest = remove_vertices(g, removed);
    const std::vector<int> labels = component_labels(rest.graph);
    const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<Vertex>> out(count);
    for (std::size_t i = 0; i < labels.size(); ++i) out[labels[i]].push_back(rest.to_host[i]);
    return out;
}

}  // namespace

std::string chordal_path_conclusion(const Graph& g, int ell, const ChordalPathRecord& rec, SearchBudget& budget) {
    return chordal_conclusion(ell, rec, chordal_paths(g, rec.hole, budget));
}

std::string same_length_conclusion(const Graph& g, const VertexPath& p) {
    return same_length_conclusion(g, p, blocks_and_cutvertices(g));
}

std::string odd_k4_conclusion(const Graph& g, int ell, const K4Subdivision& h) {
    for (const auto& pair : K4Subdivision::kPairs) {
        const int a = h.arrises[pair[0]].length();
        const int b = h.arrises[pair[1]].length();
        if (a != b) return "opposite arrises of lengths " + std::to_string(a) + " and " + std::to_string(b);
        if (a > ell) return "opposite arrises of length " + std::to_string(a) + " > ell";
    }
    const std::vector<Vertex> vs = h.vertices();
    std::vector<char> inside(g.num_vertices(), 0);
    for (Vertex v : vs) inside[v] = 1;
    const EdgeSet own = h.edges();
    for (Vertex v : vs)
        for (Vertex w : g.neighbors(v))
            if (v < w && inside[w] && !own.contains(Edge(v, w)))
                return "edge " + std::to_string(v) + "-" + std::to_string(w) + " makes the subdivision non-induced";
    if (ell >= 3)
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (inside[v]) continue;
            const auto nbrs = g.neighbors(v);
            if (std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return inside[w]; }) >= 2)
                return "outside vertex " + std::to_string(v) + " has two neighbours in the subdivision";
        }
    return {};
}

struct LemmaChecker::Facts {
    bool membership_tried = false;
    std::optional<GellVerdict> membership;
    std::string membership_error;
    std::map<int, CriticalityVerdict> criticality;
};

LemmaChecker::LemmaChecker(const Graph& g, SuiteConfig config)
    : g_(g), config_(std::move(config)), facts_(std::make_unique<Facts>()) {}

LemmaChecker::~LemmaChecker() = default;

const CriticalityVerdict& LemmaChecker::criticality(int k) {
    auto it = facts_->criticality.find(k);
    if (it == facts_->criticality.end()) it = facts_->criticality.emplace(k, is_k_vertex_critical(g_, k)).first;
    return it->second;
}

namespace {

struct Checking {
    LemmaVerdict v;

    explicit Checking(LemmaId id) { v.lemma = id; }

    void violate(json witness) {
        v.status = LemmaStatus::violated;
        v.witness = std::move(witness);
    }
    bool violated() const { return v.status == LemmaStatus::violated; }

    LemmaVerdict finish() {
        if (v.status != LemmaStatus::violated && v.status != LemmaStatus::budget)
            v.status = v.instances > 0 ? LemmaStatus::holds : LemmaStatus::vacuous;
        return std::move(v);
    }
};

// Runs body; budget exhaustion turns into status budget with the partial
// instance count kept.
template <class Body>
LemmaVerdict budgeted(Checking& c, Body&& body) {
    try {
        body();
    } catch (const SearchBudgetExceeded& e) {
        if (!c.violated()) {
            c.v.status = LemmaStatus::budget;
            c.v.note = e.what();
        }
    }
    return c.finish();
}

}  // namespace

nlohmann::json LemmaChecker::membership_json() {
    if (!facts_->membership_tried) {
        facts_->membership_tried = true;
        SearchBudget budget(config_.budget);
        try {
            facts_->membership = g_ell_membership(g_, budget);
        } catch (const SearchBudgetExceeded& e) {
            facts_->membership_error = e.what();
        }
    }
    return facts_->membership ? to_json(*facts_->membership) : json(nullptr);
}

LemmaVerdict LemmaChecker::check(LemmaId id) {
    LemmaVerdict v;
    switch (id) {
        case LemmaId::L2_1: v = check_L2_1(); break;
        case LemmaId::L2_2: v = check_L2_2(); break;
        case LemmaId::L2_3: v = check_L2_3(); break;
        case LemmaId::L2_4: v = check_L2_4(); break;
        case LemmaId::L2_5: v = check_L2_5(); break;
        case LemmaId::L2_6: v = check_L2_6(); break;
        case LemmaId::THM: v = check_theorem(); break;
    }
    if (v.status == LemmaStatus::violated && !replay_violation(g_, v, config_))
        throw std::logic_error(std::string(to_string(id)) + " violation did not replay: " + v.witness.dump());
    return v;
}

namespace {

// Membership gate shared by the class-restricted checks. Returns nullptr and
// fills in the verdict when the hypothesis cannot hold or was not decided.
const GellVerdict* require_member(const std::optional<GellVerdict>& m, const std::string& error, Checking& c) {
    if (!m) {
        c.v.status = LemmaStatus::budget;
        c.v.note = "membership undecided: " + error;
        return nullptr;
    }
    if (!m->member) return nullptr;
    return &*m;
}

}  // namespace

LemmaVerdict LemmaChecker::check_L2_1() {
    Checking c(LemmaId::L2_1);
    const auto& crit = criticality(config_.k);
    if (!crit.is_critical) return c.finish();
    c.v.instances = 1;
    const auto cuts = two_edge_cuts(g_);
    if (!cuts.empty())
        c.violate({{"k", config_.k}, {"edges", {to_json(cuts.front().first), to_json(cuts.front().second)}}});
    return c.finish();
}

LemmaVerdict LemmaChecker::check_L2_2() {
    Checking c(LemmaId::L2_2);
    membership_json();
    const GellVerdict* m = require_member(facts_->membership, facts_->membership_error, c);
    if (!m) return c.finish();
    SearchBudget budget(config_.budget);
    return budgeted(c, [&] {
        for (const CycleSeq& hole : odd_holes(g_, budget)) {
            const auto records = chordal_paths(g_, hole, budget);
            for (const auto& rec : records) {
                ++c.v.instances;
                const std::string why = chordal_conclusion(m->ell, rec, records);
                if (!why.empty()) {
                    c.violate({{"ell", m->ell}, {"hole", to_json(hole)}, {"path", to_json(rec.path)}, {"reason", why}});
                    return;
                }
            }
        }
    });
}

LemmaVerdict LemmaChecker::check_L2_3() {
    Checking c(LemmaId::L2_3);
    membership_json();
    const GellVerdict* m = require_member(facts_->membership, facts_->membership_error, c);
    if (!m) return c.finish();
    const auto& crit = criticality(4);
    if (!crit.is_critical) return c.finish();
    c.v.instances = 1;
    SearchBudget budget(config_.budget);
    return budgeted(c, [&] {
        for (const Edge& e : k2_cuts(g_)) {
            CutWitness w;
            w.kind = CutKind::k2;
            w.vertices = {e.u, e.v};
            w.components_after = count_components(remove_vertices(g_, w.vertices).graph);
            c.violate({{"ell", m->ell}, {"cut", to_json(w)}});
            return;
        }
        const auto p3 = pi_cuts(g_, 3, PathCutMode::induced, budget);
        if (!p3.empty()) c.violate({{"ell", m->ell}, {"cut", to_json(p3.front())}});
    });
}

LemmaVerdict LemmaChecker::check_L2_4() {
    Checking c(LemmaId::L2_4);
    membership_json();
    const GellVerdict* m = require_member(facts_->membership, facts_->membership_error, c);
    if (!m) return c.finish();
    SearchBudget budget(config_.budget);
    const BlockDecomposition blocks = blocks_and_cutvertices(g_);
    return budgeted(c, [&] {
        for (Vertex x = 0; x < g_.num_vertices(); ++x) {
            const std::vector<int> dist = bfs_distances(g_, x);
            for (Vertex y = x + 1; y < g_.num_vertices(); ++y) {
                // An induced path of length <= ell exists only if dist <= ell.
                if (g_.adjacent(x, y) || dist[y] < 0 || dist[y] > m->ell) continue;
                budget.charge("same-length pairs");
                const auto same = all_same_length(g_, x, y, budget);
                if (!same || *same > m->ell) continue;
                for (const VertexPath& p : induced_paths_between(g_, x, y, std::nullopt, budget)) {
                    ++c.v.instances;
                    const std::string why = same_length_conclusion(g_, p, blocks);
                    if (!why.empty()) {
                        c.violate({{"ell", m->ell}, {"path", to_json(p)}, {"reason", why}});
                        return;
                    }
                }
            }
        }
    });
}

LemmaVerdict LemmaChecker::check_L2_5() {
    Checking c(LemmaId::L2_5);
    membership_json();
    const GellVerdict* m = require_member(facts_->membership, facts_->membership_error, c);
    if (!m || m->ell < 4) return c.finish();
    SearchBudget budget(config_.budget);
    std::optional<bool> low;
    int capped = 0;
    LemmaVerdict out = budgeted(c, [&] {
        for (Vertex x = 0; x < g_.num_vertices(); ++x)
            for (Vertex y = x + 1; y < g_.num_vertices(); ++y) {
                if (g_.adjacent(x, y)) continue;
                const Vertex pair[2] = {x, y};
                if (static_cast<int>(closed_neighborhood(g_, pair).size()) - 2 > config_.max_cut_candidates) {
                    ++capped;
                    continue;
                }
                for (const auto& cut : constrained_vertex_cuts(g_, x, y, budget))
                    for (const auto& side : components_without(g_, cut)) {
                        budget.charge("constrained cut sides");
                        std::vector<Vertex> keep = cut;
                        keep.insert(keep.end(), side.begin(), side.end());
                        const InducedSubgraph g1 = induced_subgraph(g_, keep);
                        const auto k = all_same_length(g1.graph, g1.from_host[x], g1.from_host[y], budget);
                        if (!k || *k < 4 || *k > m->ell) continue;
                        ++c.v.instances;
                        if (!low) low = has_low_connectivity(g_);
                        if (!*low) {
                            c.violate({{"ell", m->ell}, {"x", x}, {"y", y}, {"cut", cut}, {"side", side}, {"k", *k}});
                            return;
                        }
                    }
            }
    });
    if (capped > 0 && out.status != LemmaStatus::violated) {
        out.status = LemmaStatus::budget;
        out.note = std::to_string(capped) + " pairs skipped: more than " + std::to_string(config_.max_cut_candidates) +
                   " cut candidates";
    }
    return out;
}

LemmaVerdict LemmaChecker::check_L2_6() {
    Checking c(LemmaId::L2_6);
    membership_json();
    const GellVerdict* m = require_member(facts_->membership, facts_->membership_error, c);
    if (!m) return c.finish();
    SearchBudget budget(config_.budget);
    // Unpruned: the pruned search assumes the first clause of what is being checked.
    K4SearchOptions opts;
    opts.require_odd_faces = true;
    return budgeted(c, [&] {
        enumerate_k4_subdivisions(g_, opts, budget, [&](const K4Subdivision& h) {
            ++c.v.instances;
            const std::string why = odd_k4_conclusion(g_, m->ell, h);
            if (why.empty()) return true;
            c.violate({{"ell", m->ell}, {"subdivision", to_json(h)}, {"reason", why}});
            return false;
        });
    });
}

LemmaVerdict LemmaChecker::check_theorem() {
    Checking c(LemmaId::THM);
    membership_json();
    const GellVerdict* m = require_member(facts_->membership, facts_->membership_error, c);
    if (!m || m->ell < 5) return c.finish();
    const auto& crit = criticality(4);
    if (!crit.is_critical) return c.finish();
    c.v.instances = 1;
    SearchBudget budget(config_.budget);
    const OddK4Search search = find_odd_k4_subdivision(g_, budget);
    if (search.status == OddK4Status::found) {
        c.violate({{"ell", m->ell}, {"subdivision", to_json(search.witness->subdivision)}});
    } else if (search.status == OddK4Status::absent_budget) {
        c.v.status = LemmaStatus::budget;
        c.v.note = "odd K4 search stopped after " + std::to_string(search.expansions) + " expansions";
    }
    return c.finish();
}

LemmaVerdict check_L2_1(const Graph& g, const SuiteConfig& config) { return LemmaChecker(g, config).check(LemmaId::L2_1); }
LemmaVerdict check_L2_2(const Graph& g, const SuiteConfig& config) { return LemmaChecker(g, config).check(LemmaId::L2_2); }
LemmaVerdict check_L2_3(const Graph& g, const SuiteConfig& config) { return LemmaChecker(g, config).check(LemmaId::L2_3); }
LemmaVerdict check_L2_4(const Graph& g, const SuiteConfig& config) { return LemmaChecker(g, config).check(LemmaId::L2_4); }
LemmaVerdict check_L2_5(const Graph& g, const SuiteConfig& config) { return LemmaChecker(g, config).check(LemmaId::L2_5); }
LemmaVerdict check_L2_6(const Graph& g, const SuiteConfig& config) { return LemmaChecker(g, config).check(LemmaId::L2_6); }
LemmaVerdict check_theorem(const Graph& g, const SuiteConfig& config) { return LemmaChecker(g, config).check(LemmaId::THM); }

bool replay_violation(const Graph& g, const LemmaVerdict& v, const SuiteConfig& config) {
    if (v.status != LemmaStatus::violated || !v.witness.is_object()) return false;
    const json& w = v.witness;
    try {
        auto member_with = [&](int ell) {
            const GellVerdict m = g_ell_membership(g);
            return m.member && m.ell == ell;
        };
        switch (v.lemma) {
            case LemmaId::L2_1: {
                const int k = w.at("k").get<int>();
                if (!is_k_vertex_critical(g, k).is_critical) return false;
                const Edge cut[2] = {Edge(w["edges"][0][0], w["edges"][0][1]), Edge(w["edges"][1][0], w["edges"][1][1])};
                for (const Edge& e : cut)
                    if (!g.contains(e.u) || !g.contains(e.v) || !g.adjacent(e.u, e.v)) return false;
                return count_components(remove_edges(g, cut)) > count_components(g);
            }
            case LemmaId::L2_2: {
                const int ell = w.at("ell").get<int>();
                if (!member_with(ell)) return false;
                const CycleSeq hole = cycle_from_json(w.at("hole"));
                const VertexPath path = path_from_json(w.at("path"));
                if (!is_odd_hole(g, hole)) return false;
                const auto all = chordal_paths(g, hole);
                if (std::none_of(all.begin(), all.end(), [&](const auto& r) { return r.path == path; })) return false;
                const ChordalPathRecord rec = record_for(hole, path);
                return !chordal_conclusion(ell, rec, all).empty();
            }
            case LemmaId::L2_3: {
                if (!member_with(w.at("ell").get<int>()) || !is_k_vertex_critical(g, 4).is_critical) return false;
                const CutWitness cut = cut_from_json(w.at("cut"));
                if (cut.kind == CutKind::path && (cut.path_order != 3 || !is_induced_path(g, cut.vertices)))
                    return false;
                return verify_cut(g, cut);
            }
            case LemmaId::L2_4: {
                const int ell = w.at("ell").get<int>();
                const VertexPath p = path_from_json(w.at("path"));
                if (!member_with(ell) || p.vertices.size() < 2 || !is_induced_path(g, p.vertices)) return false;
                if (g.adjacent(p.front(), p.back()) || p.length() > ell) return false;
                if (all_same_length(g, p.front(), p.back()) != p.length()) return false;
                return !same_length_conclusion(g, p).empty();
            }
            case LemmaId::L2_5: {
                const int ell = w.at("ell").get<int>();
                if (ell < 4 || !member_with(ell)) return false;
                const Vertex x = w.at("x").get<int>();
                const Vertex y = w.at("y").get<int>();
                if (g.adjacent(x, y)) return false;
                auto cut = w.at("cut").get<std::vector<Vertex>>();
                const auto side = w.at("side").get<std::vector<Vertex>>();
                const auto cuts = constrained_vertex_cuts(g, x, y);
                if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) return false;
                const auto sides = components_without(g, cut);
                if (std::find(sides.begin(), sides.end(), side) == sides.end()) return false;
                cut.insert(cut.end(), side.begin(), side.end());
                const InducedSubgraph g1 = induced_subgraph(g, cut);
                const auto k = all_same_length(g1.graph, g1.from_host[x], g1.from_host[y]);
                return k && *k >= 4 && *k <= ell && !has_low_connectivity(g);
            }
            case LemmaId::L2_6: {
                const int ell = w.at("ell").get<int>();
                const K4Subdivision h = k4_from_json(w.at("subdivision"));
                if (!member_with(ell) || !validate_k4_subdivision(g, h).empty()) return false;
                return is_odd_k4_subdivision(g, h).is_odd && !odd_k4_conclusion(g, ell, h).empty();
            }
            case LemmaId::THM: {
                const int ell = w.at("ell").get<int>();
                const K4Subdivision h = k4_from_json(w.at("subdivision"));
                if (ell < 5 || !member_with(ell) || !is_k_vertex_critical(g, 4).is_critical) return false;
                return validate_k4_subdivision(g, h).empty() && is_odd_k4_subdivision(g, h).is_odd;
            }
        }
    } catch (const json::exception&) {
        return false;
    } catch (const MalformedInput&) {
        return false;
    }
    (void)config;
    return false;
}

void SuiteSummary::add(const GraphReport& r) {
    ++graphs;
    for (const auto& v : r.verdicts) {
        const auto l = static_cast<std::size_t>(v.lemma);
        ++status_counts[l][static_cast<std::size_t>(v.status)];
        instances[l] += v.instances;
    }
}

std::uint64_t SuiteSummary::violations() const {
    std::uint64_t total = 0;
    for (const auto& row : status_counts) total += row[static_cast<std::size_t>(LemmaStatus::violated)];
    return total;
}

std::uint64_t SuiteSummary::budget_hits() const {
    std::uint64_t total = 0;
    for (const auto& row : status_counts) total += row[static_cast<std::size_t>(LemmaStatus::budget)];
    return total;
}

json to_json(const LemmaVerdict& v) {
    json j{{"lemma", std::string(to_string(v.lemma))},
           {"status", std::string(to_string(v.status))},
           {"instances", v.instances}};
    if (!v.witness.is_null()) j["witness"] = v.witness;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json to_json(const GraphReport& r, bool timings) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
    json j{{"id", r.id}, {"n", r.n}, {"m", r.m}, {"gell", r.gell}, {"verdicts", verdicts}};
    if (timings) j["seconds"] = r.seconds;
    return j;
}

json to_json(const SuiteConfig& config) {
    json lemmas = json::array();
    for (LemmaId id : kAllLemmas)
        if (config.wants(id)) lemmas.push_back(std::string(to_string(id)));
    return {{"k", config.k},
            {"budget", config.budget},
            {"lemmas", lemmas},
            {"max_cut_candidates", config.max_cut_candidates}};
}

json to_json(const SuiteSummary& s, const SuiteConfig& config) {
    json lemmas = json::object();
    for (LemmaId id : kAllLemmas) {
        if (!config.wants(id)) continue;
        const auto l = static_cast<std::size_t>(id);
        json row;
        for (LemmaStatus st : {LemmaStatus::holds, LemmaStatus::vacuous, LemmaStatus::violated, LemmaStatus::budget})
            row[std::string(to_string(st))] = s.status_counts[l][static_cast<std::size_t>(st)];
        row["instances"] = s.instances[l];
        row["globally_vacuous"] = s.instances[l] == 0;
        lemmas[std::string(to_string(id))] = row;
    }
    return {{"graphs", s.graphs}, {"violations", s.violations()}, {"budget", s.budget_hits()}, {"lemmas", lemmas}};
}

GraphReport check_graph(const CorpusEntry& entry, const SuiteConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    GraphReport r;
    r.id = entry.id;
    r.n = entry.graph.num_vertices();
    r.m = entry.graph.num_edges();
    LemmaChecker checker(entry.graph, config);
    r.gell = checker.membership_json();
    for (LemmaId id : kAllLemmas)
        if (config.wants(id)) r.verdicts.push_back(checker.check(id));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SuiteSummary run_suite(const std::function<std::optional<CorpusEntry>()>& next, const SuiteConfig& config,
                       const std::function<void(GraphReport&&)>& sink) {
    SuiteSummary summary;
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, config.jobs));
    const std::size_t batch_size = jobs * 8;
    bool exhausted = false;
    while (!exhausted) {
        std::vector<CorpusEntry> batch;
        while (batch.size() < batch_size) {
            auto e = next();
            if (!e) {
                exhausted = true;
                break;
            }
            batch.push_back(std::move(*e));
        }
        std::vector<GraphReport> reports(batch.size());
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (std::size_t i; (i = cursor.fetch_add(1)) < batch.size();) {
                try {
                    reports[i] = check_graph(batch[i], config);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        const std::size_t threads = std::min(jobs, batch.size());
        if (threads <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
        }
        if (failure) std::rethrow_exception(failure);
        for (auto& r : reports) {
            summary.add(r);
            sink(std::move(r));
        }
    }
    return summary;
}

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteConfig& config, std::string corpus_name) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.corpus = std::move(corpus_name);
    report.config = config;
    std::size_t pos = 0;
    report.summary = run_suite(
        [&]() -> std::optional<CorpusEntry> {
            if (pos == corpus.size()) return std::nullopt;
            return corpus[pos++];
        },
        config, [&](GraphReport&& r) { report.graphs.push_back(std::move(r)); });
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json to_json(const SuiteReport& r) {
    json graphs = json::array();
    for (const auto& g : r.graphs) graphs.push_back(to_json(g, r.config.timings));
    json j{{"schema_version", kReportSchemaVersion},
           {"corpus", r.corpus},
           {"config", to_json(r.config)},
           {"graphs", graphs},
           {"summary", to_json(r.summary, r.config)}};
    if (r.config.timings) j["timings"] = {{"total_seconds", r.seconds}};
    return j;
}

}  // namespace oddhole
