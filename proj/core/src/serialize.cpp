#include "oddhole/serialize.hpp"

#include "oddhole/errors.hpp"

namespace oddhole {

using nlohmann::json;

json to_json(const VertexPath& p) { return p.vertices; }
json to_json(const CycleSeq& c) { return c.vertices; }
json to_json(const Edge& e) { return json::array({e.u, e.v}); }

json to_json(const GellVerdict& v) {
    json j{{"member", v.member}, {"girth", v.girth ? json(*v.girth) : json(nullptr)}};
    if (v.member)
        j["ell"] = v.ell;
    else
        j["failure"] = std::string(to_string(v.failure));
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

json to_json(const ChordalPathRecord& r) {
    return {{"hole", to_json(r.hole)}, {"path", to_json(r.path)}, {"arc1", to_json(r.arc1)},
            {"arc2", to_json(r.arc2)}};
}

json to_json(const CutWitness& w) {
    json j{{"kind", std::string(to_string(w.kind))}, {"components_after", w.components_after}};
    if (w.kind == CutKind::path) j["i"] = w.path_order;
    if (!w.vertices.empty()) j["vertices"] = w.vertices;
    if (!w.edges.empty()) {
        j["edges"] = json::array();
        for (const Edge& e : w.edges) j["edges"].push_back(to_json(e));
    }
    return j;
}

json to_json(const ColoringCertificate& c) { return {{"k", c.k}, {"assignment", c.assignment}}; }

json to_json(const CriticalityVerdict& v) {
    json j{{"k", v.k}, {"critical", v.is_critical}, {"chi", v.chi}};
    if (v.failing_vertex) j["failing_vertex"] = *v.failing_vertex;
    return j;
}

json to_json(const K4Subdivision& h) {
    json arrises = json::array();
    for (const auto& a : h.arrises) arrises.push_back(to_json(a));
    json pairs = json::array();
    for (const auto& p : K4Subdivision::kPairs) pairs.push_back({p[0], p[1]});
    json faces = json::array();
    for (const auto& f : h.faces) faces.push_back(f.length());
    return {{"branch", h.branch}, {"arrises", arrises}, {"pairs", pairs}, {"face_lengths", faces}};
}

json to_json(const OddK4Verdict& v) {
    json j{{"subdivision", to_json(v.subdivision)}, {"odd", v.is_odd}, {"face_lengths", v.face_lengths}};
    if (v.non_odd_face) j["non_odd_face"] = *v.non_odd_face;
    return j;
}

VertexPath path_from_json(const json& j) {
    try {
        return VertexPath{j.get<std::vector<Vertex>>()};
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("path: ") + e.what());
    }
}

CycleSeq cycle_from_json(const json& j) {
    try {
        return CycleSeq{j.get<std::vector<Vertex>>()};
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("cycle: ") + e.what());
    }
}

K4Subdivision k4_from_json(const json& j) {
    try {
        const auto branch = j.at("branch").get<std::array<Vertex, 4>>();
        std::vector<VertexPath> paths;
        for (const auto& a : j.at("arrises")) paths.push_back(path_from_json(a));
        return make_k4_subdivision(branch, std::move(paths));
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("K4 subdivision: ") + e.what());
    }
}

}  // namespace oddhole
