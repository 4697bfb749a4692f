#pragma once

#include <nlohmann/json.hpp>

#include "oddhole/coloring.hpp"
#include "oddhole/cuts.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/subdivision.hpp"

namespace oddhole {

nlohmann::json to_json(const VertexPath& p);
nlohmann::json to_json(const CycleSeq& c);
nlohmann::json to_json(const Edge& e);
nlohmann::json to_json(const GellVerdict& v);
nlohmann::json to_json(const ChordalPathRecord& r);
nlohmann::json to_json(const CutWitness& w);
nlohmann::json to_json(const ColoringCertificate& c);
nlohmann::json to_json(const CriticalityVerdict& v);
/// Branch ids, arris vertex lists, pair grouping and face lengths.
nlohmann::json to_json(const K4Subdivision& h);
nlohmann::json to_json(const OddK4Verdict& v);

VertexPath path_from_json(const nlohmann::json& j);
CycleSeq cycle_from_json(const nlohmann::json& j);
/// Rebuilds a subdivision from its branch ids and arrises; throws
/// MalformedInput on inconsistent data.
K4Subdivision k4_from_json(const nlohmann::json& j);

}  // namespace oddhole
