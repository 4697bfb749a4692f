#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "oddhole/errors.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

struct AnalysisOptions {
    int k = 4;  // criticality parameter
    std::uint64_t budget = SearchBudget::kDefaultLimit;  // per search
    bool odd_k4 = true;
    bool timings = true;
};

/// Summary of one graph: girth, class membership, chromatic data,
/// criticality, cut counts and the odd K4 search. Searches that run out of
/// budget are listed under "budget_exceeded" and their fields are null.
nlohmann::json analyze_graph(const Graph& g, const std::string& id, const AnalysisOptions& opts = {});

}  // namespace oddhole
