#include "oddhole/analysis.hpp"

#include <chrono>

#include "oddhole/coloring.hpp"
#include "oddhole/cuts.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/serialize.hpp"
#include "oddhole/subdivision.hpp"

namespace oddhole {

using nlohmann::json;

json analyze_graph(const Graph& g, const std::string& id, const AnalysisOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    json report{{"id", id}, {"n", g.num_vertices()}, {"m", g.num_edges()}};
    json exceeded = json::array();

    const auto gr = girth(g);
    report["girth"] = gr ? json(*gr) : json(nullptr);
    {
        SearchBudget budget(opts.budget);
        try {
            report["gell"] = to_json(g_ell_membership(g, budget));
        } catch (const SearchBudgetExceeded&) {
            report["gell"] = nullptr;
            exceeded.push_back("gell");
        }
    }

    const ChromaticResult chi = chromatic_number(g);
    report["chromatic"] = {{"chi", chi.chi}, {"certificate", to_json(chi.certificate)}};
    report["criticality"] = to_json(is_k_vertex_critical(g, opts.k));

    json cuts{{"k1", k1_cuts(g).size()},
              {"k2", k2_cuts(g).size()},
              {"two_edge", two_edge_cuts(g).size()},
              {"edge_connectivity", edge_connectivity(g)}};
    {
        SearchBudget budget(opts.budget);
        try {
            cuts["p3"] = pi_cuts(g, 3, PathCutMode::induced, budget).size();
        } catch (const SearchBudgetExceeded&) {
            cuts["p3"] = nullptr;
            exceeded.push_back("p3");
        }
    }
    report["cuts"] = cuts;

    if (opts.odd_k4) {
        SearchBudget budget(opts.budget);
        const OddK4Search search = find_odd_k4_subdivision(g, budget);
        json k4{{"status", std::string(to_string(search.status))}, {"expansions", search.expansions}};
        if (search.witness) k4["witness"] = to_json(*search.witness);
        if (search.status == OddK4Status::absent_budget) exceeded.push_back("odd_k4");
        report["odd_k4"] = k4;
    }

    report["budget_exceeded"] = exceeded;
    if (opts.timings)
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace oddhole
