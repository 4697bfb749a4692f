#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddhole/coloring.hpp"
#include "oddhole/errors.hpp"
#include "oddhole/generators.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/subdivision.hpp"

namespace oddhole {

enum class LemmaId { L2_1, L2_2, L2_3, L2_4, L2_5, L2_6, THM };

inline constexpr std::array<LemmaId, 7> kAllLemmas{LemmaId::L2_1, LemmaId::L2_2, LemmaId::L2_3, LemmaId::L2_4,
                                                   LemmaId::L2_5, LemmaId::L2_6, LemmaId::THM};

/// "L2.1" ... "L2.6", "THM".
std::string_view to_string(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view name);

enum class LemmaStatus { holds, vacuous, violated, budget };

std::string_view to_string(LemmaStatus s);

struct LemmaVerdict {
    LemmaId lemma = LemmaId::L2_1;
    LemmaStatus status = LemmaStatus::vacuous;
    std::uint64_t instances = 0;  // hypothesis instances examined
    nlohmann::json witness;       // null unless violated
    std::string note;             // why the status is budget, or what was skipped
};

struct SuiteConfig {
    /// Criticality parameter for the 2-edge-cut check. The other checks are
    /// stated for 4-critical graphs only.
    int k = 4;
    /// Expansion budget per (graph, check). Membership gets its own.
    std::uint64_t budget = SearchBudget::kDefaultLimit;
    /// Empty means every check.
    std::vector<LemmaId> lemmas;
    int jobs = 1;
    /// The constrained-cut check gives up on a pair (status budget) when
    /// N[{x,y}] - {x,y} has more vertices than this.
    int max_cut_candidates = 24;
    bool timings = true;

    bool wants(LemmaId id) const;
};

// Instance-level conclusions. Each returns an empty string when the
// conclusion holds and a short reason otherwise. They do not check the
// hypothesis.

/// P1 is the arc with the parity of |P|.
std::string chordal_path_conclusion(const Graph& g, int ell, const ChordalPathRecord& rec, SearchBudget& budget);
std::string same_length_conclusion(const Graph& g, const VertexPath& p);
std::string odd_k4_conclusion(const Graph& g, int ell, const K4Subdivision& h);

/// The arc of rec.hole playing the role of P1 (same parity as the path).
const VertexPath& same_parity_arc(const ChordalPathRecord& rec);
const VertexPath& other_arc(const ChordalPathRecord& rec);

/// Runs the checks on one graph. Facts shared between checks (membership,
/// chromatic data, cuts) are computed once, on first use.
class LemmaChecker {
public:
    /// Keeps a reference to g.
    LemmaChecker(const Graph& g, SuiteConfig config);
    LemmaChecker(Graph&&, SuiteConfig) = delete;
    ~LemmaChecker();

    LemmaVerdict check(LemmaId id);
    LemmaVerdict check_L2_1();
    LemmaVerdict check_L2_2();
    LemmaVerdict check_L2_3();
    LemmaVerdict check_L2_4();
    LemmaVerdict check_L2_5();
    LemmaVerdict check_L2_6();
    LemmaVerdict check_theorem();

    /// Null when membership ran out of budget.
    nlohmann::json membership_json();

private:
    struct Facts;
    const CriticalityVerdict& criticality(int k);
    const Graph& g_;
    SuiteConfig config_;
    std::unique_ptr<Facts> facts_;
};

LemmaVerdict check_L2_1(const Graph& g, const SuiteConfig& config = {});
LemmaVerdict check_L2_2(const Graph& g, const SuiteConfig& config = {});
LemmaVerdict check_L2_3(const Graph& g, const SuiteConfig& config = {});
LemmaVerdict check_L2_4(const Graph& g, const SuiteConfig& config = {});
LemmaVerdict check_L2_5(const Graph& g, const SuiteConfig& config = {});
LemmaVerdict check_L2_6(const Graph& g, const SuiteConfig& config = {});
LemmaVerdict check_theorem(const Graph& g, const SuiteConfig& config = {});

/// Re-runs the single instance recorded in a violated verdict. True when the
/// hypothesis holds and the conclusion fails for it.
bool replay_violation(const Graph& g, const LemmaVerdict& v, const SuiteConfig& config = {});

struct GraphReport {
    std::string id;
    int n = 0;
    int m = 0;
    nlohmann::json gell;
    std::vector<LemmaVerdict> verdicts;
    double seconds = 0;
};

struct SuiteSummary {
    std::array<std::array<std::uint64_t, 4>, 7> status_counts{};  // [lemma][status]
    std::array<std::uint64_t, 7> instances{};
    std::uint64_t graphs = 0;

    void add(const GraphReport& r);
    std::uint64_t violations() const;
    std::uint64_t budget_hits() const;
};

nlohmann::json to_json(const LemmaVerdict& v);
nlohmann::json to_json(const GraphReport& r, bool timings);
nlohmann::json to_json(const SuiteSummary& s, const SuiteConfig& config);
nlohmann::json to_json(const SuiteConfig& config);

GraphReport check_graph(const CorpusEntry& entry, const SuiteConfig& config);

/// Pulls entries from `next` until it returns nullopt, checks them on
/// config.jobs threads and hands reports to `sink` in input order. One graph
/// failing never aborts the run; budget problems surface as statuses.
SuiteSummary run_suite(const std::function<std::optional<CorpusEntry>()>& next, const SuiteConfig& config,
                       const std::function<void(GraphReport&&)>& sink);

struct SuiteReport {
    std::string corpus;
    SuiteConfig config;
    std::vector<GraphReport> graphs;
    SuiteSummary summary;
    double seconds = 0;
};

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteConfig& config,
                      std::string corpus_name = "builtin");

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const SuiteReport& r);

}  // namespace oddhole
