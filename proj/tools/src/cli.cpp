#include "oddhole_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <nlohmann/json.hpp>

#include "oddhole/analysis.hpp"
#include "oddhole/errors.hpp"
#include "oddhole/generators.hpp"
#include "oddhole/graph_io.hpp"
#include "oddhole/lemmas.hpp"
#include "oddhole/serialize.hpp"
#include "oddhole/subdivision.hpp"

namespace oddhole::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct InputOptions {
    std::string path;  // empty or "-" for stdin
    std::string format;
};

struct CommonOptions {
    bool json = false;
    bool strict = false;
    bool no_timings = false;
    std::optional<std::uint64_t> budget;
};

std::optional<std::uint64_t> parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

int parse_int(const std::string& s, const char* what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw MalformedInput(std::string(what) + ": expected an integer, got '" + s + "'");
    return v;
}

std::uint64_t resolve_budget(const CommonOptions& o) {
    if (o.budget) return *o.budget;
    if (const char* env = std::getenv("ODDHOLE_BUDGET")) {
        const auto v = parse_u64(env);
        if (!v) throw MalformedInput(std::string("ODDHOLE_BUDGET: not a number: ") + env);
        return *v;
    }
    return SearchBudget::kDefaultLimit;
}

// Owns the input stream when reading from a file.
class Input {
public:
    Input(const InputOptions& opts, std::istream& stdin_stream) {
        std::optional<GraphFormat> format;
        if (!opts.format.empty()) {
            format = parse_format_name(opts.format);
            if (!format) throw MalformedInput("unknown format '" + opts.format + "'");
        }
        std::istream* source = &stdin_stream;
        std::string name = "stdin";
        if (!opts.path.empty() && opts.path != "-") {
            file_ = std::make_unique<std::ifstream>(opts.path);
            if (!*file_) throw MalformedInput("cannot open " + opts.path);
            source = file_.get();
            name = std::filesystem::path(opts.path).filename().string();
        }
        reader_ = std::make_unique<GraphReader>(*source, format, name);
    }

    std::optional<ParsedGraph> next() { return reader_->next(); }

private:
    std::unique_ptr<std::ifstream> file_;
    std::unique_ptr<GraphReader> reader_;
};

void add_input(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "Graph file (stdin when absent or '-')");
    cmd->add_option("--format", in.format, "graph6, dimacs or json (auto-detected by default)")
        ->check(CLI::IsMember({"graph6", "g6", "dimacs", "json"}));
}

void add_common(CLI::App* cmd, CommonOptions& c) {
    cmd->add_flag("--json", c.json, "Machine-readable output");
    cmd->add_flag("--strict", c.strict, "Exit 3 when any search runs out of budget");
    cmd->add_flag("--no-timings", c.no_timings, "Leave wall-clock fields out of JSON");
    cmd->add_option("--budget", c.budget, "Node expansions per search (default $ODDHOLE_BUDGET or 1e8)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string text_summary(const json& r) {
    std::string s = r["id"].get<std::string>() + ": n=" + std::to_string(r["n"].get<int>()) +
                    " m=" + std::to_string(r["m"].get<int>());
    s += " girth=" + (r["girth"].is_null() ? std::string("inf") : std::to_string(r["girth"].get<int>()));
    const json& gell = r["gell"];
    if (gell.is_null())
        s += " class=budget";
    else if (gell["member"].get<bool>())
        s += " ell=" + std::to_string(gell["ell"].get<int>());
    else
        s += " class=no(" + gell["failure"].get<std::string>() + ")";
    s += " chi=" + std::to_string(r["chromatic"]["chi"].get<int>());
    s += " critical(" + std::to_string(r["criticality"]["k"].get<int>()) +
         ")=" + yes_no(r["criticality"]["critical"].get<bool>());
    const json& c = r["cuts"];
    s += " K1=" + c["k1"].dump() + " K2=" + c["k2"].dump() + " P3=" + c["p3"].dump() +
         " 2-edge=" + c["two_edge"].dump() + " lambda=" + c["edge_connectivity"].dump();
    if (r.contains("odd_k4")) s += " oddK4=" + r["odd_k4"]["status"].get<std::string>();
    return s;
}

int cmd_analyze(const InputOptions& in_opts, const CommonOptions& common, int k, std::istream& in,
                std::ostream& out) {
    AnalysisOptions opts;
    opts.k = k;
    opts.budget = resolve_budget(common);
    opts.timings = !common.no_timings;
    Input input(in_opts, in);
    bool budget_hit = false;
    while (auto parsed = input.next()) {
        json r = analyze_graph(parsed->graph, parsed->id, opts);
        budget_hit |= !r["budget_exceeded"].empty();
        if (common.json) {
            r["schema_version"] = kSchemaVersion;
            out << r.dump() << '\n';
        } else {
            out << text_summary(r) << '\n';
        }
    }
    return budget_hit && common.strict ? kBudget : kOk;
}

std::vector<CorpusEntry> generate_family(const std::string& family, const std::vector<std::string>& raw,
                                         std::optional<std::uint64_t> seed, int attempts) {
    std::vector<int> p;
    for (const auto& s : raw) p.push_back(parse_int(s, family.c_str()));
    auto need = [&](std::size_t count, const char* usage) {
        if (p.size() != count) throw MalformedInput("usage: generate " + family + " " + usage);
    };
    auto params = [&] {
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        return s;
    };
    auto ident = [&] {
        std::string s = family;
        for (int x : p) s += "_" + std::to_string(x);
        return s;
    };
    if (family == "cycle") {
        need(1, "N");
        return {{ident(), cycle(p[0]), "cycle(" + params() + ")"}};
    }
    if (family == "theta") {
        need(3, "A B C");
        return {{ident(), theta(p[0], p[1], p[2]), "theta(" + params() + ")"}};
    }
    if (family == "wheel") {
        need(1, "RIM");
        return {{ident(), odd_wheel(p[0]), "odd_wheel(" + params() + ")"}};
    }
    if (family == "k4sub") {
        if (p.size() == 6) {
            std::array<int, 6> lengths{};
            std::copy(p.begin(), p.end(), lengths.begin());
            return {{ident(), k4_subdivision(lengths).graph, "k4_subdivision(" + params() + ")"}};
        }
        need(3, "P Q L  (or six arris lengths)");
        return {{ident(), k4_subdivision(p[0], p[1], p[2]).graph, "k4_subdivision(" + params() + ")"}};
    }
    if (family == "gp") {
        need(2, "N K");
        return {{ident(), generalized_petersen(p[0], p[1]), "generalized_petersen(" + params() + ")"}};
    }
    if (family == "petersen") {
        need(0, "");
        return {{"petersen", petersen(), "generalized_petersen(5,2)"}};
    }
    if (family == "grotzsch") {
        need(0, "");
        return {{"grotzsch", mycielski(cycle(5)), "mycielski(cycle(5))"}};
    }
    if (family == "mycielski-cycle") {
        need(1, "N");
        return {{ident(), mycielski(cycle(p[0])), "mycielski(cycle(" + params() + "))"}};
    }
    if (family == "random") {
        need(3, "N M GIRTH --seed S");
        if (!seed) throw MalformedInput("generate random: --seed is required");
        return {{ident() + "_s" + std::to_string(*seed), random_girth_graph(p[0], p[1], p[2], *seed, attempts),
                 "random_girth_graph(" + params() + ",seed=" + std::to_string(*seed) +
                     ",attempts=" + std::to_string(attempts) + ")"}};
    }
    if (family == "builtin") {
        need(0, "");
        return builtin_corpus();
    }
    throw MalformedInput("unknown family '" + family + "'");
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params, const std::string& out_path,
                 std::optional<std::uint64_t> seed, int attempts, std::ostream& out) {
    const auto entries = generate_family(family, params, seed, attempts);
    if (out_path.empty()) {
        for (const auto& e : entries) out << write_graph6(e.graph) << '\n';
    } else {
        write_corpus(out_path, entries);
    }
    return kOk;
}

std::vector<CorpusEntry> read_corpus(const InputOptions& in_opts, std::istream& in) {
    const bool from_file = !in_opts.path.empty() && in_opts.path != "-";
    const bool graph6ish = in_opts.format.empty() || in_opts.format == "graph6" || in_opts.format == "g6";
    if (from_file && graph6ish && std::filesystem::exists(manifest_path(in_opts.path)))
        return load_corpus(in_opts.path);
    std::vector<CorpusEntry> out;
    Input input(in_opts, in);
    while (auto parsed = input.next()) out.push_back({parsed->id, std::move(parsed->graph), parsed->id});
    return out;
}

int cmd_lemmas(const InputOptions& in_opts, bool builtin, const CommonOptions& common,
               const std::vector<std::string>& lemma_names, int jobs, int k, const std::string& out_path,
               std::istream& in, std::ostream& out, std::ostream& err) {
    SuiteConfig config;
    config.k = k;
    config.budget = resolve_budget(common);
    config.jobs = jobs;
    config.timings = !common.no_timings;
    for (const auto& name : lemma_names) {
        const auto id = parse_lemma_id(name);
        if (!id) throw MalformedInput("unknown lemma '" + name + "'");
        if (std::find(config.lemmas.begin(), config.lemmas.end(), *id) == config.lemmas.end())
            config.lemmas.push_back(*id);
    }
    if (builtin && !in_opts.path.empty()) throw MalformedInput("give either --builtin or an input file, not both");

    const std::vector<CorpusEntry> corpus = builtin ? builtin_corpus() : read_corpus(in_opts, in);
    const std::string name = builtin ? "builtin" : (in_opts.path.empty() ? "stdin" : in_opts.path);
    const SuiteReport report = run_suite(corpus, config, name);

    for (const auto& g : report.graphs)
        for (const auto& v : g.verdicts)
            if (v.status == LemmaStatus::violated)
                err << "VIOLATED " << to_string(v.lemma) << " on " << g.id << ": " << v.witness.dump() << '\n';

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw MalformedInput("cannot open " + out_path + " for writing");
        sink = &file;
    }
    if (common.json) {
        *sink << to_json(report).dump(2) << '\n';
    } else {
        for (const auto& g : report.graphs)
            for (const auto& v : g.verdicts)
                if (v.status == LemmaStatus::budget)
                    *sink << g.id << " " << to_string(v.lemma) << ": budget (" << v.note << ")\n";
        const json summary = to_json(report.summary, config);
        *sink << "graphs: " << report.summary.graphs << "\n";
        for (const auto& [lemma, row] : summary["lemmas"].items()) {
            *sink << lemma << ": holds=" << row["holds"] << " vacuous=" << row["vacuous"]
                  << " violated=" << row["violated"] << " budget=" << row["budget"]
                  << " instances=" << row["instances"];
            if (row["globally_vacuous"].get<bool>()) *sink << " (vacuous on every graph)";
            *sink << '\n';
        }
        *sink << "violations: " << report.summary.violations() << '\n';
    }
    if (report.summary.violations() > 0) return kViolation;
    if (common.strict && report.summary.budget_hits() > 0) return kBudget;
    return kOk;
}

int cmd_oddk4(const InputOptions& in_opts, const CommonOptions& common, bool certify, std::istream& in,
              std::ostream& out, std::ostream& err) {
    const std::uint64_t limit = resolve_budget(common);
    Input input(in_opts, in);
    bool budget_hit = false;
    bool bad_witness = false;
    while (auto parsed = input.next()) {
        SearchBudget budget(limit);
        const OddK4Search search = find_odd_k4_subdivision(parsed->graph, budget, !certify);
        if (certify && search.witness) {
            const std::string why = validate_k4_subdivision(parsed->graph, search.witness->subdivision);
            if (!why.empty() || !is_odd_k4_subdivision(parsed->graph, search.witness->subdivision).is_odd) {
                err << parsed->id << ": witness failed re-verification: " << (why.empty() ? "face check" : why)
                    << '\n';
                bad_witness = true;
            }
        }
        budget_hit |= search.status == OddK4Status::absent_budget;
        if (common.json) {
            json r{{"schema_version", kSchemaVersion},
                   {"id", parsed->id},
                   {"status", std::string(to_string(search.status))},
                   {"certified", certify},
                   {"expansions", search.expansions}};
            if (search.witness) r["witness"] = to_json(*search.witness);
            out << r.dump() << '\n';
        } else {
            out << parsed->id << ": " << to_string(search.status);
            if (search.witness) out << " face_lengths=" << json(search.witness->face_lengths).dump();
            out << '\n';
        }
    }
    if (bad_witness) return kViolation;
    return budget_hit && common.strict ? kBudget : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Odd holes, odd K4-subdivisions and structural checks for graphs of odd girth", "oddhole"};
    app.require_subcommand(1);

    InputOptions in_opts;
    CommonOptions common;
    int k = 4;
    int jobs = 1;
    bool builtin = false;
    bool certify = false;
    std::vector<std::string> lemma_names;
    std::string out_path;
    std::string family;
    std::vector<std::string> params;
    std::optional<std::uint64_t> seed;
    int attempts = 1000;

    auto* analyze = app.add_subcommand("analyze", "Report girth, class membership, colouring, cuts, odd K4");
    add_input(analyze, in_opts);
    add_common(analyze, common);
    analyze->add_option("--k", k, "Criticality parameter")->check(CLI::PositiveNumber);

    auto* generate = app.add_subcommand("generate", "Write a generated graph family as graph6");
    generate->add_option("family", family, "cycle, theta, wheel, k4sub, gp, petersen, grotzsch, "
                                           "mycielski-cycle, random, builtin")
        ->required();
    generate->add_option("params", params, "Family parameters");
    generate->add_option("--out", out_path, "Output file; a .manifest.json is written next to it");
    generate->add_option("--seed", seed, "Seed for the random family");
    generate->add_option("--attempts", attempts, "Attempts for the random family")->check(CLI::PositiveNumber);

    auto* lemmas = app.add_subcommand("lemmas", "Check every lemma over a corpus");
    add_input(lemmas, in_opts);
    add_common(lemmas, common);
    lemmas->add_flag("--builtin", builtin, "Use the built-in corpus");
    lemmas->add_option("--lemma", lemma_names, "Only these checks (L2.1..L2.6, THM)")->delimiter(',');
    lemmas->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    lemmas->add_option("--k", k, "Criticality parameter for the 2-edge-cut check")->check(CLI::PositiveNumber);
    lemmas->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* oddk4 = app.add_subcommand("oddk4", "Search each graph for an odd K4-subdivision");
    add_input(oddk4, in_opts);
    add_common(oddk4, common);
    oddk4->add_flag("--certify", certify, "Unpruned search with witness re-verification");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(in_opts, common, k, in, out);
        if (generate->parsed()) return cmd_generate(family, params, out_path, seed, attempts, out);
        if (lemmas->parsed())
            return cmd_lemmas(in_opts, builtin, common, lemma_names, jobs, k, out_path, in, out, err);
        if (oddk4->parsed()) return cmd_oddk4(in_opts, common, certify, in, out, err);
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ExhaustedAttempts& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace oddhole::cli
