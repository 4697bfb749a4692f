#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddhole/graph.hpp"

namespace oddhole {

enum class GraphFormat { graph6, dimacs, json };

std::optional<GraphFormat> parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat f);

/// graph6: N(n) size header, then the upper triangle column by column in
/// 6-bit groups offset by 63. A leading ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// DIMACS edge format: "p edge n m" then "e u v" lines with 1-based ids.
Graph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// One graph read from an input stream.
struct ParsedGraph {
    Graph graph;
    std::string id;
    /// Original label of each dense vertex id (1-based for DIMACS, identity otherwise).
    std::vector<long long> labels;
    std::size_t line = 0;  // 1-based source line, 0 when not line-oriented
};

/// Streams graphs out of a text source. graph6 input is consumed one line at
/// a time; DIMACS and JSON documents are read whole. Errors are reported as
/// MalformedInput naming the source line.
class GraphReader {
public:
    GraphReader(std::istream& in, std::optional<GraphFormat> format, std::string source_name);

    /// Next graph, or nullopt at end of input.
    std::optional<ParsedGraph> next();

    std::optional<GraphFormat> format() const { return format_; }

private:
    std::optional<ParsedGraph> next_graph6_line(std::string line);
    void load_document(std::string first_line);

    std::istream& in_;
    std::optional<GraphFormat> format_;
    std::string source_;
    std::size_t line_no_ = 0;
    bool started_ = false;
    std::vector<ParsedGraph> pending_;  // for whole-document formats
    std::size_t pending_pos_ = 0;
};

}  // namespace oddhole
