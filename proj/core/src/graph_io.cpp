#include "oddhole/graph_io.hpp"

#include <istream>
#include <sstream>

#include "oddhole/errors.hpp"

namespace oddhole {

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

int graph6_value(char c) {
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126)
        throw MalformedInput("graph6: invalid character code " + std::to_string(v));
    return v - 63;
}

}  // namespace

std::optional<GraphFormat> parse_format_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "json") return GraphFormat::json;
    return std::nullopt;
}

std::string_view format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::graph6: return "graph6";
        case GraphFormat::dimacs: return "dimacs";
        case GraphFormat::json: return "json";
    }
    return "unknown";
}

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.starts_with(kGraph6Header)) line.remove_prefix(sizeof(kGraph6Header) - 1);
    if (line.empty()) throw MalformedInput("graph6: empty record");
    if (line.front() == ':' || line.front() == '&')
        throw MalformedInput("graph6: sparse6/digraph6 records are not supported");

    std::size_t pos = 0;
    long long n = 0;
    auto take = [&](int groups) {
        long long value = 0;
        for (int i = 0; i < groups; ++i) {
            if (pos >= line.size()) throw MalformedInput("graph6: truncated size header");
            value = (value << 6) | graph6_value(line[pos++]);
        }
        return value;
    };
    if (line[0] != '~') {
        n = take(1);
    } else if (line.size() > 1 && line[1] == '~') {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }
    if (n > 100000) throw MalformedInput("graph6: vertex count " + std::to_string(n) + " too large");

    const long long bit_count = n * (n - 1) / 2;
    const long long char_count = (bit_count + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != char_count)
        throw MalformedInput("graph6: expected " + std::to_string(char_count) +
                             " adjacency characters, found " + std::to_string(line.size() - pos));

    std::vector<Edge> edges;
    long long bit = 0;
    int i = 0;
    int j = 1;
    for (std::size_t c = pos; c < line.size(); ++c) {
        const int value = graph6_value(line[c]);
        for (int b = 5; b >= 0 && bit < bit_count; --b, ++bit) {
            if ((value >> b) & 1) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.num_vertices();
    std::string out;
    auto put = [&](long long value, int groups) {
        for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((value >> (6 * k)) & 63) + 63));
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out.push_back('~');
        put(n, 3);
    } else {
        out.append("~~");
        put(n, 6);
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    long long n = -1;
    long long m_declared = -1;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == 'c') continue;
        std::istringstream fields{std::string(line)};
        std::string tag;
        fields >> tag;
        auto fail = [&](const std::string& msg) {
            return MalformedInput("dimacs line " + std::to_string(line_no) + ": " + msg);
        };
        if (tag == "p") {
            std::string kind;
            if (n >= 0) throw fail("duplicate problem line");
            if (!(fields >> kind >> n >> m_declared) || (kind != "edge" && kind != "col") || n < 0 ||
                m_declared < 0)
                throw fail("expected 'p edge <n> <m>'");
        } else if (tag == "e") {
            long long u = 0;
            long long v = 0;
            if (n < 0) throw fail("edge before problem line");
            if (!(fields >> u >> v)) throw fail("expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n) throw fail("vertex out of range 1.." + std::to_string(n));
            if (u == v) throw fail("self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw fail("unknown record '" + tag + "'");
        }
    }
    if (n < 0) throw MalformedInput("dimacs: missing problem line");
    if (static_cast<long long>(edges.size()) != m_declared)
        throw MalformedInput("dimacs: header declares " + std::to_string(m_declared) + " edges, found " +
                             std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw MalformedInput("json graph: expected object with \"n\" and \"edges\"");
    const auto& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() < 0)
        throw MalformedInput("json graph: \"n\" must be a nonnegative integer");
    const auto& je = j.at("edges");
    if (!je.is_array()) throw MalformedInput("json graph: \"edges\" must be an array");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : je) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw MalformedInput("json graph: every edge must be a pair of integers");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edge_list(jn.get<int>(), pairs);
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

GraphReader::GraphReader(std::istream& in, std::optional<GraphFormat> format, std::string source_name)
    : in_(in), format_(format), source_(std::move(source_name)) {}

std::optional<ParsedGraph> GraphReader::next() {
    if (pending_pos_ < pending_.size()) return std::move(pending_[pending_pos_++]);
    if (started_ && format_ != GraphFormat::graph6) return std::nullopt;

    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (trim(line).empty()) continue;
        if (!started_) {
            started_ = true;
            if (!format_) {
                const auto t = trim(line);
                if (t.front() == '{' || t.front() == '[')
                    format_ = GraphFormat::json;
                else if (t == "c" || t.starts_with("c ") || t.starts_with("p "))
                    format_ = GraphFormat::dimacs;
                else
                    format_ = GraphFormat::graph6;
            }
            if (format_ != GraphFormat::graph6) {
                load_document(std::move(line));
                return next();
            }
        }
        if (trim(line) == kGraph6Header) continue;
        return next_graph6_line(std::move(line));
    }
    started_ = true;
    return std::nullopt;
}

std::optional<ParsedGraph> GraphReader::next_graph6_line(std::string line) {
    ParsedGraph pg;
    try {
        pg.graph = parse_graph6(line);
    } catch (const MalformedInput& e) {
        throw MalformedInput(source_ + ":" + std::to_string(line_no_) + ": " + e.what());
    }
    pg.id = source_ + ":" + std::to_string(line_no_);
    pg.line = line_no_;
    pg.labels.resize(static_cast<std::size_t>(pg.graph.num_vertices()));
    for (std::size_t v = 0; v < pg.labels.size(); ++v) pg.labels[v] = static_cast<long long>(v);
    return pg;
}

void GraphReader::load_document(std::string first_line) {
    std::ostringstream buf;
    buf << first_line << '\n' << in_.rdbuf();
    const std::string text = buf.str();
    const std::size_t first = line_no_;

    if (format_ == GraphFormat::dimacs) {
        ParsedGraph pg;
        try {
            pg.graph = parse_dimacs(text);
        } catch (const MalformedInput& e) {
            throw MalformedInput(source_ + ": " + e.what());
        }
        pg.id = source_;
        pg.line = first;
        for (int v = 0; v < pg.graph.num_vertices(); ++v) pg.labels.push_back(v + 1);
        pending_.push_back(std::move(pg));
        return;
    }

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedInput(source_ + ": json: " + e.what());
    }
    std::vector<nlohmann::json> items;
    if (doc.is_array())
        items.assign(doc.begin(), doc.end());
    else
        items.push_back(doc);
    for (std::size_t k = 0; k < items.size(); ++k) {
        ParsedGraph pg;
        try {
            pg.graph = graph_from_json(items[k]);
        } catch (const MalformedInput& e) {
            throw MalformedInput(source_ + ": item " + std::to_string(k) + ": " + e.what());
        }
        if (items[k].contains("id") && items[k]["id"].is_string())
            pg.id = items[k]["id"].get<std::string>();
        else
            pg.id = source_ + "#" + std::to_string(k);
        for (int v = 0; v < pg.graph.num_vertices(); ++v) pg.labels.push_back(v);
        pending_.push_back(std::move(pg));
    }
}

}  // namespace oddhole
