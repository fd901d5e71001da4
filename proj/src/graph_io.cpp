#include "bei/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bei/errors.hpp"
#include "json.hpp"

namespace bei {

namespace {

void check_edge(int u, int v, int n, int line, std::set<std::pair<int, int>>& seen) {
    if (u == v) throw parse_error(line, "self-loop at vertex " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n)
        throw parse_error(line, "edge endpoint out of range 1.." + std::to_string(n) + ": {" +
                                    std::to_string(u) + "," + std::to_string(v) + "}");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
        throw parse_error(line, "duplicate edge {" + std::to_string(key.first) + "," +
                                    std::to_string(key.second) + "}");
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string linebuf;
    int line = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, linebuf)) {
        ++line;
        std::istringstream ls(linebuf);
        if (n < 0) {
            if (!(ls >> n)) {
                n = -1;
                std::istringstream probe(linebuf);
                std::string tok;
                if (probe >> tok) throw parse_error(line, "expected vertex count");
                continue;  // leading blank line
            }
            if (n < 1) throw parse_error(line, "vertex count must be positive");
            std::string extra;
            if (ls >> extra) throw parse_error(line, "unexpected token after vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u)) {
            std::istringstream probe(linebuf);
            std::string tok;
            if (probe >> tok) throw parse_error(line, "expected edge 'u v'");
            continue;  // blank line
        }
        if (!(ls >> v)) throw parse_error(line, "expected second endpoint");
        std::string extra;
        if (ls >> extra) throw parse_error(line, "unexpected token after edge");
        check_edge(u, v, n, line, seen);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw parse_error(0, "empty graph file");
    return Graph(n, std::move(edges));
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw parse_error(0, "expected object with integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 1) throw parse_error(0, "vertex count must be positive");
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw parse_error(0, "'edges' must be an array");
        int idx = 0;
        for (const auto& e : j["edges"]) {
            ++idx;
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw parse_error(idx, "edge must be a pair [u, v]");
            int u = e[0].get<int>(), v = e[1].get<int>();
            check_edge(u, v, n, idx, seen);
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

std::string to_json_text(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

}  // namespace bei
