#pragma once

#include <string>

#include "bei/graph.hpp"

namespace bei {

// Text format: first line is n, then one "u v" pair per line (1-indexed).
// Parsers reject self-loops, out-of-range endpoints and duplicate edges with
// a line-numbered parse_error. Blank lines are ignored.
Graph parse_graph_text(const std::string& text);
std::string to_text(const Graph& g);

// JSON alternative: {"n": int, "edges": [[u, v], ...]}.
Graph parse_graph_json(const std::string& text);
std::string to_json_text(const Graph& g);

// Reads a file, dispatching on the first non-space byte ('{' means JSON).
Graph load_graph_file(const std::string& path);

}  // namespace bei
