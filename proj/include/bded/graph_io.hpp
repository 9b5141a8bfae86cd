#pragma once

#include <iosfwd>
#include <string>

#include "bded/graph.hpp"

namespace bded {

/// Text format: header `p bded <n> <m>`, then exactly m lines `e <u> <v>`
/// with 1 <= u < v <= n. Blank lines and `c ...` comments are ignored.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);

std::string format_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace bded
