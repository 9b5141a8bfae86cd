#include "bded/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "bded/errors.hpp"

namespace bded {

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  EdgeSet edges;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail("duplicate header");
      std::string format;
      if (!(ss >> format >> n >> m) || format != "bded") fail("expected 'p bded <n> <m>'");
      if (n < 0 || m < 0) fail("negative counts");
      have_header = true;
      edges.reserve(static_cast<size_t>(m));
      continue;
    }
    if (tag == "e") {
      if (!have_header) fail("edge before header");
      long long u = 0, v = 0;
      if (!(ss >> u >> v)) fail("expected 'e <u> <v>'");
      std::string extra;
      if (ss >> extra) fail("trailing tokens on edge line");
      if (!(1 <= u && u < v && v <= n)) fail("edge endpoints must satisfy 1 <= u < v <= n");
      edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
      continue;
    }
    fail("unknown line tag '" + tag + "'");
  }
  ++line_no;
  if (!have_header) fail("missing 'p bded' header");
  if (static_cast<long long>(edges.size()) != m) fail("edge count does not match header");
  try {
    return Graph(n, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p bded " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << format_graph(g);
}

}  // namespace bded
