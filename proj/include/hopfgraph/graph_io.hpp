#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "canonical.hpp"
#include "graph6.hpp"

namespace hopfgraph {

enum class GraphFormat { Graph6, EdgeList };

namespace detail {

// Edge list: "u v" per line, optional "n=<k>" header, '#' starts a comment.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_vertex = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t pos = 0;
    auto skip_space = [&] {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    auto read_int = [&](const char* what) {
      skip_space();
      std::size_t first = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      if (first == pos) throw ParseError(std::string("expected ") + what, line_no, static_cast<int>(first) + 1);
      if (pos - first > 6) throw ParseError("vertex index too large", line_no, static_cast<int>(first) + 1);
      return std::stoi(std::string(line.substr(first, pos - first)));
    };
    skip_space();
    if (pos < line.size()) {
      if (line[pos] == 'n') {
        ++pos;
        skip_space();
        if (pos >= line.size() || line[pos] != '=') throw ParseError("expected '=' after 'n'", line_no, static_cast<int>(pos) + 1);
        ++pos;
        if (declared >= 0) throw ParseError("duplicate vertex-count header", line_no, 1);
        declared = read_int("vertex count");
      } else {
        int u = read_int("vertex index");
        int v = read_int("second vertex index");
        if (u == v) throw ParseError("loop edge", line_no, 1);
        edges.push_back({u, v});
        max_vertex = std::max({max_vertex, u, v});
      }
      skip_space();
      if (pos < line.size()) throw ParseError("unexpected trailing text", line_no, static_cast<int>(pos) + 1);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  int n = std::max(declared, max_vertex + 1);
  if (declared >= 0 && max_vertex >= declared)
    throw ParseError("vertex " + std::to_string(max_vertex) + " exceeds declared count n=" + std::to_string(declared), 1, 1);
  try {
    return Graph(n, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

}  // namespace detail

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return detail::parse_edge_list(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.find('\n') != std::string_view::npos) throw ParseError("expected a single graph6 line", 2, 1);
  return decode_graph6(text);
}

inline std::string emit_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return encode_graph6(g);
  std::ostringstream out;
  out << "n=" << g.n_vertices() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline Graph named_graph(std::string_view name) {
  static const std::map<std::string, Graph, std::less<>> table = {
      {"empty", Graph()},
      {"e", Graph()},
      {"vertex", Graph(1)},
      {"edge", Graph(2, {{0, 1}})},
      {"cherry", Graph(3, {{0, 1}, {1, 2}})},
      {"triangle", complete_graph(3)},
      {"threeStar", Graph(4, {{0, 1}, {0, 2}, {0, 3}})},
      {"threePath", Graph(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"paw", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})},
      {"diamond", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
      {"K4", complete_graph(4)},
  };
  auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown graph name '" + std::string(name) + "'");
  return it->second;
}

inline std::optional<Graph> try_named_graph(std::string_view name) {
  try {
    return named_graph(name);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

inline CanonicalGraph named(std::string_view name) { return canonicalize(named_graph(name)); }

// Text name of a class: named graphs by name, disjoint unions of named
// graphs joined by ⊔, anything else as g6:<code>.
inline std::string graph_name(const CanonicalGraph& g) {
  static const std::map<std::string, std::string> names = [] {
    std::map<std::string, std::string> m;
    for (const char* n : {"vertex", "edge", "cherry", "triangle", "threeStar", "threePath", "C4", "paw", "diamond", "K4"})
      m.emplace(named(n).code(), n);
    return m;
  }();
  if (g.is_empty()) return "e";
  if (auto it = names.find(g.code()); it != names.end()) return it->second;
  std::string joined;
  for (const auto& cls : connected_components(g.graph())) {
    auto it = names.find(cls.graph.code());
    if (it == names.end()) return "g6:" + g.code();
    for (int i = 0; i < cls.multiplicity; ++i) joined += (joined.empty() ? "" : "⊔") + it->second;
  }
  return joined;
}

}  // namespace hopfgraph
