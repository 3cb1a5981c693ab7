#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace hopfgraph {

namespace detail {

inline void append_graph6_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

}  // namespace detail

// Packs x(i,j) for j = 1..n-1, i < j into 6-bit groups, high bit first.
inline std::string encode_graph6(int n, const std::vector<Mask>& adj) {
  std::string out;
  detail::append_graph6_size(out, n);
  int value = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | ((adj[j] >> i) & 1);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

inline std::string encode_graph6(const Graph& g) { return encode_graph6(g.n_vertices(), g.adjacency()); }

inline Graph decode_graph6(std::string_view text, int line = 1) {
  std::size_t pos = 0;
  if (text.substr(0, 10) == ">>graph6<<") pos = 10;
  auto byte_at = [&](std::size_t p) {
    if (p >= text.size()) throw ParseError("graph6 input truncated", line, static_cast<int>(p) + 1);
    int c = static_cast<unsigned char>(text[p]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", line, static_cast<int>(p) + 1);
    return c - 63;
  };
  int n = byte_at(pos);
  if (n == 63) {
    if (byte_at(pos + 1) == 63) throw ParseError("graph6 sizes above 258047 are not supported", line, static_cast<int>(pos) + 2);
    n = (byte_at(pos + 1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
    pos += 4;
  } else {
    pos += 1;
  }
  if (n > kMaxVertices) throw ResourceError("graph6 input has " + std::to_string(n) + " vertices, limit is 64");
  long long bits = static_cast<long long>(n) * (n - 1) / 2;
  std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes) {
    int col = static_cast<int>(std::min(text.size(), pos + bytes)) + 1;
    throw ParseError("graph6 body has wrong length", line, col);
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int value = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((value >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0) {
    int last = byte_at(pos + bytes - 1);
    if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", line, static_cast<int>(pos + bytes));
  }
  return Graph(n, std::move(edges));
}

}  // namespace hopfgraph
