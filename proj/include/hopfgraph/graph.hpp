#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace hopfgraph {

// Adjacency rows and vertex subsets are 64-bit masks, as are edge subsets
// of graphs with at most 64 edges.
inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Mask low_bits(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n_vertices, std::vector<Edge> edges = {}) : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw DomainError("negative vertex count");
    if (n_ > kMaxVertices) throw ResourceError("graph has more than 64 vertices");
    for (auto& e : edges_) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n_) throw DomainError("edge endpoint out of range");
      if (e.u == e.v) throw DomainError("loops are not allowed");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw DomainError("duplicate edge");
  }

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  std::vector<Mask> adjacency() const {
    std::vector<Mask> adj(n_, 0);
    for (const auto& e : edges_) {
      adj[e.u] |= bit(e.v);
      adj[e.v] |= bit(e.u);
    }
    return adj;
  }

  // Vertices that are an endpoint of some edge.
  Mask covered_vertices() const {
    Mask m = 0;
    for (const auto& e : edges_) m |= bit(e.u) | bit(e.v);
    return m;
  }

  bool has_isolated_vertices() const { return popcount(covered_vertices()) != n_; }

  std::vector<int> degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& e : edges_) {
      ++d[e.u];
      ++d[e.v];
    }
    return d;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Vertex sets of the connected components, ordered by smallest vertex.
inline std::vector<Mask> component_masks(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<Mask> out;
  Mask seen = 0;
  for (int v = 0; v < g.n_vertices(); ++v) {
    if (seen & bit(v)) continue;
    Mask comp = bit(v), frontier = bit(v);
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

inline int component_count(const Graph& g) { return static_cast<int>(component_masks(g).size()); }

// The empty graph has no components and is therefore not connected.
inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

inline Graph induced_subgraph_mask(const Graph& g, Mask vertices) {
  if (g.n_vertices() < 64 && (vertices >> g.n_vertices()) != 0) throw DomainError("vertex index out of range");
  int index[kMaxVertices];
  int k = 0;
  for (int v = 0; v < g.n_vertices(); ++v)
    if (vertices & bit(v)) index[v] = k++;
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if ((vertices & bit(e.u)) && (vertices & bit(e.v))) edges.push_back({index[e.u], index[e.v]});
  return Graph(k, std::move(edges));
}

inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  Mask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.n_vertices()) throw DomainError("vertex index out of range");
    m |= bit(v);
  }
  return induced_subgraph_mask(g, m);
}

// Edge subsets are masks over positions in g.edges().
inline Graph restricted_subgraph_mask(const Graph& g, Mask edge_subset) {
  if (g.n_edges() > 64) throw ResourceError("edge masks cover at most 64 edges");
  if (g.n_edges() < 64 && (edge_subset >> g.n_edges()) != 0) throw DomainError("edge index out of range");
  const auto& all = g.edges();
  Mask covered = 0;
  for (Mask a = edge_subset; a; a &= a - 1) {
    const Edge& e = all[std::countr_zero(a)];
    covered |= bit(e.u) | bit(e.v);
  }
  int index[kMaxVertices];
  int k = 0;
  for (int v = 0; v < g.n_vertices(); ++v)
    if (covered & bit(v)) index[v] = k++;
  std::vector<Edge> edges;
  edges.reserve(popcount(edge_subset));
  for (Mask a = edge_subset; a; a &= a - 1) {
    const Edge& e = all[std::countr_zero(a)];
    edges.push_back({index[e.u], index[e.v]});
  }
  return Graph(k, std::move(edges));
}

inline Graph restricted_subgraph(const Graph& g, std::span<const Edge> subset) {
  Mask m = 0;
  const auto& all = g.edges();
  for (Edge e : subset) {
    if (e.u > e.v) std::swap(e.u, e.v);
    auto it = std::lower_bound(all.begin(), all.end(), e);
    if (it == all.end() || *it != e)
      throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
    m |= bit(static_cast<int>(it - all.begin()));
  }
  return restricted_subgraph_mask(g, m);
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  int shift = g.n_vertices();
  for (const auto& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g.n_vertices() + h.n_vertices(), std::move(edges));
}

// Applies a vertex permutation: vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.n_vertices(), std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph edgeless_graph(int n) { return Graph(n); }

}  // namespace hopfgraph
