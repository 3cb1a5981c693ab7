#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"
#include "rational.hpp"

namespace hopfgraph {

// Representative of an isomorphism class. Equality and hashing use the
// graph6 code of the canonical labeling.
class CanonicalGraph {
 public:
  CanonicalGraph() : code_(encode_graph6(graph_)) {}

  const Graph& graph() const { return graph_; }
  const std::string& code() const { return code_; }
  int n_vertices() const { return graph_.n_vertices(); }
  int n_edges() const { return graph_.n_edges(); }
  bool is_empty() const { return graph_.n_vertices() == 0; }

  friend bool operator==(const CanonicalGraph& a, const CanonicalGraph& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const CanonicalGraph& a, const CanonicalGraph& b) {
    if (auto c = a.n_edges() <=> b.n_edges(); c != 0) return c;
    if (auto c = a.n_vertices() <=> b.n_vertices(); c != 0) return c;
    return a.code_.compare(b.code_) <=> 0;
  }

 private:
  friend CanonicalGraph canonicalize(const Graph& g);
  CanonicalGraph(Graph g, std::string code) : graph_(std::move(g)), code_(std::move(code)) {}

  Graph graph_;
  std::string code_;
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

// Local view of one connected component; vertices are 0..k-1.
struct Component {
  int k = 0;
  std::vector<Mask> adj;
};

inline bool twins(const std::vector<Mask>& adj, int u, int v) {
  return (adj[u] & ~bit(v)) == (adj[v] & ~bit(u));
}

// Iterated refinement: split each cell by neighbour counts into every cell.
// Split order depends only on the counts, so it commutes with relabeling.
inline void refine(const std::vector<Mask>& adj, Cells& cells) {
  while (true) {
    std::vector<Mask> cell_masks;
    cell_masks.reserve(cells.size());
    for (const auto& c : cells) {
      Mask m = 0;
      for (int v : c) m |= bit(v);
      cell_masks.push_back(m);
    }
    Cells next;
    next.reserve(cells.size() * 2);
    for (const auto& c : cells) {
      if (c.size() == 1) {
        next.push_back(c);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(c.size());
      for (int v : c) {
        std::vector<int> key(cell_masks.size());
        for (std::size_t j = 0; j < cell_masks.size(); ++j) key[j] = popcount(adj[v] & cell_masks[j]);
        keyed.emplace_back(std::move(key), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
          std::vector<int> part;
          for (std::size_t t = start; t < i; ++t) part.push_back(keyed[t].second);
          next.push_back(std::move(part));
          start = i;
        }
      }
    }
    bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

inline std::string leaf_code(const std::vector<Mask>& adj, const Cells& cells, std::vector<int>& order) {
  int k = static_cast<int>(cells.size());
  std::vector<int> label(k);
  for (int p = 0; p < k; ++p) label[cells[p][0]] = p;
  std::vector<Mask> relabeled(k, 0);
  for (int v = 0; v < k; ++v)
    for (Mask m = adj[v]; m; m &= m - 1) relabeled[label[v]] |= bit(label[std::countr_zero(m)]);
  order.assign(k, 0);
  for (int p = 0; p < k; ++p) order[p] = cells[p][0];
  return encode_graph6(k, relabeled);
}

inline void search(const std::vector<Mask>& adj, Cells cells, std::string& best, std::vector<int>& best_order) {
  refine(adj, cells);
  std::size_t target = cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1) {
      target = i;
      break;
    }
  }
  if (target == cells.size()) {
    std::vector<int> order;
    std::string code = leaf_code(adj, cells, order);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_order = std::move(order);
    }
    return;
  }
  const auto& cell = cells[target];
  std::vector<int> reps;
  for (int v : cell) {
    bool covered = false;
    for (int r : reps) {
      if (twins(adj, r, v)) {
        covered = true;
        break;
      }
    }
    if (!covered) reps.push_back(v);
  }
  for (int v : reps) {
    Cells child;
    child.reserve(cells.size() + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != target) {
        child.push_back(cells[i]);
        continue;
      }
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[i])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
    }
    search(adj, std::move(child), best, best_order);
  }
}

// Returns (code, order) where order[p] is the local vertex placed at position p.
inline std::pair<std::string, std::vector<int>> canonical_component(const Component& c) {
  Cells cells(1);
  for (int v = 0; v < c.k; ++v) cells[0].push_back(v);
  std::string best;
  std::vector<int> order;
  if (c.k == 0) return {encode_graph6(Graph()), {}};
  search(c.adj, std::move(cells), best, order);
  return {best, order};
}

inline std::vector<std::pair<Component, std::vector<int>>> split_components(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<std::pair<Component, std::vector<int>>> out;
  for (Mask comp : component_masks(g)) {
    std::vector<int> vertices;
    int local[kMaxVertices];
    for (Mask m = comp; m; m &= m - 1) {
      local[std::countr_zero(m)] = static_cast<int>(vertices.size());
      vertices.push_back(std::countr_zero(m));
    }
    Component c;
    c.k = static_cast<int>(vertices.size());
    c.adj.assign(c.k, 0);
    for (int i = 0; i < c.k; ++i)
      for (Mask m = adj[vertices[i]]; m; m &= m - 1) c.adj[i] |= bit(local[std::countr_zero(m)]);
    out.emplace_back(std::move(c), std::move(vertices));
  }
  return out;
}

}  // namespace detail

// Components are labeled canonically one by one, then laid out in increasing
// (size, code) order.
inline CanonicalGraph canonicalize(const Graph& g) {
  struct Piece {
    int k;
    std::string code;
    std::vector<int> vertices;  // original vertex ids in canonical order
  };
  std::vector<Piece> pieces;
  for (auto& [comp, vertices] : detail::split_components(g)) {
    auto [code, order] = detail::canonical_component(comp);
    Piece p{comp.k, std::move(code), {}};
    for (int local : order) p.vertices.push_back(vertices[local]);
    pieces.push_back(std::move(p));
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.code < b.code;
  });
  std::vector<int> perm(g.n_vertices());
  int next = 0;
  for (const auto& p : pieces)
    for (int v : p.vertices) perm[v] = next++;
  Graph canon = relabel(g, perm);
  std::string code = encode_graph6(canon);
  return CanonicalGraph(std::move(canon), std::move(code));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges()) return false;
  return canonicalize(a) == canonicalize(b);
}

struct ComponentClass {
  CanonicalGraph graph;
  int multiplicity = 0;
  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

// Isomorphism classes of the connected components with multiplicities,
// in CanonicalGraph order.
inline std::vector<ComponentClass> connected_components(const Graph& g) {
  std::vector<CanonicalGraph> comps;
  for (Mask m : component_masks(g)) comps.push_back(canonicalize(induced_subgraph_mask(g, m)));
  std::sort(comps.begin(), comps.end());
  std::vector<ComponentClass> out;
  for (auto& c : comps) {
    if (!out.empty() && out.back().graph == c)
      ++out.back().multiplicity;
    else
      out.push_back({std::move(c), 1});
  }
  return out;
}

namespace detail {

// Twin classes are permuted freely by automorphisms; what remains is a
// backtracking count over the twin quotient, where a class may only map to a
// class of the same size and the same internal type (clique or independent).
inline Integer connected_automorphism_count(const Component& c) {
  const auto& adj = c.adj;
  std::vector<int> class_of(c.k, -1);
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < c.k; ++v) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (twins(adj, classes[i][0], v)) {
        class_of[v] = static_cast<int>(i);
        classes[i].push_back(v);
        break;
      }
    }
    if (class_of[v] < 0) {
      class_of[v] = static_cast<int>(classes.size());
      classes.push_back({v});
    }
  }
  Integer result = 1;
  int q = static_cast<int>(classes.size());
  std::vector<Mask> qadj(q, 0);
  std::vector<std::pair<int, int>> label(q);
  for (int i = 0; i < q; ++i) {
    result *= factorial(static_cast<int>(classes[i].size()));
    int rep = classes[i][0];
    bool clique = classes[i].size() > 1 && (adj[rep] & bit(classes[i][1]));
    label[i] = {static_cast<int>(classes[i].size()), clique ? 1 : 0};
    for (int j = 0; j < q; ++j)
      if (j != i && (adj[rep] & bit(classes[j][0]))) qadj[i] |= bit(j);
  }
  std::vector<int> image(q, -1);
  Mask used = 0;
  unsigned long long count = 0;
  std::function<void(int)> extend = [&](int i) {
    if (i == q) {
      ++count;
      return;
    }
    for (int t = 0; t < q; ++t) {
      if ((used & bit(t)) || label[t] != label[i] || popcount(qadj[t]) != popcount(qadj[i])) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = ((qadj[i] >> j) & 1) == ((qadj[t] >> image[j]) & 1);
      if (!ok) continue;
      image[i] = t;
      used |= bit(t);
      extend(i + 1);
      used &= ~bit(t);
    }
  };
  extend(0);
  return result * count;
}

}  // namespace detail

inline Integer automorphism_count(const Graph& g) {
  Integer result = 1;
  for (const auto& cls : connected_components(g)) {
    auto comps = detail::split_components(cls.graph.graph());
    Integer a = detail::connected_automorphism_count(comps.front().first);
    for (int i = 0; i < cls.multiplicity; ++i) result *= a;
    result *= factorial(cls.multiplicity);
  }
  return result;
}

inline Integer automorphism_count(const CanonicalGraph& g) { return automorphism_count(g.graph()); }

}  // namespace hopfgraph

template <>
struct std::hash<hopfgraph::CanonicalGraph> {
  std::size_t operator()(const hopfgraph::CanonicalGraph& g) const noexcept {
    return std::hash<std::string>{}(g.code());
  }
};
