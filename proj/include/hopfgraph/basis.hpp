#pragma once

#include <optional>
#include <string>
#include <vector>

#include "counting.hpp"

namespace hopfgraph {

// Sorted multiset of connected graphs; the empty monomial is the unit e.
using Monomial = std::vector<CanonicalGraph>;

struct ConnectedPolynomial {
  ProductKind product = ProductKind::EdgeQuasiShuffle;
  LinearCombination<Monomial> terms;
  friend bool operator==(const ConnectedPolynomial&, const ConnectedPolynomial&) = default;
};

inline Monomial component_monomial(const CanonicalGraph& g) {
  Monomial m;
  for (const auto& cls : connected_components(g.graph()))
    for (int i = 0; i < cls.multiplicity; ++i) m.push_back(cls.graph);
  std::sort(m.begin(), m.end());
  return m;
}

// "edge^2" style factors joined by "·"; the empty monomial prints as "e".
inline std::string to_text(const Monomial& m) {
  if (m.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += "·";
    out += graph_name(m[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::string to_text(const ConnectedPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms) {
    bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += to_short_string(negative ? Rational(-c) : c) + "·" + to_text(m);
  }
  return out;
}

// Expands a monomial as the product of its factors.
inline GraphSum evaluate(ProductKind kind, const Monomial& m) {
  GraphSum out = unit(1);
  for (const auto& f : m) out = product(kind, out, GraphSum(f));
  return out;
}

inline GraphSum evaluate(const ConnectedPolynomial& p) {
  GraphSum out;
  for (const auto& [m, c] : p.terms) out.add_scaled(evaluate(p.product, m), c);
  return out;
}

namespace detail {

inline void require_decomposition_domain(ProductKind kind, const CanonicalGraph& g) {
  if (needs_no_isolated(kind) && g.graph().has_isolated_vertices())
    throw DomainError("the " + to_string(kind) + " product is defined on graphs without isolated vertices");
}

inline MemoTable<LinearCombination<Monomial>>& decomposition_memo() {
  static MemoTable<LinearCombination<Monomial>> table;
  return table;
}

}  // namespace detail

// Writes g as a polynomial in connected graphs. With g = g₁ ⊔ g₂ (g₁ the
// first component), g₁·g₂ = c·g + (terms with fewer components), so
// g = (g₁·g₂ − rest)/c and the rest is decomposed recursively.
inline ConnectedPolynomial decompose_connected(const CanonicalGraph& g, ProductKind kind) {
  detail::require_decomposition_domain(kind, g);
  const auto& terms = detail::decomposition_memo().get_or_compute(to_string(kind) + ":" + g.code(), [&] {
    LinearCombination<Monomial> out;
    auto comps = component_monomial(g);
    if (comps.size() <= 1) {
      out.add(comps, 1);
      return out;
    }
    Monomial rest_factors(comps.begin() + 1, comps.end());
    Graph rest;
    for (const auto& f : rest_factors) rest = disjoint_union(rest, f.graph());
    auto first = comps.front();
    auto rest_class = canonicalize(rest);
    const GraphSum& prod = product(kind, first, rest_class);
    Rational lead = prod.coefficient(g);
    if (lead == 0) throw InternalError("product of the components of " + graph_name(g) + " does not contain it");
    // first · decompose(rest): rest is expanded in monomials, each multiplied by first.
    for (const auto& [m, c] : decompose_connected(rest_class, kind).terms) {
      Monomial joined = m;
      joined.push_back(first);
      std::sort(joined.begin(), joined.end());
      out.add(joined, c / lead);
    }
    int components = static_cast<int>(comps.size());
    for (const auto& [h, c] : prod) {
      if (h == g) continue;
      if (component_count(h.graph()) >= components)
        throw InternalError("correction term " + graph_name(h) + " does not have fewer components than " +
                            graph_name(g));
      out.add_scaled(decompose_connected(h, kind).terms, -c / lead);
    }
    return out;
  });
  return {kind, terms};
}

inline ConnectedPolynomial decompose_connected(const Graph& g, ProductKind kind) {
  return decompose_connected(canonicalize(g), kind);
}

// p_g with count(mode, g, Λ) = p_g evaluated at the counts of its connected
// factors, for every sample Λ.
inline ConnectedPolynomial counting_polynomial(const Graph& g, CountingMode mode) {
  detail::require_counting_domain(mode, g);
  return decompose_connected(g, character_product(mode));
}

inline Rational evaluate_counts(const ConnectedPolynomial& p, CountingMode mode, const Graph& sample) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms) {
    Rational term = c;
    for (const auto& f : m) term *= count(mode, f.graph(), sample);
    total += term;
  }
  return total;
}

enum class MatrixDirection { MonomialToGraph, GraphToMonomial };

// entries[i][j]: coordinate i of basis element j. Both the graph basis and the
// monomial basis are indexed by `basis`, the monomial of index j being the
// component multiset of basis[j].
struct BasisMatrix {
  std::vector<CanonicalGraph> basis;
  std::vector<std::vector<Rational>> entries;
  MatrixDirection direction = MatrixDirection::MonomialToGraph;
};

// e, edge, cherry, edge⊔edge, triangle, threeStar, threePath, cherry⊔edge,
// edge⊔edge⊔edge: the classes of at most three edges in a fixed order.
inline std::vector<CanonicalGraph> reference_basis_order() {
  std::vector<CanonicalGraph> out;
  for (const char* name : {"empty", "edge", "cherry"}) out.push_back(named(name));
  out.push_back(canonicalize(disjoint_union(named_graph("edge"), named_graph("edge"))));
  for (const char* name : {"triangle", "threeStar", "threePath"}) out.push_back(named(name));
  out.push_back(canonicalize(disjoint_union(named_graph("cherry"), named_graph("edge"))));
  Graph eee;
  for (int i = 0; i < 3; ++i) eee = disjoint_union(eee, named_graph("edge"));
  out.push_back(canonicalize(eee));
  return out;
}

namespace detail {

// Exact inverse by Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalError("change-of-basis matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

// Forward (monomials expanded in graphs) and inverse matrices over the
// classes admitted by the bound: graphs without isolated vertices for an edge
// bound, all graphs for a vertex bound. An explicit order must list exactly
// those classes.
inline std::pair<BasisMatrix, BasisMatrix> basis_matrix(ProductKind kind, BoundKind bound_kind, int bound,
                                                        std::optional<std::vector<CanonicalGraph>> order = {}) {
  bool no_isolated = bound_kind == BoundKind::MaxEdges;
  if (needs_no_isolated(kind) && !no_isolated)
    throw DomainError("the " + to_string(kind) + " product needs an edge bound (graphs without isolated vertices)");
  auto universe = enumerate_graphs(bound_kind, bound, no_isolated);
  std::vector<CanonicalGraph> basis = universe.members;
  if (order) {
    auto sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != basis) throw DomainError("basis order does not list exactly the classes within the bound");
    basis = *order;
  }
  std::size_t n = basis.size();
  std::map<CanonicalGraph, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);
  BasisMatrix forward{basis, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0)),
                      MatrixDirection::MonomialToGraph};
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [g, c] : evaluate(kind, component_monomial(basis[j]))) {
      auto it = index.find(g);
      if (it == index.end()) throw InternalError("product leaves the bounded basis at " + graph_name(g));
      forward.entries[it->second][j] = c;
    }
  }
  BasisMatrix inverse{basis, detail::invert(forward.entries), MatrixDirection::GraphToMonomial};
  return {std::move(forward), std::move(inverse)};
}

}  // namespace hopfgraph
