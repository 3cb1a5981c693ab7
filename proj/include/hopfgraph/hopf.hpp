#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coproducts.hpp"
#include "memo.hpp"
#include "products.hpp"
#include "sums.hpp"
#include "universe.hpp"

namespace hopfgraph {

enum class Carrier { AllGraphs, NoIsolated };

inline std::string to_string(Carrier c) { return c == Carrier::AllGraphs ? "G" : "G~"; }

struct BialgebraConfig {
  ProductKind product = ProductKind::DisjointUnion;
  CoproductKind coproduct = CoproductKind::DividedPowers;
  Carrier carrier = Carrier::AllGraphs;
  Grading grading = Grading::VertexCount;
  friend bool operator==(const BialgebraConfig&, const BialgebraConfig&) = default;
};

inline std::string to_string(const BialgebraConfig& c) {
  return "(" + to_string(c.carrier) + ", " + to_string(c.product) + ", " + to_string(c.coproduct) + ", " +
         to_string(c.grading) + ")";
}

inline bool is_primitive(const GraphSum& x, CoproductKind kind) {
  TensorSum expected;
  CanonicalGraph e;
  for (const auto& [g, c] : x) {
    expected.add({g, e}, c);
    expected.add({e, g}, c);
  }
  return coproduct(kind, x) == expected;
}

// Gradings under which the configuration is a connected filtered Hopf algebra.
// Empty when it is not a Hopf algebra at all.
inline std::vector<Grading> hopf_gradings(ProductKind p, CoproductKind c, Carrier carrier) {
  using P = ProductKind;
  using C = CoproductKind;
  const auto V = Grading::VertexCount, E = Grading::EdgeCount;
  if (carrier == Carrier::AllGraphs) {
    if ((p == P::DisjointUnion && c == C::DividedPowers) || (p == P::DividedPowers && c == C::DisjointUnion) ||
        (p == P::DisjointUnion && c == C::VertexShuffle) || (p == P::VertexShuffle && c == C::DisjointUnion) ||
        (p == P::VertexQuasiShuffle && c == C::DisjointUnion))
      return {V};
    return {};
  }
  if ((p == P::DisjointUnion && c == C::DividedPowers) || (p == P::DividedPowers && c == C::DisjointUnion) ||
      (p == P::EdgeQuasiShuffle && c == C::DisjointUnion))
    return {E, V};
  if ((p == P::DisjointUnion && c == C::EdgeShuffle) || (p == P::EdgeShuffle && c == C::DisjointUnion)) return {E};
  if ((p == P::VertexShuffle && c == C::DisjointUnion) || (p == P::VertexQuasiShuffle && c == C::DisjointUnion))
    return {V};
  return {};
}

inline bool is_hopf(ProductKind p, CoproductKind c, Carrier carrier) { return !hopf_gradings(p, c, carrier).empty(); }

// Every Hopf configuration, each with its first filtering grading.
inline std::vector<BialgebraConfig> hopf_configurations() {
  using P = ProductKind;
  using C = CoproductKind;
  std::vector<BialgebraConfig> out;
  for (Carrier carrier : {Carrier::AllGraphs, Carrier::NoIsolated})
    for (P p : {P::DisjointUnion, P::DividedPowers, P::EdgeShuffle, P::EdgeQuasiShuffle, P::VertexShuffle,
                P::VertexQuasiShuffle})
      for (C c : {C::DisjointUnion, C::DividedPowers, C::EdgeShuffle, C::EdgeQuasiShuffle, C::VertexShuffle,
                  C::VertexQuasiShuffle})
        if (auto gs = hopf_gradings(p, c, carrier); !gs.empty()) out.push_back({p, c, carrier, gs.front()});
  return out;
}

inline bool carrier_admits(Carrier carrier, const CanonicalGraph& g) {
  return carrier == Carrier::AllGraphs || !g.graph().has_isolated_vertices();
}

// The universe of carrier elements whose grade is at most `bound`.
inline GraphUniverse graded_universe(Carrier carrier, Grading grading, int bound) {
  if (grading == Grading::EdgeCount) {
    if (carrier == Carrier::AllGraphs) throw DomainError("edge count does not grade graphs with isolated vertices");
    return enumerate_graphs(BoundKind::MaxEdges, bound, true);
  }
  if (grading == Grading::VertexCount) return enumerate_graphs(BoundKind::MaxVertices, bound, carrier == Carrier::NoIsolated);
  throw DomainError("component count has infinitely many graphs per degree");
}

namespace detail {

inline void require_hopf(const BialgebraConfig& config) {
  auto gs = hopf_gradings(config.product, config.coproduct, config.carrier);
  if (gs.empty())
    throw UnsupportedConfig(to_string(config) +
                            " is not a Hopf algebra; the antipode series does not terminate "
                            "(for (G~, union, qs): S(edge) = -edge + edge⊔edge - edge⊔edge⊔edge + ...)");
  if (std::find(gs.begin(), gs.end(), config.grading) == gs.end())
    throw UnsupportedConfig("the " + to_string(config.grading) + " grading does not filter " + to_string(config));
}

inline void require_carrier(const BialgebraConfig& config, const CanonicalGraph& g) {
  if (!carrier_admits(config.carrier, g))
    throw DomainError(graph_name(g) + " has isolated vertices, outside the carrier of " + to_string(config));
}

inline MemoTable<GraphSum>& antipode_memo() {
  static MemoTable<GraphSum> table;
  return table;
}

inline const GraphSum& antipode_rec(const BialgebraConfig& config, const CanonicalGraph& g, int depth, int limit) {
  if (depth > limit)
    throw InternalError("antipode recursion deeper than the grade of its argument in " + to_string(config));
  std::string key = to_string(config) + ":" + g.code();
  return antipode_memo().get_or_compute(key, [&] {
    if (g.is_empty()) return unit(1);
    GraphSum s(g, -1);
    for (const auto& [pair, c] : reduced_coproduct(config.coproduct, g)) {
      const GraphSum& left = antipode_rec(config, pair.first, depth + 1, limit);
      s.add_scaled(product(config.product, left, GraphSum(pair.second)), -c);
    }
    return s;
  });
}

}  // namespace detail

// S(x) = -x - Σ S(x')x'' over the reduced coproduct.
inline GraphSum antipode(const BialgebraConfig& config, const GraphSum& x) {
  detail::require_hopf(config);
  GraphSum out;
  for (const auto& [g, c] : x) {
    detail::require_carrier(config, g);
    out.add_scaled(detail::antipode_rec(config, g, 0, grade(g, config.grading)), c);
  }
  return out;
}

inline GraphSum antipode(const BialgebraConfig& config, const CanonicalGraph& g) { return antipode(config, GraphSum(g)); }

// f * g evaluated at x: Σ c f(a) g(b) over Δ(x).
inline Rational convolution_power(const Functional& f, const Functional& g, const BialgebraConfig& config,
                                  const GraphSum& x) {
  Rational total = 0;
  for (const auto& [pair, c] : coproduct(config.coproduct, x)) {
    Rational a = f(pair.first);
    if (a == 0) continue;
    total += c * a * g(pair.second);
  }
  return total;
}

using LinearMap = std::function<GraphSum(const CanonicalGraph&)>;

// F^{*n}(x) = m (F^{*(n-1)} ⊗ F) Δ(x), with F^{*0} = uε.
inline GraphSum endomorphism_power(const LinearMap& f, int n, const BialgebraConfig& config, const GraphSum& x) {
  std::map<std::pair<int, std::string>, GraphSum> memo;
  std::function<GraphSum(int, const CanonicalGraph&)> power = [&](int k, const CanonicalGraph& g) -> GraphSum {
    if (k == 0) return g.is_empty() ? unit(1) : GraphSum();
    auto key = std::make_pair(k, g.code());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    GraphSum out;
    for (const auto& [pair, c] : coproduct(config.coproduct, g)) {
      GraphSum right = f(pair.second);
      if (right.empty()) continue;
      GraphSum left = power(k - 1, pair.first);
      if (left.empty()) continue;
      out.add_scaled(product(config.product, left, right), c);
    }
    memo.emplace(key, out);
    return out;
  };
  GraphSum out;
  for (const auto& [g, c] : x) out.add_scaled(power(n, g), c);
  return out;
}

// uε − id; vanishes on e.
inline GraphSum counit_minus_identity(const CanonicalGraph& g) { return g.is_empty() ? GraphSum() : GraphSum(g, -1); }

// id − uε.
inline GraphSum identity_minus_counit(const CanonicalGraph& g) { return g.is_empty() ? GraphSum() : GraphSum(g); }

// Σ_n (uε − id)^{*n}(x), which stops once a power vanishes. The cutoff
// max(|V|,|E|)+1 bounds every filtering grading used here.
inline GraphSum antipode_series(const BialgebraConfig& config, const GraphSum& x) {
  GraphSum out;
  for (const auto& [g, c] : x) {
    int cutoff = std::max(g.n_vertices(), g.n_edges()) + 1;
    for (int n = 0;; ++n) {
      GraphSum term = endomorphism_power(counit_minus_identity, n, config, GraphSum(g));
      if (n >= 1 && term.empty()) break;
      if (n == cutoff)
        throw UnsupportedConfig("antipode series does not terminate on " + graph_name(g) + " in " + to_string(config));
      out.add_scaled(term, c);
    }
  }
  return out;
}

// m(S⊗id)Δ(x) and m(id⊗S)Δ(x).
inline std::pair<GraphSum, GraphSum> antipode_sides(const BialgebraConfig& config, const CanonicalGraph& g) {
  GraphSum left, right;
  for (const auto& [pair, c] : coproduct(config.coproduct, g)) {
    left.add_scaled(product(config.product, antipode(config, pair.first), GraphSum(pair.second)), c);
    right.add_scaled(product(config.product, GraphSum(pair.first), antipode(config, pair.second)), c);
  }
  return {left, right};
}

struct BialgebraVerdict {
  bool compatible = true;
  int pairs_checked = 0;
  // First failing pair and both sides of Δ(x·y) = Δ(x)·Δ(y).
  std::optional<GraphPair> counterexample;
  TensorSum lhs, rhs;
};

inline bool operations_defined(const BialgebraConfig& config) {
  if (config.carrier == Carrier::NoIsolated) return config.coproduct != CoproductKind::VertexShuffle &&
                                                    config.coproduct != CoproductKind::VertexQuasiShuffle &&
                                                    config.coproduct != CoproductKind::Overlap;
  return !needs_no_isolated(config.product) && !needs_no_isolated(config.coproduct);
}

// Basis pairs x, y ≠ e: |V(x)|+|V(y)| ≤ bound on G, |E(x)|+|E(y)| ≤ bound on G~.
inline std::vector<GraphPair> bounded_pairs(Carrier carrier, int bound) {
  auto universe = carrier == Carrier::AllGraphs ? enumerate_graphs(BoundKind::MaxVertices, bound, false)
                                                : enumerate_graphs(BoundKind::MaxEdges, bound, true);
  auto size = [&](const CanonicalGraph& g) { return carrier == Carrier::AllGraphs ? g.n_vertices() : g.n_edges(); };
  std::vector<GraphPair> out;
  for (const auto& x : universe.members) {
    if (x.is_empty()) continue;
    for (const auto& y : universe.members)
      if (!y.is_empty() && size(x) + size(y) <= bound) out.push_back({x, y});
  }
  return out;
}

inline BialgebraVerdict check_bialgebra(const BialgebraConfig& config, int bound) {
  if (!operations_defined(config)) throw DomainError(to_string(config) + " mixes operations outside their domains");
  BialgebraVerdict v;
  for (const auto& [x, y] : bounded_pairs(config.carrier, bound)) {
    ++v.pairs_checked;
    TensorSum lhs = coproduct(config.coproduct, product(config.product, x, y));
    TensorSum rhs = product(config.product, coproduct(config.coproduct, x), coproduct(config.coproduct, y));
    if (lhs != rhs) {
      v.compatible = false;
      v.counterexample = GraphPair{x, y};
      v.lhs = std::move(lhs);
      v.rhs = std::move(rhs);
      return v;
    }
  }
  return v;
}

enum class GradingBehavior { Graded, Filtered, NonFiltered };

inline std::string to_string(GradingBehavior b) {
  switch (b) {
    case GradingBehavior::Graded: return "graded";
    case GradingBehavior::Filtered: return "filtered";
    case GradingBehavior::NonFiltered: return "non-filtered";
  }
  return "?";
}

using Operation = std::variant<ProductKind, CoproductKind>;

inline std::string to_string(const Operation& op) {
  return std::visit([](auto k) { return to_string(k); }, op);
}

struct GradingVerdict {
  GradingBehavior behavior = GradingBehavior::Graded;
  // For a product: operands and offending term. For a coproduct: the graph
  // and the offending tensor factors.
  std::optional<std::pair<GraphPair, GraphPair>> witness;
  std::string witness_text;
};

inline GradingVerdict check_grading(const Operation& op, Grading grading, Carrier carrier, int bound) {
  GradingVerdict v;
  auto universe = graded_universe(carrier, grading, bound);
  auto note = [&](GradingBehavior b, GraphPair source, GraphPair term, std::string text) {
    if (b == GradingBehavior::NonFiltered && v.behavior != GradingBehavior::NonFiltered) {
      v.behavior = b;
      v.witness = std::make_pair(std::move(source), std::move(term));
      v.witness_text = std::move(text);
    } else if (b == GradingBehavior::Filtered && v.behavior == GradingBehavior::Graded) {
      v.behavior = b;
      v.witness = std::make_pair(std::move(source), std::move(term));
      v.witness_text = std::move(text);
    }
  };
  CanonicalGraph e;
  if (const auto* kind = std::get_if<CoproductKind>(&op)) {
    if (carrier == Carrier::AllGraphs && needs_no_isolated(*kind))
      throw DomainError("the " + to_string(*kind) + " coproduct is not defined on graphs with isolated vertices");
    for (const auto& g : universe.members) {
      int n = grade(g, grading);
      for (const auto& [pair, c] : coproduct(*kind, g)) {
        int s = grade(pair.first, grading) + grade(pair.second, grading);
        if (s == n) continue;
        std::string text = graph_name(pair.first) + "⊗" + graph_name(pair.second) + " in the coproduct of " + graph_name(g);
        note(s > n ? GradingBehavior::NonFiltered : GradingBehavior::Filtered, {g, e}, pair, text);
      }
    }
    return v;
  }
  ProductKind kind = std::get<ProductKind>(op);
  if (carrier == Carrier::AllGraphs && needs_no_isolated(kind))
    throw DomainError("the " + to_string(kind) + " product is not defined on graphs with isolated vertices");
  for (const auto& x : universe.members) {
    for (const auto& y : universe.members) {
      if (x.is_empty() || y.is_empty()) continue;
      int n = grade(x, grading) + grade(y, grading);
      if (n > bound) continue;
      for (const auto& [gamma, c] : product(kind, x, y)) {
        int s = grade(gamma, grading);
        if (s == n) continue;
        std::string text = graph_name(gamma) + " in the product of " + graph_name(x) + " and " + graph_name(y);
        note(s > n ? GradingBehavior::NonFiltered : GradingBehavior::Filtered, {x, y}, {gamma, e}, text);
      }
    }
  }
  return v;
}

}  // namespace hopfgraph
