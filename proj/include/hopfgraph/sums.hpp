#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph_io.hpp"
#include "rational.hpp"
#include "universe.hpp"

namespace hopfgraph {

// Formal finite linear combination over a key type; zero terms are dropped.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const Key& k, const Rational& c = 1) { add(k, c); }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& r) {
    if (r == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= r;
    return *this;
  }
  void add_scaled(const LinearCombination& o, const Rational& r) {
    if (r == 0) return;
    for (const auto& [k, c] : o.terms_) add(k, c * r);
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational& r, LinearCombination a) { return a *= r; }
  friend LinearCombination operator*(LinearCombination a, const Rational& r) { return a *= r; }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Terms terms_;
};

using GraphSum = LinearCombination<CanonicalGraph>;
using GraphPair = std::pair<CanonicalGraph, CanonicalGraph>;
using TensorSum = LinearCombination<GraphPair>;

inline GraphSum as_sum(const Graph& g, const Rational& c = 1) { return GraphSum(canonicalize(g), c); }

inline TensorSum tensor(const CanonicalGraph& a, const CanonicalGraph& b, const Rational& c = 1) {
  return TensorSum({a, b}, c);
}

inline TensorSum swap_factors(const TensorSum& t) {
  TensorSum out;
  for (const auto& [k, c] : t) out.add({k.second, k.first}, c);
  return out;
}

enum class Grading { VertexCount, EdgeCount, ConnectedComponents };

inline std::string to_string(Grading g) {
  switch (g) {
    case Grading::VertexCount: return "vertices";
    case Grading::EdgeCount: return "edges";
    case Grading::ConnectedComponents: return "components";
  }
  return "?";
}

inline int grade(const CanonicalGraph& g, Grading grading) {
  switch (grading) {
    case Grading::VertexCount: return g.n_vertices();
    case Grading::EdgeCount: return g.n_edges();
    case Grading::ConnectedComponents: return component_count(g.graph());
  }
  throw InternalError("unknown grading");
}

inline GraphSum filter_by_grade(const GraphSum& x, Grading grading, int n) {
  GraphSum out;
  for (const auto& [g, c] : x)
    if (grade(g, grading) == n) out.add(g, c);
  return out;
}

// Σ c_γ d_γ; the first argument is read as a dual element.
inline Rational pairing(const GraphSum& f, const GraphSum& x) {
  Rational total = 0;
  const auto& small = f.size() <= x.size() ? f : x;
  const auto& large = f.size() <= x.size() ? x : f;
  for (const auto& [g, c] : small) {
    auto it = large.terms().find(g);
    if (it != large.terms().end()) total += c * it->second;
  }
  return total;
}

// ⟨f⊗h, t⟩ = Σ t(a,b) f(a) h(b).
inline Rational pairing(const GraphSum& f, const GraphSum& h, const TensorSum& t) {
  Rational total = 0;
  for (const auto& [k, c] : t) {
    Rational a = f.coefficient(k.first);
    if (a == 0) continue;
    Rational b = h.coefficient(k.second);
    if (b != 0) total += c * a * b;
  }
  return total;
}

inline Rational counit(const GraphSum& x) { return x.coefficient(CanonicalGraph()); }

inline GraphSum unit(const Rational& r) { return GraphSum(CanonicalGraph(), r); }

inline GraphSum zeta(const GraphUniverse& universe) {
  GraphSum out;
  for (const auto& g : universe.members) out.add(g, 1);
  return out;
}

// A linear functional known on a finite support. With a domain it is the
// truncation of a functional to that universe and evaluating outside the
// domain is an error; without one it vanishes off its support.
struct Functional {
  GraphSum values;
  std::optional<GraphUniverse> domain;

  Rational operator()(const CanonicalGraph& g) const {
    if (domain && !domain->admits(g))
      throw DomainError("functional truncation does not cover " + graph_name(g));
    return values.coefficient(g);
  }

  Rational operator()(const GraphSum& x) const {
    Rational total = 0;
    for (const auto& [g, c] : x) total += c * (*this)(g);
    return total;
  }
};

inline Functional zeta_functional(const GraphUniverse& universe) { return {zeta(universe), universe}; }

inline Functional dual_basis(const CanonicalGraph& g) { return {GraphSum(g), std::nullopt}; }

inline Functional counit_functional() { return dual_basis(CanonicalGraph()); }

// "1·edge + 2·cherry - 1/2·edge⊔edge"; the zero sum prints as "0".
inline std::string to_text(const GraphSum& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : x) {
    bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += to_short_string(negative ? Rational(-c) : c) + "·" + graph_name(g);
  }
  return out;
}

inline std::string to_text(const TensorSum& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : x) {
    bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += to_short_string(negative ? Rational(-c) : c) + "·" + graph_name(k.first) + "⊗" + graph_name(k.second);
  }
  return out;
}

}  // namespace hopfgraph
