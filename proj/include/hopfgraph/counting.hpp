#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>

#include "hopf.hpp"
#include "morphisms.hpp"

namespace hopfgraph {

enum class CountingMode { EdgeRestricted, VertexInduced, Homomorphism, HomomorphismDP };

inline std::string to_string(CountingMode m) {
  switch (m) {
    case CountingMode::EdgeRestricted: return "ei";
    case CountingMode::VertexInduced: return "vi";
    case CountingMode::Homomorphism: return "hom";
    case CountingMode::HomomorphismDP: return "homdp";
  }
  return "?";
}

// The product with respect to which the mode's counts form a character.
inline ProductKind character_product(CountingMode m) {
  switch (m) {
    case CountingMode::EdgeRestricted: return ProductKind::EdgeQuasiShuffle;
    case CountingMode::VertexInduced: return ProductKind::VertexQuasiShuffle;
    case CountingMode::Homomorphism: return ProductKind::DisjointUnion;
    case CountingMode::HomomorphismDP: return ProductKind::DividedPowers;
  }
  throw InternalError("unknown counting mode");
}

// The coproduct on patterns that splits counts over a disjoint union of samples.
inline CoproductKind chen_coproduct(CountingMode m) {
  return m == CountingMode::Homomorphism ? CoproductKind::DividedPowers : CoproductKind::DisjointUnion;
}

namespace detail {

inline constexpr long long kMaxSubsets = 1LL << 22;

// Visits every subset of {0..k-1} with at most max_size elements.
template <class F>
void for_each_small_subset(int k, int max_size, F&& f) {
  if (k > 63) throw ResourceError("subset enumeration covers at most 63 elements");
  max_size = std::min(max_size, k);
  long long total = 0;
  for (int s = 0; s <= max_size; ++s) {
    Integer b = binomial(k, s);
    if (b > kMaxSubsets) throw ResourceError("more than 2^22 subsets to enumerate");
    total += b.convert_to<long long>();
    if (total > kMaxSubsets) throw ResourceError("more than 2^22 subsets to enumerate");
  }
  for (int s = 0; s <= max_size; ++s) {
    if (s == 0) {
      f(Mask{0});
      continue;
    }
    Mask m = low_bits(s), limit = bit(k);
    while (m < limit) {
      f(m);
      Mask c = m & -m, r = m + c;  // next subset of the same size
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
}

inline void require_counting_domain(CountingMode mode, const Graph& pattern) {
  if (mode == CountingMode::EdgeRestricted && pattern.has_isolated_vertices())
    throw DomainError("edge-restricted counting needs a pattern without isolated vertices");
}

}  // namespace detail

inline Rational count(CountingMode mode, const Graph& pattern, const Graph& sample) {
  detail::require_counting_domain(mode, pattern);
  switch (mode) {
    case CountingMode::EdgeRestricted: {
      if (pattern.n_edges() > sample.n_edges()) return 0;
      auto target = canonicalize(pattern);
      Integer total = 0;
      detail::for_each_small_subset(sample.n_edges(), pattern.n_edges(), [&](Mask a) {
        if (popcount(a) != pattern.n_edges()) return;
        if (canonicalize(restricted_subgraph_mask(sample, a)) == target) ++total;
      });
      return Rational(total);
    }
    case CountingMode::VertexInduced: {
      if (pattern.n_vertices() > sample.n_vertices()) return 0;
      auto target = canonicalize(pattern);
      Integer total = 0;
      detail::for_each_small_subset(sample.n_vertices(), pattern.n_vertices(), [&](Mask u) {
        if (popcount(u) != pattern.n_vertices()) return;
        Graph sub = induced_subgraph_mask(sample, u);
        if (sub.n_edges() == pattern.n_edges() && canonicalize(sub) == target) ++total;
      });
      return Rational(total);
    }
    case CountingMode::Homomorphism:
      return Rational(count_morphisms(MorphismClass::Hom, pattern, sample));
    case CountingMode::HomomorphismDP:
      return Rational(count_morphisms(MorphismClass::Hom, pattern, sample), automorphism_count(pattern));
  }
  throw InternalError("unknown counting mode");
}

inline Rational count(CountingMode mode, const CanonicalGraph& pattern, const CanonicalGraph& sample) {
  return count(mode, pattern.graph(), sample.graph());
}

// Patterns of grade at most `bound` in the given grading.
struct Truncation {
  Grading grading = Grading::EdgeCount;
  int bound = 0;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

// Pattern carrier of a mode under a truncation: edge-restricted counting and
// edge-truncated homomorphism counting live on graphs without isolated vertices.
inline Carrier pattern_carrier(CountingMode mode, const Truncation& t) {
  if (mode == CountingMode::EdgeRestricted) return Carrier::NoIsolated;
  if ((mode == CountingMode::Homomorphism || mode == CountingMode::HomomorphismDP) && t.grading == Grading::EdgeCount)
    return Carrier::NoIsolated;
  return Carrier::AllGraphs;
}

// The functional τ ↦ count(mode, τ, sample) on all patterns within the
// truncation. Patterns absent from `terms` count zero. `complete` means no
// pattern beyond the truncation has a nonzero count.
struct Signature {
  CountingMode mode;
  CanonicalGraph sample;
  Truncation truncation;
  GraphSum terms;
  bool complete = false;

  bool covers(const CanonicalGraph& g) const {
    if (!carrier_admits(pattern_carrier(mode, truncation), g)) return false;
    return complete || grade(g, truncation.grading) <= truncation.bound;
  }

  Rational operator()(const CanonicalGraph& g) const {
    if (!covers(g))
      throw DomainError("the " + to_string(mode) + " signature of " + graph_name(sample) + " truncated at " +
                        to_string(truncation.grading) + " ≤ " + std::to_string(truncation.bound) + " does not cover " +
                        graph_name(g));
    return terms.coefficient(g);
  }

  Rational operator()(const GraphSum& x) const {
    Rational total = 0;
    for (const auto& [g, c] : x) total += c * (*this)(g);
    return total;
  }

  // ⟨this ⊗ other, t⟩
  Rational operator()(const Signature& other, const TensorSum& t) const {
    Rational total = 0;
    for (const auto& [k, c] : t) total += c * (*this)(k.first) * other(k.second);
    return total;
  }
};

inline bool operator==(const Signature& a, const Signature& b) {
  return a.mode == b.mode && a.sample == b.sample && a.truncation == b.truncation && a.terms == b.terms &&
         a.complete == b.complete;
}

// Truncation past which the ei/vi signature of the sample has no terms.
inline Truncation natural_truncation(CountingMode mode, const Graph& sample) {
  switch (mode) {
    case CountingMode::EdgeRestricted: return {Grading::EdgeCount, sample.n_edges()};
    case CountingMode::VertexInduced: return {Grading::VertexCount, sample.n_vertices()};
    default: throw DomainError("homomorphism signatures are infinite series and need an explicit truncation");
  }
}

inline Signature signature(CountingMode mode, const Graph& sample, const Truncation& truncation) {
  if (truncation.bound < 0) throw DomainError("negative truncation bound");
  if (truncation.grading == Grading::ConnectedComponents)
    throw DomainError("a component-count truncation contains infinitely many patterns");
  Signature sig{mode, canonicalize(sample), truncation, {}, false};
  auto within = [&](const CanonicalGraph& g) { return grade(g, truncation.grading) <= truncation.bound; };
  switch (mode) {
    case CountingMode::EdgeRestricted: {
      int max_size = truncation.grading == Grading::EdgeCount ? truncation.bound : sample.n_edges();
      std::unordered_map<std::string, std::pair<CanonicalGraph, long long>> tally;
      detail::for_each_small_subset(sample.n_edges(), max_size, [&](Mask a) {
        auto g = canonicalize(restricted_subgraph_mask(sample, a));
        if (!within(g)) return;
        auto& entry = tally.try_emplace(g.code(), g, 0).first->second;
        ++entry.second;
      });
      for (const auto& [code, entry] : tally) sig.terms.add(entry.first, entry.second);
      sig.complete = grade(sig.sample, truncation.grading) <= truncation.bound;
      return sig;
    }
    case CountingMode::VertexInduced: {
      int max_size = truncation.grading == Grading::VertexCount ? truncation.bound : sample.n_vertices();
      std::unordered_map<std::string, std::pair<CanonicalGraph, long long>> tally;
      detail::for_each_small_subset(sample.n_vertices(), max_size, [&](Mask u) {
        auto g = canonicalize(induced_subgraph_mask(sample, u));
        if (!within(g)) return;
        auto& entry = tally.try_emplace(g.code(), g, 0).first->second;
        ++entry.second;
      });
      for (const auto& [code, entry] : tally) sig.terms.add(entry.first, entry.second);
      sig.complete = grade(sig.sample, truncation.grading) <= truncation.bound;
      return sig;
    }
    case CountingMode::Homomorphism:
    case CountingMode::HomomorphismDP: {
      auto universe = graded_universe(pattern_carrier(mode, truncation), truncation.grading, truncation.bound);
      for (const auto& g : universe.members) sig.terms.add(g, count(mode, g.graph(), sample));
      return sig;
    }
  }
  throw InternalError("unknown counting mode");
}

inline Signature signature(CountingMode mode, const Graph& sample) {
  return signature(mode, sample, natural_truncation(mode, sample));
}

struct CharacterCheck {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// count(τ₁)·count(τ₂) against the count paired with τ₁·τ₂ under the mode's product.
inline CharacterCheck check_character(CountingMode mode, const Graph& sample, const Graph& left, const Graph& right) {
  CharacterCheck out;
  out.lhs = count(mode, left, sample) * count(mode, right, sample);
  for (const auto& [g, c] : product(character_product(mode), canonicalize(left), canonicalize(right)))
    out.rhs += c * count(mode, g.graph(), sample);
  out.equal = out.lhs == out.rhs;
  return out;
}

// The signature of the disjoint union of both samples, from the two
// signatures alone: ⟨sig(Λ⊔Ψ), τ⟩ = ⟨sig(Λ)⊗sig(Ψ), Δτ⟩.
inline Signature chen_combine(const Signature& a, const Signature& b) {
  if (a.mode != b.mode) throw DomainError("signatures of different counting modes");
  if (a.truncation.grading != b.truncation.grading) throw DomainError("signatures truncated in different gradings");
  Signature out{a.mode, canonicalize(disjoint_union(a.sample.graph(), b.sample.graph())), {a.truncation.grading, 0},
                {}, a.complete && b.complete};
  if (out.complete) {
    out.truncation.bound = a.truncation.bound + b.truncation.bound;
  } else {
    out.truncation.bound = std::min(a.complete ? b.truncation.bound : a.truncation.bound,
                                    b.complete ? a.truncation.bound : b.truncation.bound);
  }
  GraphSum left = a.terms, right = b.terms;
  CanonicalGraph e;
  left.add(e, 1 - left.coefficient(e));
  right.add(e, 1 - right.coefficient(e));
  auto kind = chen_coproduct(a.mode);
  for (const auto& [x, cx] : left) {
    for (const auto& [y, cy] : right) {
      auto g = canonicalize(disjoint_union(x.graph(), y.graph()));
      if (grade(g, out.truncation.grading) > out.truncation.bound || out.terms.coefficient(g) != 0) continue;
      out.terms.add(g, a(b, coproduct(kind, g)));
    }
  }
  return out;
}

}  // namespace hopfgraph
