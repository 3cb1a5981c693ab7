#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "canonical.hpp"
#include "memo.hpp"
#include "sums.hpp"

namespace hopfgraph {

enum class CoproductKind {
  DisjointUnion,
  DividedPowers,
  EdgeShuffle,
  EdgeQuasiShuffle,
  VertexShuffle,
  VertexQuasiShuffle,
  Overlap
};

inline std::string to_string(CoproductKind k) {
  switch (k) {
    case CoproductKind::DisjointUnion: return "union";
    case CoproductKind::DividedPowers: return "dp";
    case CoproductKind::EdgeShuffle: return "shuffle";
    case CoproductKind::EdgeQuasiShuffle: return "qs";
    case CoproductKind::VertexShuffle: return "is";
    case CoproductKind::VertexQuasiShuffle: return "qis";
    case CoproductKind::Overlap: return "ol";
  }
  return "?";
}

inline bool needs_no_isolated(CoproductKind k) {
  return k == CoproductKind::EdgeShuffle || k == CoproductKind::EdgeQuasiShuffle || k == CoproductKind::Overlap;
}

namespace detail {

inline void require_coproduct_domain(CoproductKind kind, const Graph& g) {
  if (needs_no_isolated(kind) && g.has_isolated_vertices())
    throw DomainError("the " + to_string(kind) + " coproduct is defined on graphs without isolated vertices");
  int size = 0, cap = 0;
  switch (kind) {
    case CoproductKind::EdgeShuffle: size = g.n_edges(), cap = 16; break;
    case CoproductKind::EdgeQuasiShuffle:
    case CoproductKind::Overlap: size = g.n_edges(), cap = 12; break;
    case CoproductKind::VertexShuffle:
    case CoproductKind::VertexQuasiShuffle: size = g.n_vertices(), cap = 12; break;
    default: return;
  }
  if (size > cap)
    throw ResourceError("the " + to_string(kind) + " coproduct enumerates subsets of at most " + std::to_string(cap) +
                        " elements, got " + std::to_string(size));
}

// Class ids for all 2^k subsets (edge-restricted or vertex-induced).
struct SubsetClasses {
  std::vector<CanonicalGraph> classes;
  std::vector<int> id;  // by mask
};

inline SubsetClasses classify_subsets(const Graph& g, bool by_edges) {
  int k = by_edges ? g.n_edges() : g.n_vertices();
  SubsetClasses out;
  out.id.resize(std::size_t{1} << k);
  std::unordered_map<std::string, int> index;
  for (Mask s = 0; s < (Mask{1} << k); ++s) {
    auto c = canonicalize(by_edges ? restricted_subgraph_mask(g, s) : induced_subgraph_mask(g, s));
    auto [it, inserted] = index.try_emplace(c.code(), static_cast<int>(out.classes.size()));
    if (inserted) out.classes.push_back(std::move(c));
    out.id[s] = it->second;
  }
  return out;
}

inline TensorSum subset_coproduct(const Graph& g, bool by_edges, bool covering, bool overlap_only) {
  auto sc = classify_subsets(g, by_edges);
  int k = by_edges ? g.n_edges() : g.n_vertices();
  Mask full = low_bits(k);
  std::unordered_map<std::uint64_t, long long> counts;
  auto key = [](int a, int b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); };
  for (Mask a = 0;; ++a) {
    Mask rest = full & ~a;
    if (!covering) {
      ++counts[key(sc.id[a], sc.id[rest])];
    } else {
      // B = rest ∪ F for every F ⊆ A.
      for (Mask f = a;; f = (f - 1) & a) {
        if (!(overlap_only && f == 0)) ++counts[key(sc.id[a], sc.id[rest | f])];
        if (f == 0) break;
      }
    }
    if (a == full) break;
  }
  TensorSum out;
  for (const auto& [kk, c] : counts)
    out.add({sc.classes[kk >> 32], sc.classes[kk & 0xffffffffu]}, c);
  return out;
}

inline Graph union_power(const std::vector<ComponentClass>& comps, const std::vector<int>& powers) {
  Graph g;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int j = 0; j < powers[i]; ++j) g = disjoint_union(g, comps[i].graph.graph());
  return g;
}

inline TensorSum component_coproduct(const Graph& g, bool divided_powers) {
  auto comps = connected_components(g);
  std::vector<int> p(comps.size(), 0), rest(comps.size(), 0);
  TensorSum out;
  while (true) {
    Integer coeff = 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      rest[i] = comps[i].multiplicity - p[i];
      if (divided_powers) coeff *= binomial(comps[i].multiplicity, p[i]);
    }
    out.add({canonicalize(union_power(comps, p)), canonicalize(union_power(comps, rest))}, Rational(coeff));
    std::size_t i = 0;
    while (i < comps.size() && p[i] == comps[i].multiplicity) p[i++] = 0;
    if (i == comps.size()) break;
    ++p[i];
  }
  return out;
}

inline MemoTable<TensorSum>& coproduct_memo() {
  static MemoTable<TensorSum> table;
  return table;
}

}  // namespace detail

inline const TensorSum& coproduct(CoproductKind kind, const CanonicalGraph& g) {
  detail::require_coproduct_domain(kind, g.graph());
  std::string key = to_string(kind) + ":" + g.code();
  return detail::coproduct_memo().get_or_compute(key, [&] {
    const Graph& h = g.graph();
    switch (kind) {
      case CoproductKind::DisjointUnion: return detail::component_coproduct(h, false);
      case CoproductKind::DividedPowers: return detail::component_coproduct(h, true);
      case CoproductKind::EdgeShuffle: return detail::subset_coproduct(h, true, false, false);
      case CoproductKind::EdgeQuasiShuffle: return detail::subset_coproduct(h, true, true, false);
      case CoproductKind::Overlap: return detail::subset_coproduct(h, true, true, true);
      case CoproductKind::VertexShuffle: return detail::subset_coproduct(h, false, false, false);
      case CoproductKind::VertexQuasiShuffle: return detail::subset_coproduct(h, false, true, false);
    }
    throw InternalError("unknown coproduct kind");
  });
}

inline TensorSum coproduct(CoproductKind kind, const Graph& g) { return coproduct(kind, canonicalize(g)); }

inline TensorSum coproduct(CoproductKind kind, const GraphSum& x) {
  TensorSum out;
  for (const auto& [g, c] : x)
    for (const auto& [k, d] : coproduct(kind, g)) out.add(k, c * d);
  return out;
}

// Δ(g) − g⊗e − e⊗g.
inline TensorSum reduced_coproduct(CoproductKind kind, const CanonicalGraph& g) {
  TensorSum out = coproduct(kind, g);
  CanonicalGraph e;
  out.add({g, e}, -1);
  out.add({e, g}, -1);
  return out;
}

inline TensorSum reduced_coproduct(CoproductKind kind, const GraphSum& x) {
  TensorSum out;
  for (const auto& [g, c] : x) out.add_scaled(reduced_coproduct(kind, g), c);
  return out;
}

// (Δ⊗id) and (id⊗Δ) applied to a tensor; results keyed by nested pairs.
using Tensor3Key = std::tuple<CanonicalGraph, CanonicalGraph, CanonicalGraph>;
using Tensor3Sum = LinearCombination<Tensor3Key>;

inline Tensor3Sum coproduct_left(CoproductKind kind, const TensorSum& t) {
  Tensor3Sum out;
  for (const auto& [k, c] : t)
    for (const auto& [l, d] : coproduct(kind, k.first)) out.add({l.first, l.second, k.second}, c * d);
  return out;
}

inline Tensor3Sum coproduct_right(CoproductKind kind, const TensorSum& t) {
  Tensor3Sum out;
  for (const auto& [k, c] : t)
    for (const auto& [r, d] : coproduct(kind, k.second)) out.add({k.first, r.first, r.second}, c * d);
  return out;
}

}  // namespace hopfgraph
