#pragma once

#include <map>
#include <string>
#include <vector>

#include "counting.hpp"

namespace hopfgraph {

enum class TranslationKind { ViFromEi, EiFromHom, ViFromHom };

inline std::string to_string(TranslationKind k) {
  switch (k) {
    case TranslationKind::ViFromEi: return "vi-ei";
    case TranslationKind::EiFromHom: return "ei-hom";
    case TranslationKind::ViFromHom: return "vi-hom";
  }
  return "?";
}

// Counting modes on the two sides: ⟨sig_source(Λ), τ⟩ = ⟨sig_target(Λ), Φ(τ)⟩.
inline CountingMode source_mode(TranslationKind k) {
  return k == TranslationKind::ViFromEi ? CountingMode::EdgeRestricted : CountingMode::Homomorphism;
}

inline CountingMode target_mode(TranslationKind k) {
  return k == TranslationKind::EiFromHom ? CountingMode::EdgeRestricted : CountingMode::VertexInduced;
}

namespace detail {

inline void require_translation_domain(TranslationKind kind, const CanonicalGraph& g) {
  if (g.graph().has_isolated_vertices())
    throw DomainError("the " + to_string(kind) + " translation is defined on graphs without isolated vertices");
}

// Classes of graphs on V(τ) containing E(τ), found by adding one edge at a
// time; coefficient |Mono∩Epi(τ,σ)| / |Aut τ|.
inline GraphSum vi_from_ei(const CanonicalGraph& tau) {
  const Graph& t = tau.graph();
  int n = t.n_vertices();
  Rational aut(automorphism_count(t));
  GraphSum out;
  std::map<std::string, CanonicalGraph> level{{tau.code(), tau}};
  while (!level.empty()) {
    std::map<std::string, CanonicalGraph> next;
    for (const auto& [code, s] : level) {
      out.add(s, Rational(count_morphisms(MorphismClass::MonoAndEpi, t, s.graph())) / aut);
      const Graph& base = s.graph();
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (base.has_edge(u, v)) continue;
          auto edges = base.edges();
          edges.push_back({u, v});
          auto c = canonicalize(Graph(n, std::move(edges)));
          next.try_emplace(c.code(), std::move(c));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

// Calls f(block_of) for each partition of V(g) into independent sets.
template <class F>
void for_each_independent_partition(const Graph& g, F&& f) {
  int n = g.n_vertices();
  auto adj = g.adjacency();
  std::vector<int> block_of(n, -1);
  std::vector<Mask> blocks;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      f(block_of, static_cast<int>(blocks.size()));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (adj[v] & blocks[b]) continue;
      blocks[b] |= bit(v);
      block_of[v] = static_cast<int>(b);
      self(self, v + 1);
      blocks[b] &= ~bit(v);
    }
    blocks.push_back(bit(v));
    block_of[v] = static_cast<int>(blocks.size()) - 1;
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
}

// Quotients by independent partitions; each partition with quotient ≅ σ
// accounts for |Aut σ| regular epimorphisms.
inline GraphSum ei_from_hom(const CanonicalGraph& tau) {
  std::map<std::string, std::pair<CanonicalGraph, long long>> tally;
  for_each_independent_partition(tau.graph(), [&](const std::vector<int>& block_of, int k) {
    std::vector<Edge> edges;
    for (const auto& e : tau.graph().edges()) {
      Edge q{block_of[e.u], block_of[e.v]};
      if (q.u > q.v) std::swap(q.u, q.v);
      edges.push_back(q);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    auto c = canonicalize(Graph(k, std::move(edges)));
    ++tally.try_emplace(c.code(), c, 0).first->second.second;
  });
  GraphSum out;
  for (const auto& [code, entry] : tally)
    out.add(entry.first, Rational(entry.second) * Rational(automorphism_count(entry.first)));
  return out;
}

inline MemoTable<GraphSum>& translation_memo() {
  static MemoTable<GraphSum> table;
  return table;
}

}  // namespace detail

inline const GraphSum& translate(TranslationKind kind, const CanonicalGraph& g) {
  detail::require_translation_domain(kind, g);
  return detail::translation_memo().get_or_compute(to_string(kind) + ":" + g.code(), [&] {
    switch (kind) {
      case TranslationKind::ViFromEi: return detail::vi_from_ei(g);
      case TranslationKind::EiFromHom: return detail::ei_from_hom(g);
      case TranslationKind::ViFromHom: {
        GraphSum out;
        for (const auto& [s, c] : translate(TranslationKind::EiFromHom, g))
          out.add_scaled(translate(TranslationKind::ViFromEi, s), c);
        return out;
      }
    }
    throw InternalError("unknown translation kind");
  });
}

inline GraphSum translate(TranslationKind kind, const GraphSum& x) {
  GraphSum out;
  for (const auto& [g, c] : x) out.add_scaled(translate(kind, g), c);
  return out;
}

// Back-substitution: the image of τ is a unit (vi-ei) or |Aut τ| (ei-hom)
// times τ plus terms strictly above it (more edges on the same vertices,
// respectively fewer vertices), so Φ⁻¹(τ) = (τ − Σ c_σ Φ⁻¹(σ)) / c_τ.
inline const GraphSum& translate_inverse(TranslationKind kind, const CanonicalGraph& g) {
  detail::require_translation_domain(kind, g);
  static detail::MemoTable<GraphSum> memo;
  return memo.get_or_compute(to_string(kind) + ":" + g.code(), [&] {
    if (kind == TranslationKind::ViFromHom) {
      GraphSum out;
      for (const auto& [s, c] : translate_inverse(TranslationKind::ViFromEi, g))
        out.add_scaled(translate_inverse(TranslationKind::EiFromHom, s), c);
      return out;
    }
    const GraphSum& image = translate(kind, g);
    Rational diagonal = image.coefficient(g);
    if (diagonal == 0) throw InternalError("translation is not triangular at " + graph_name(g));
    GraphSum out(g);
    for (const auto& [s, c] : image)
      if (s != g) out.add_scaled(translate_inverse(kind, s), -c);
    return out * (1 / diagonal);
  });
}

inline GraphSum translate_inverse(TranslationKind kind, const GraphSum& x) {
  GraphSum out;
  for (const auto& [g, c] : x) out.add_scaled(translate_inverse(kind, g), c);
  return out;
}

struct TranslationCheck {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// count_source(τ, Λ) against Σ_σ [Φ(τ)]_σ count_target(σ, Λ).
inline TranslationCheck check_translation_identity(TranslationKind kind, const Graph& pattern, const Graph& sample) {
  auto tau = canonicalize(pattern);
  TranslationCheck out;
  out.lhs = count(source_mode(kind), pattern, sample);
  for (const auto& [s, c] : translate(kind, tau)) {
    if (s.n_vertices() > sample.n_vertices()) continue;  // counts zero in the sample
    out.rhs += c * count(target_mode(kind), s.graph(), sample);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace hopfgraph
