#pragma once

#include <array>
#include <bit>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "universe.hpp"

namespace hopfgraph {

enum class MorphismClass { Hom, Mono, Epi, RegEpi, RegMono, Iso, MonoAndEpi };

inline std::string to_string(MorphismClass c) {
  switch (c) {
    case MorphismClass::Hom: return "Hom";
    case MorphismClass::Mono: return "Mono";
    case MorphismClass::Epi: return "Epi";
    case MorphismClass::RegEpi: return "RegEpi";
    case MorphismClass::RegMono: return "RegMono";
    case MorphismClass::Iso: return "Iso";
    case MorphismClass::MonoAndEpi: return "MonoAndEpi";
  }
  return "?";
}

namespace detail {

// Backtracking over vertex assignments of `from` in an order where every
// vertex after the first of its component has an earlier neighbour.
class MapSearch {
 public:
  MapSearch(const Graph& from, const Graph& to, bool injective, bool induced)
      : from_adj_(from.adjacency()), to_adj_(to.adjacency()), injective_(injective), induced_(induced) {
    n_ = from.n_vertices();
    m_ = to.n_vertices();
    all_ = low_bits(m_);
    for (Mask comp : component_masks(from)) {
      int first = std::countr_zero(comp);
      Mask placed = bit(first);
      order_.push_back(first);
      while (placed != comp) {
        // Next vertex: most neighbours already placed, ties by index.
        int best = -1, best_links = -1;
        for (Mask rest = comp & ~placed; rest; rest &= rest - 1) {
          int v = std::countr_zero(rest);
          int links = popcount(from_adj_[v] & placed);
          if (links > best_links) best = v, best_links = links;
        }
        order_.push_back(best);
        placed |= bit(best);
      }
    }
    from_deg_.resize(n_);
    for (int v = 0; v < n_; ++v) from_deg_[v] = popcount(from_adj_[v]);
    for (int t = 0; t < m_; ++t) {
      Mask ok = 0;
      for (int s = 0; s < m_; ++s)
        if (popcount(to_adj_[s]) >= t) ok |= bit(s);
      degree_at_least_.push_back(ok);
    }
    image_.assign(n_, -1);
  }

  unsigned long long count() {
    if (n_ == 0) return 1;
    if (m_ == 0) return 0;
    return count_from(0, 0);
  }

  void visit(const std::function<void(std::span<const int>)>& f) {
    if (n_ == 0) {
      f({});
      return;
    }
    if (m_ == 0) return;
    visit_from(0, 0, f);
  }

 private:
  Mask candidates(int i, Mask used) const {
    int v = order_[i];
    Mask cand = all_;
    if (injective_) {
      cand &= ~used;
      int d = from_deg_[v];
      cand &= d < static_cast<int>(degree_at_least_.size()) ? degree_at_least_[d] : 0;
    }
    for (int j = 0; j < i; ++j) {
      int w = order_[j];
      if (from_adj_[v] & bit(w))
        cand &= to_adj_[image_[w]];
      else if (induced_)
        cand &= ~to_adj_[image_[w]];
    }
    return cand;
  }

  unsigned long long count_from(int i, Mask used) {
    Mask cand = candidates(i, used);
    if (i == n_ - 1) return static_cast<unsigned long long>(popcount(cand));
    unsigned long long total = 0;
    for (; cand; cand &= cand - 1) {
      int t = std::countr_zero(cand);
      image_[order_[i]] = t;
      total += count_from(i + 1, used | bit(t));
    }
    return total;
  }

  void visit_from(int i, Mask used, const std::function<void(std::span<const int>)>& f) {
    for (Mask cand = candidates(i, used); cand; cand &= cand - 1) {
      int t = std::countr_zero(cand);
      image_[order_[i]] = t;
      if (i == n_ - 1)
        f(image_);
      else
        visit_from(i + 1, used | bit(t), f);
    }
  }

  std::vector<Mask> from_adj_, to_adj_;
  bool injective_, induced_;
  int n_ = 0, m_ = 0;
  Mask all_ = 0;
  std::vector<int> order_, from_deg_, image_;
  std::vector<Mask> degree_at_least_;
};

inline Integer count_homomorphisms(const Graph& from, const Graph& to) {
  Integer total = 1;
  for (Mask comp : component_masks(from)) {
    if (popcount(comp) == 1) {
      total *= to.n_vertices();
      continue;
    }
    MapSearch s(induced_subgraph_mask(from, comp), to, false, false);
    total *= s.count();
    if (total == 0) break;
  }
  return total;
}

// Inclusion-exclusion over the vertex subsets of the target missed by the image.
inline Integer count_epimorphisms(const Graph& from, const Graph& to) {
  int m = to.n_vertices();
  if (from.n_vertices() < m) return 0;
  if (m > 24) throw ResourceError("epimorphism count needs a target with at most 24 vertices");
  Integer total = 0;
  for (Mask s = 0; s <= low_bits(m); ++s) {
    Integer h = count_homomorphisms(from, induced_subgraph_mask(to, s));
    if ((m - popcount(s)) % 2 == 0)
      total += h;
    else
      total -= h;
    if (s == low_bits(m)) break;
  }
  return total;
}

inline bool vertex_surjective(std::span<const int> image, int m) {
  Mask hit = 0;
  for (int t : image) hit |= bit(t);
  return popcount(hit) == m;
}

inline bool edge_surjective(const Graph& from, const Graph& to, std::span<const int> image) {
  auto to_adj = to.adjacency();
  std::vector<Mask> hit(to.n_vertices(), 0);
  for (const auto& e : from.edges()) {
    hit[image[e.u]] |= bit(image[e.v]);
    hit[image[e.v]] |= bit(image[e.u]);
  }
  return hit == to_adj;
}

}  // namespace detail

// Calls f with the image of every vertex of `from`, for each map in the class.
inline void for_each_morphism(MorphismClass cls, const Graph& from, const Graph& to,
                              const std::function<void(std::span<const int>)>& f) {
  bool injective = cls == MorphismClass::Mono || cls == MorphismClass::RegMono || cls == MorphismClass::Iso ||
                   cls == MorphismClass::MonoAndEpi;
  bool induced = cls == MorphismClass::RegMono;
  int m = to.n_vertices();
  if (cls == MorphismClass::Iso && (from.n_vertices() != m || from.n_edges() != to.n_edges())) return;
  if (cls == MorphismClass::MonoAndEpi && from.n_vertices() != m) return;
  detail::MapSearch search(from, to, injective, induced);
  switch (cls) {
    case MorphismClass::Epi:
      search.visit([&](std::span<const int> img) {
        if (detail::vertex_surjective(img, m)) f(img);
      });
      return;
    case MorphismClass::RegEpi:
      search.visit([&](std::span<const int> img) {
        if (detail::vertex_surjective(img, m) && detail::edge_surjective(from, to, img)) f(img);
      });
      return;
    default:
      search.visit(f);
  }
}

inline Integer count_morphisms(MorphismClass cls, const Graph& from, const Graph& to) {
  int n = from.n_vertices(), m = to.n_vertices();
  switch (cls) {
    case MorphismClass::Hom:
      return detail::count_homomorphisms(from, to);
    case MorphismClass::Mono:
      if (n > m) return 0;
      return detail::MapSearch(from, to, true, false).count();
    case MorphismClass::RegMono:
      if (n > m) return 0;
      return detail::MapSearch(from, to, true, true).count();
    case MorphismClass::Iso:
      if (n != m || from.n_edges() != to.n_edges()) return 0;
      return detail::MapSearch(from, to, true, false).count();
    case MorphismClass::MonoAndEpi:
      if (n != m) return 0;
      return detail::MapSearch(from, to, true, false).count();
    case MorphismClass::Epi:
      if (n < m) return 0;
      if (n == m) return detail::MapSearch(from, to, true, false).count();
      return detail::count_epimorphisms(from, to);
    case MorphismClass::RegEpi: {
      if (n < m || from.n_edges() < to.n_edges()) return 0;
      Integer total = 0;
      for_each_morphism(MorphismClass::RegEpi, from, to, [&](std::span<const int>) { ++total; });
      return total;
    }
  }
  throw InternalError("unknown morphism class");
}

struct FactorizationItem {
  int index = 0;  // 1..4
  bool applicable = true;
  Integer lhs_total = 0;
  Rational rhs_total = 0;
  // Per class σ: (maps counted directly, value of the product formula).
  std::map<CanonicalGraph, std::pair<Integer, Rational>> per_class;
  bool holds = true;
};

struct FactorizationReport {
  std::array<FactorizationItem, 4> items;
  bool all_hold() const {
    for (const auto& it : items)
      if (!it.holds) return false;
    return true;
  }
};

// The four factorization counts:
//   (i)   Mono(τ,Λ) split by the induced image,        (Mono∩Epi)(τ,σ)·RegMono(σ,Λ)/Aut(σ)
//   (ii)  Epi(τ,Λ) split by the image edges,           RegEpi(τ,σ)·(Mono∩Epi)(σ,Λ)/Aut(σ)
//   (iii) Hom(τ,Λ) split by the induced image,         Epi(τ,σ)·RegMono(σ,Λ)/Aut(σ)
//   (iv)  Hom(τ,Λ) split by the image edges,           RegEpi(τ,σ)·Mono(σ,Λ)/Aut(σ)
// (ii) and (iv) need τ without isolated vertices.
inline FactorizationReport check_factorization_identities(const Graph& tau, const Graph& lambda,
                                                          const GraphUniverse& universe) {
  int nv = tau.n_vertices();
  bool vertex_ok = universe.bound_kind == BoundKind::MaxVertices && universe.bound >= nv &&
                   (!universe.no_isolated || !tau.has_isolated_vertices());
  if (!vertex_ok)
    throw DomainError("factorization check needs a vertex-bounded universe covering " + std::to_string(nv) + " vertices");

  FactorizationReport report;
  auto image_induced = [&](std::span<const int> img) {
    Mask s = 0;
    for (int t : img) s |= bit(t);
    return canonicalize(induced_subgraph_mask(lambda, s));
  };
  auto image_edges = [&](std::span<const int> img) {
    std::vector<Edge> edges;
    for (const auto& e : tau.edges()) edges.push_back({std::min(img[e.u], img[e.v]), std::max(img[e.u], img[e.v])});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return canonicalize(restricted_subgraph(lambda, edges));
  };

  struct Identity {
    MorphismClass maps;
    bool by_edges;
    MorphismClass left, right;
  };
  const std::array<Identity, 4> identities = {{
      {MorphismClass::Mono, false, MorphismClass::MonoAndEpi, MorphismClass::RegMono},
      {MorphismClass::Epi, true, MorphismClass::RegEpi, MorphismClass::MonoAndEpi},
      {MorphismClass::Hom, false, MorphismClass::Epi, MorphismClass::RegMono},
      {MorphismClass::Hom, true, MorphismClass::RegEpi, MorphismClass::Mono},
  }};
  for (int k = 0; k < 4; ++k) {
    auto& item = report.items[k];
    item.index = k + 1;
    const auto& identity = identities[k];
    if (identity.by_edges && tau.has_isolated_vertices()) {
      item.applicable = false;
      continue;
    }
    for_each_morphism(identity.maps, tau, lambda, [&](std::span<const int> img) {
      auto sigma = identity.by_edges ? image_edges(img) : image_induced(img);
      if (!universe.contains(sigma))
        throw DomainError("universe does not contain the image class " + sigma.code());
      item.per_class[sigma].first += 1;
      item.lhs_total += 1;
    });
    for (const auto& sigma : universe.members) {
      Integer a = count_morphisms(identity.left, tau, sigma.graph());
      if (a == 0) continue;
      Integer b = count_morphisms(identity.right, sigma.graph(), lambda);
      if (b == 0) continue;
      Rational value = Rational(a * b, automorphism_count(sigma));
      item.per_class[sigma].second = value;
      item.rhs_total += value;
    }
    for (const auto& [sigma, sides] : item.per_class)
      if (Rational(sides.first) != sides.second) item.holds = false;
  }
  return report;
}

}  // namespace hopfgraph
