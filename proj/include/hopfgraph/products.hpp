#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "coproducts.hpp"
#include "memo.hpp"
#include "sums.hpp"

namespace hopfgraph {

enum class ProductKind {
  DisjointUnion,
  DividedPowers,
  EdgeShuffle,
  EdgeQuasiShuffle,
  VertexShuffle,
  VertexQuasiShuffle
};

inline std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::DisjointUnion: return "union";
    case ProductKind::DividedPowers: return "dp";
    case ProductKind::EdgeShuffle: return "shuffle";
    case ProductKind::EdgeQuasiShuffle: return "qs";
    case ProductKind::VertexShuffle: return "is";
    case ProductKind::VertexQuasiShuffle: return "qis";
  }
  return "?";
}

// The coproduct whose dual this product is.
inline CoproductKind dual_coproduct(ProductKind k) {
  switch (k) {
    case ProductKind::DisjointUnion: return CoproductKind::DisjointUnion;
    case ProductKind::DividedPowers: return CoproductKind::DividedPowers;
    case ProductKind::EdgeShuffle: return CoproductKind::EdgeShuffle;
    case ProductKind::EdgeQuasiShuffle: return CoproductKind::EdgeQuasiShuffle;
    case ProductKind::VertexShuffle: return CoproductKind::VertexShuffle;
    case ProductKind::VertexQuasiShuffle: return CoproductKind::VertexQuasiShuffle;
  }
  throw InternalError("unknown product kind");
}

inline bool needs_no_isolated(ProductKind k) {
  return k == ProductKind::EdgeShuffle || k == ProductKind::EdgeQuasiShuffle;
}

namespace detail {

inline constexpr long long kMaxGluings = 1LL << 22;

inline void require_product_domain(ProductKind kind, const Graph& g) {
  if (needs_no_isolated(kind) && g.has_isolated_vertices())
    throw DomainError("the " + to_string(kind) + " product is defined on graphs without isolated vertices");
}

class GluingSet {
 public:
  void insert(const Graph& g) {
    auto c = canonicalize(g);
    if (seen_.insert(c.code()).second) members_.push_back(std::move(c));
  }
  std::vector<CanonicalGraph> take() {
    std::sort(members_.begin(), members_.end());
    return std::move(members_);
  }

 private:
  std::unordered_set<std::string> seen_;
  std::vector<CanonicalGraph> members_;
};

inline long long partial_injection_count(int a, int b) {
  long long total = 0;
  for (int k = 0; k <= std::min(a, b); ++k) {
    long long term = 1;
    for (int i = 0; i < k; ++i) term = term * (a - i) * (b - i) / (i + 1);
    total += term;
    if (total > kMaxGluings) return total;
  }
  return total;
}

// Calls f(match) for each partial injection V(g) ⇀ V(h); match[v] = -1 if v is
// not identified. `accept(v, t, match)` may veto identifying v with t.
inline void for_each_partial_injection(int a, int b,
                                       const std::function<bool(int, int, const std::vector<int>&)>& accept,
                                       const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> match(a, -1);
  std::function<void(int, Mask)> go = [&](int v, Mask used) {
    if (v == a) {
      f(match);
      return;
    }
    match[v] = -1;
    go(v + 1, used);
    for (int t = 0; t < b; ++t) {
      if (used & bit(t)) continue;
      if (!accept(v, t, match)) continue;
      match[v] = t;
      go(v + 1, used | bit(t));
      match[v] = -1;
    }
  };
  go(0, 0);
}

// Vertices of g keep their ids; unmatched vertices of h follow.
inline std::vector<int> place_h(int a, int b, const std::vector<int>& match, int& total) {
  std::vector<int> where(b, -1);
  for (int v = 0; v < a; ++v)
    if (match[v] >= 0) where[match[v]] = v;
  total = a;
  for (int t = 0; t < b; ++t)
    if (where[t] < 0) where[t] = total++;
  return where;
}

}  // namespace detail

// A superset of the support of g·h.
inline std::vector<CanonicalGraph> enumerate_gluings(ProductKind kind, const Graph& g, const Graph& h) {
  detail::require_product_domain(kind, g);
  detail::require_product_domain(kind, h);
  detail::GluingSet out;
  int a = g.n_vertices(), b = h.n_vertices();
  if (kind == ProductKind::DisjointUnion || kind == ProductKind::DividedPowers || a == 0 || b == 0) {
    out.insert(disjoint_union(g, h));
    return out.take();
  }
  auto g_adj = g.adjacency();
  auto h_adj = h.adjacency();
  if (kind == ProductKind::EdgeShuffle || kind == ProductKind::EdgeQuasiShuffle) {
    if (detail::partial_injection_count(a, b) > detail::kMaxGluings)
      throw ResourceError("too many vertex identifications between operands");
    bool disjoint_edges = kind == ProductKind::EdgeShuffle;
    auto accept = [&](int v, int t, const std::vector<int>& match) {
      if (!disjoint_edges) return true;
      for (int w = 0; w < v; ++w)
        if (match[w] >= 0 && (g_adj[v] & bit(w)) && (h_adj[t] & bit(match[w]))) return false;
      return true;
    };
    detail::for_each_partial_injection(a, b, accept, [&](const std::vector<int>& match) {
      int total = 0;
      auto where = detail::place_h(a, b, match, total);
      std::vector<Edge> edges = g.edges();
      for (const auto& e : h.edges()) {
        Edge f{std::min(where[e.u], where[e.v]), std::max(where[e.u], where[e.v])};
        if (!std::binary_search(g.edges().begin(), g.edges().end(), f)) edges.push_back(f);
      }
      out.insert(Graph(total, std::move(edges)));
    });
    return out.take();
  }
  // Vertex kinds: identifications must be induced isomorphisms (qis only),
  // then any set of cross edges between the unidentified parts.
  bool identify = kind == ProductKind::VertexQuasiShuffle;
  auto accept = [&](int v, int t, const std::vector<int>& match) {
    if (!identify) return false;
    for (int w = 0; w < v; ++w) {
      if (match[w] < 0) continue;
      bool in_g = g_adj[v] & bit(w);
      bool in_h = h_adj[t] & bit(match[w]);
      if (in_g != in_h) return false;
    }
    return true;
  };
  long long budget = 0;
  detail::for_each_partial_injection(a, b, accept, [&](const std::vector<int>& match) {
    int total = 0;
    auto where = detail::place_h(a, b, match, total);
    std::vector<Edge> base = g.edges();
    for (const auto& e : h.edges()) {
      Edge f{std::min(where[e.u], where[e.v]), std::max(where[e.u], where[e.v])};
      if (!std::binary_search(g.edges().begin(), g.edges().end(), f)) base.push_back(f);
    }
    std::vector<Edge> cross;
    for (int v = 0; v < a; ++v) {
      if (match[v] >= 0) continue;
      for (int t = 0; t < b; ++t)
        if (where[t] >= a) cross.push_back({v, where[t]});
    }
    if (cross.size() > 22) throw ResourceError("too many cross-edge subsets between operands");
    budget += 1LL << cross.size();
    if (budget > detail::kMaxGluings) throw ResourceError("too many vertex-kind gluings between operands");
    for (Mask s = 0; s < (Mask{1} << cross.size()); ++s) {
      std::vector<Edge> edges = base;
      for (Mask r = s; r; r &= r - 1) edges.push_back(cross[std::countr_zero(r)]);
      out.insert(Graph(total, std::move(edges)));
    }
  });
  return out.take();
}

// ⟨g⊗h, Δ(γ)⟩, enumerating only splittings with the sizes of g and h.
inline Integer section_coefficient(ProductKind kind, const CanonicalGraph& gamma, const CanonicalGraph& g,
                                   const CanonicalGraph& h) {
  const Graph& G = gamma.graph();
  auto is = [](const Graph& x, const CanonicalGraph& target) {
    return x.n_vertices() == target.n_vertices() && x.n_edges() == target.n_edges() && canonicalize(x) == target;
  };
  Integer total = 0;
  switch (kind) {
    case ProductKind::DisjointUnion:
    case ProductKind::DividedPowers: {
      Rational c = coproduct(dual_coproduct(kind), gamma).coefficient({g, h});
      return boost::multiprecision::numerator(c);
    }
    case ProductKind::EdgeShuffle:
    case ProductKind::EdgeQuasiShuffle: {
      int m = G.n_edges(), ka = g.n_edges(), kb = h.n_edges();
      bool covering = kind == ProductKind::EdgeQuasiShuffle;
      if (ka > m || kb > m || ka + kb < m || (!covering && ka + kb != m)) return 0;
      Mask full = low_bits(m);
      for (Mask a = 0;; ++a) {
        if (popcount(a) == ka && is(restricted_subgraph_mask(G, a), g)) {
          Mask rest = full & ~a;
          int extra = kb - popcount(rest);
          if (!covering) {
            if (extra == 0 && is(restricted_subgraph_mask(G, rest), h)) ++total;
          } else if (extra >= 0) {
            for (Mask f = a;; f = (f - 1) & a) {
              if (popcount(f) == extra && is(restricted_subgraph_mask(G, rest | f), h)) ++total;
              if (f == 0) break;
            }
          }
        }
        if (a == full) break;
      }
      return total;
    }
    case ProductKind::VertexShuffle:
    case ProductKind::VertexQuasiShuffle: {
      int n = G.n_vertices(), ka = g.n_vertices(), kb = h.n_vertices();
      bool covering = kind == ProductKind::VertexQuasiShuffle;
      if (ka > n || kb > n || ka + kb < n || (!covering && ka + kb != n)) return 0;
      Mask full = low_bits(n);
      for (Mask a = 0;; ++a) {
        if (popcount(a) == ka && is(induced_subgraph_mask(G, a), g)) {
          Mask rest = full & ~a;
          int extra = kb - popcount(rest);
          if (!covering) {
            if (extra == 0 && is(induced_subgraph_mask(G, rest), h)) ++total;
          } else if (extra >= 0) {
            for (Mask f = a;; f = (f - 1) & a) {
              if (popcount(f) == extra && is(induced_subgraph_mask(G, rest | f), h)) ++total;
              if (f == 0) break;
            }
          }
        }
        if (a == full) break;
      }
      return total;
    }
  }
  throw InternalError("unknown product kind");
}

namespace detail {

inline MemoTable<GraphSum>& product_memo() {
  static MemoTable<GraphSum> table;
  return table;
}

}  // namespace detail

// Every coefficient from the coproduct pairing over the gluing support.
inline GraphSum product_by_duality(ProductKind kind, const CanonicalGraph& g, const CanonicalGraph& h) {
  GraphSum out;
  for (const auto& gamma : enumerate_gluings(kind, g.graph(), h.graph()))
    out.add(gamma, Rational(section_coefficient(kind, gamma, g, h)));
  return out;
}

inline const GraphSum& product(ProductKind kind, const CanonicalGraph& g, const CanonicalGraph& h) {
  detail::require_product_domain(kind, g.graph());
  detail::require_product_domain(kind, h.graph());
  std::string key = to_string(kind) + ":" + g.code() + ":" + h.code();
  return detail::product_memo().get_or_compute(key, [&] {
    if (g.is_empty()) return GraphSum(h);
    if (h.is_empty()) return GraphSum(g);
    if (kind == ProductKind::DisjointUnion) return GraphSum(canonicalize(disjoint_union(g.graph(), h.graph())));
    if (kind == ProductKind::DividedPowers) {
      Graph u = disjoint_union(g.graph(), h.graph());
      return GraphSum(canonicalize(u), Rational(automorphism_count(u), automorphism_count(g) * automorphism_count(h)));
    }
    return product_by_duality(kind, g, h);
  });
}

inline GraphSum product(ProductKind kind, const Graph& g, const Graph& h) {
  return product(kind, canonicalize(g), canonicalize(h));
}

inline GraphSum product(ProductKind kind, const GraphSum& x, const GraphSum& y) {
  GraphSum out;
  for (const auto& [g, c] : x)
    for (const auto& [h, d] : y) out.add_scaled(product(kind, g, h), c * d);
  return out;
}

// Product of tensors, factor by factor.
inline TensorSum product(ProductKind kind, const TensorSum& x, const TensorSum& y) {
  TensorSum out;
  for (const auto& [k1, c1] : x) {
    for (const auto& [k2, c2] : y) {
      const GraphSum& left = product(kind, k1.first, k2.first);
      const GraphSum& right = product(kind, k1.second, k2.second);
      for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right) out.add({a, b}, c1 * c2 * ca * cb);
    }
  }
  return out;
}

// x^{·n}, with x^0 = e.
inline GraphSum power(ProductKind kind, const GraphSum& x, int n) {
  GraphSum out = unit(1);
  for (int i = 0; i < n; ++i) out = product(kind, out, x);
  return out;
}

}  // namespace hopfgraph
