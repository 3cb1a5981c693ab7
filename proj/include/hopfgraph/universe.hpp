#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "canonical.hpp"

namespace hopfgraph {

inline constexpr int kDefaultCap = 8;
inline constexpr int kHardCap = 12;

// HOPFGRAPH_MAX_CAP raises or lowers the cap, clamped to the hard limit.
inline int enumeration_cap() {
  const char* env = std::getenv("HOPFGRAPH_MAX_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw DomainError(std::string("HOPFGRAPH_MAX_CAP is not a non-negative integer: ") + env);
  return static_cast<int>(std::min<long>(v, kHardCap));
}

enum class BoundKind { MaxVertices, MaxEdges };

struct GraphUniverse {
  BoundKind bound_kind = BoundKind::MaxVertices;
  int bound = 0;
  bool no_isolated = false;
  std::vector<CanonicalGraph> members;

  bool admits(const CanonicalGraph& g) const {
    if (no_isolated && g.graph().has_isolated_vertices()) return false;
    return (bound_kind == BoundKind::MaxVertices ? g.n_vertices() : g.n_edges()) <= bound;
  }
  bool contains(const CanonicalGraph& g) const { return std::binary_search(members.begin(), members.end(), g); }
};

namespace detail {

inline std::vector<CanonicalGraph> graphs_on_vertices(int n) {
  std::vector<CanonicalGraph> all;
  std::set<std::string> seen;
  std::vector<CanonicalGraph> level{canonicalize(edgeless_graph(n))};
  while (!level.empty()) {
    std::map<std::string, CanonicalGraph> next;
    for (const auto& g : level) {
      all.push_back(g);
      const Graph& base = g.graph();
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (base.has_edge(u, v)) continue;
          auto edges = base.edges();
          edges.push_back({u, v});
          auto c = canonicalize(Graph(n, std::move(edges)));
          if (!seen.count(c.code())) {
            seen.insert(c.code());
            next.emplace(c.code(), std::move(c));
          }
        }
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return all;
}

// Graphs without isolated vertices, grown one edge at a time: the new edge may
// join two old vertices, an old and a new vertex, or two new vertices.
inline std::vector<CanonicalGraph> graphs_without_isolated_by_edges(int max_edges) {
  std::vector<CanonicalGraph> all;
  std::vector<CanonicalGraph> level{CanonicalGraph()};
  for (int m = 0; m <= max_edges; ++m) {
    all.insert(all.end(), level.begin(), level.end());
    if (m == max_edges) break;
    std::map<std::string, CanonicalGraph> next;
    auto push = [&](Graph h) {
      auto c = canonicalize(h);
      next.emplace(c.code(), std::move(c));
    };
    for (const auto& g : level) {
      const Graph& base = g.graph();
      int n = base.n_vertices();
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (base.has_edge(u, v)) continue;
          auto edges = base.edges();
          edges.push_back({u, v});
          push(Graph(n, std::move(edges)));
        }
      }
      for (int u = 0; u < n; ++u) {
        auto edges = base.edges();
        edges.push_back({u, n});
        push(Graph(n + 1, std::move(edges)));
      }
      auto edges = base.edges();
      edges.push_back({n, n + 1});
      push(Graph(n + 2, std::move(edges)));
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return all;
}

}  // namespace detail

// Results are cached per (kind, bound, no_isolated).
inline GraphUniverse enumerate_graphs(BoundKind kind, int bound, bool no_isolated) {
  if (bound < 0) throw DomainError("negative universe bound");
  int cap = enumeration_cap();
  if (bound > cap)
    throw ResourceError("universe bound " + std::to_string(bound) + " exceeds the enumeration cap " + std::to_string(cap) +
                        " (raise HOPFGRAPH_MAX_CAP, hard limit 12)");
  if (kind == BoundKind::MaxEdges && !no_isolated)
    throw DomainError("an edge bound admits unboundedly many isolated vertices; use no_isolated or a vertex bound");

  static std::mutex mutex;
  static std::map<std::tuple<int, int, bool>, GraphUniverse> cache;
  auto key = std::make_tuple(static_cast<int>(kind), bound, no_isolated);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  GraphUniverse u{kind, bound, no_isolated, {}};
  if (kind == BoundKind::MaxEdges) {
    u.members = detail::graphs_without_isolated_by_edges(bound);
  } else {
    for (int n = 0; n <= bound; ++n)
      for (auto& g : detail::graphs_on_vertices(n))
        if (!no_isolated || !g.graph().has_isolated_vertices()) u.members.push_back(std::move(g));
  }
  std::sort(u.members.begin(), u.members.end());
  std::lock_guard lock(mutex);
  cache.emplace(key, u);
  return u;
}

}  // namespace hopfgraph
