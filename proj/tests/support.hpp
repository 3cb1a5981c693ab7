#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfgraph/hopfgraph.hpp"

namespace hgtest {

using namespace hopfgraph;

// "cherry", "edge⊔edge", "vertex⊔vertex" and so on.
inline Graph graph(const std::string& text) {
  static const std::string join = "⊔";
  Graph out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(join, start);
    out = disjoint_union(out, named_graph(text.substr(start, pos - start)));
    if (pos == std::string::npos) return out;
    start = pos + join.size();
  }
}

inline CanonicalGraph cg(const std::string& text) { return canonicalize(graph(text)); }

inline GraphSum sum(std::initializer_list<std::pair<Rational, std::string>> terms) {
  GraphSum out;
  for (const auto& [c, name] : terms) out.add(cg(name), c);
  return out;
}

struct TensorTerm {
  Rational coeff;
  std::string left, right;
};

inline TensorSum tensor_sum(std::initializer_list<TensorTerm> terms) {
  TensorSum out;
  for (const auto& t : terms) out.add({cg(t.left), cg(t.right)}, t.coeff);
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int max_vertices) {
  int n = std::uniform_int_distribution<int>(0, max_vertices)(rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace hgtest
