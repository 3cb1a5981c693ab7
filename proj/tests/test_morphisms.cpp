#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace hgtest;

namespace {

// Counts the class by trying every vertex map.
Integer naive_count(MorphismClass cls, const Graph& from, const Graph& to) {
  int n = from.n_vertices(), m = to.n_vertices();
  if (n > 0 && m == 0) return 0;
  std::vector<int> image(n, 0);
  Integer total = 0;
  while (true) {
    bool hom = true;
    for (const auto& e : from.edges()) hom = hom && to.has_edge(image[e.u], image[e.v]) && image[e.u] != image[e.v];
    if (hom) {
      std::set<int> verts(image.begin(), image.end());
      std::set<std::pair<int, int>> edges;
      for (const auto& e : from.edges()) edges.insert(std::minmax(image[e.u], image[e.v]));
      bool injective = static_cast<int>(verts.size()) == n;
      bool onto_vertices = static_cast<int>(verts.size()) == m;
      bool onto_edges = static_cast<int>(edges.size()) == to.n_edges();
      bool reflects = true;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (to.has_edge(image[a], image[b]) && image[a] != image[b] && !from.has_edge(a, b)) reflects = false;
      bool keep = false;
      switch (cls) {
        case MorphismClass::Hom: keep = true; break;
        case MorphismClass::Mono: keep = injective; break;
        case MorphismClass::Epi: keep = onto_vertices; break;
        case MorphismClass::RegEpi: keep = onto_vertices && onto_edges; break;
        case MorphismClass::RegMono: keep = injective && reflects; break;
        case MorphismClass::Iso: keep = injective && onto_vertices && onto_edges; break;
        case MorphismClass::MonoAndEpi: keep = injective && onto_vertices; break;
      }
      if (keep) ++total;
    }
    int i = 0;
    while (i < n && ++image[i] == m) image[i++] = 0;
    if (i == n) break;
  }
  return total;
}

const std::array<MorphismClass, 7> kClasses = {MorphismClass::Hom,        MorphismClass::Mono,   MorphismClass::Epi,
                                               MorphismClass::RegEpi,     MorphismClass::RegMono, MorphismClass::Iso,
                                               MorphismClass::MonoAndEpi};

}  // namespace

TEST(Morphisms, Examples) {
  EXPECT_EQ(count_morphisms(MorphismClass::Hom, graph("cherry"), graph("K4")), 36);
  EXPECT_EQ(count_morphisms(MorphismClass::Iso, graph("edge"), graph("edge")), 2);
  EXPECT_EQ(count_morphisms(MorphismClass::Mono, graph("edge"), graph("K4")), 12);
  EXPECT_EQ(count_morphisms(MorphismClass::RegEpi, graph("cherry"), graph("edge")), 2);
}

TEST(Morphisms, MatchNaiveEnumeration) {
  auto from = enumerate_graphs(BoundKind::MaxVertices, 4, false).members;
  auto to = enumerate_graphs(BoundKind::MaxVertices, 4, false).members;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 12; ++i) to.push_back(canonicalize(random_graph(rng, 5)));
  for (const auto& s : from)
    for (const auto& t : to)
      for (auto cls : kClasses)
        ASSERT_EQ(count_morphisms(cls, s.graph(), t.graph()), naive_count(cls, s.graph(), t.graph()))
            << to_string(cls) << " " << s.code() << " -> " << t.code();
}

TEST(Morphisms, ForEachAgreesWithCount) {
  for (auto cls : kClasses) {
    Integer seen = 0;
    for_each_morphism(cls, graph("cherry"), graph("diamond"), [&](std::span<const int>) { ++seen; });
    EXPECT_EQ(seen, count_morphisms(cls, graph("cherry"), graph("diamond"))) << to_string(cls);
  }
}

TEST(Morphisms, ContainmentOrder) {
  for (const auto& s : enumerate_graphs(BoundKind::MaxVertices, 4, false).members) {
    for (const auto& t : enumerate_graphs(BoundKind::MaxVertices, 4, false).members) {
      auto c = [&](MorphismClass k) { return count_morphisms(k, s.graph(), t.graph()); };
      EXPECT_LE(c(MorphismClass::Mono), c(MorphismClass::Hom));
      EXPECT_LE(c(MorphismClass::RegMono), c(MorphismClass::Mono));
      EXPECT_LE(c(MorphismClass::RegEpi), c(MorphismClass::Epi));
      EXPECT_LE(c(MorphismClass::MonoAndEpi), c(MorphismClass::Epi));
    }
  }
}

TEST(Factorization, CherryInK4) {
  auto universe = enumerate_graphs(BoundKind::MaxVertices, 4, false);
  auto r = check_factorization_identities(graph("cherry"), graph("K4"), universe);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.items[0].lhs_total, count_morphisms(MorphismClass::Mono, graph("cherry"), graph("K4")));
  EXPECT_EQ(r.items[0].rhs_total, Rational(24));
}

TEST(Factorization, EmptyPattern) {
  auto universe = enumerate_graphs(BoundKind::MaxVertices, 2, false);
  auto r = check_factorization_identities(Graph(), graph("edge"), universe);
  for (const auto& it : r.items) {
    EXPECT_TRUE(it.holds);
    EXPECT_EQ(Rational(it.lhs_total), it.rhs_total);
  }
  for (int k : {0, 2, 3}) EXPECT_EQ(r.items[k].lhs_total, 1);
}

TEST(Factorization, HomIdentityReproduces144) {
  auto universe = enumerate_graphs(BoundKind::MaxVertices, 4, false);
  auto r = check_factorization_identities(graph("edge⊔edge"), graph("K4"), universe);
  EXPECT_TRUE(r.items[3].holds);
  EXPECT_EQ(r.items[3].lhs_total, 144);
}

TEST(Factorization, RejectsSmallUniverse) {
  auto universe = enumerate_graphs(BoundKind::MaxVertices, 2, false);
  EXPECT_THROW(check_factorization_identities(graph("cherry"), graph("K4"), universe), DomainError);
}

// Lovász: |Mono(τ,Λ)| = Σ_σ |Mono∩Epi(τ,σ)|·|RegMono(σ,Λ)|/|Aut σ| over σ on V(τ).
TEST(Factorization, LovaszExhaustive) {
  auto patterns = enumerate_graphs(BoundKind::MaxVertices, 4, false);
  auto samples = enumerate_graphs(BoundKind::MaxVertices, 6, false);
  for (const auto& tau : patterns.members) {
    for (const auto& lambda : samples.members) {
      Rational rhs = 0;
      for (const auto& s : detail::graphs_on_vertices(tau.n_vertices()))
        rhs += Rational(count_morphisms(MorphismClass::MonoAndEpi, tau.graph(), s.graph()) *
                        count_morphisms(MorphismClass::RegMono, s.graph(), lambda.graph())) /
               Rational(automorphism_count(s));
      ASSERT_EQ(Rational(count_morphisms(MorphismClass::Mono, tau.graph(), lambda.graph())), rhs)
          << tau.code() << " in " << lambda.code();
    }
  }
}

TEST(Factorization, AllIdentitiesOnSmallPairs) {
  auto universe = enumerate_graphs(BoundKind::MaxVertices, 4, false);
  std::mt19937_64 rng(8);
  for (const auto& tau : universe.members) {
    for (int i = 0; i < 4; ++i) {
      auto lambda = random_graph(rng, 5);
      ASSERT_TRUE(check_factorization_identities(tau.graph(), lambda, universe).all_hold())
          << tau.code() << " in " << encode_graph6(lambda);
    }
  }
}
