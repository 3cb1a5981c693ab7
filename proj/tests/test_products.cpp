#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgtest;

namespace {

using P = ProductKind;

const std::array<P, 6> kProducts = {P::DisjointUnion, P::DividedPowers, P::EdgeShuffle,
                                    P::EdgeQuasiShuffle, P::VertexShuffle, P::VertexQuasiShuffle};

// Basis elements of the product's carrier: by edges for edge kinds, else by vertices.
std::vector<CanonicalGraph> domain(P kind, int edges, int vertices) {
  if (needs_no_isolated(kind)) return enumerate_graphs(BoundKind::MaxEdges, edges, true).members;
  return enumerate_graphs(BoundKind::MaxVertices, vertices, false).members;
}

int size(P kind, const CanonicalGraph& g) { return needs_no_isolated(kind) ? g.n_edges() : g.n_vertices(); }

}  // namespace

TEST(Products, Examples) {
  EXPECT_EQ(product(P::EdgeQuasiShuffle, cg("edge"), cg("edge")), sum({{2, "edge⊔edge"}, {2, "cherry"}, {1, "edge"}}));
  EXPECT_EQ(product(P::EdgeShuffle, cg("edge"), cg("cherry")),
            sum({{1, "edge⊔cherry"}, {3, "triangle"}, {3, "threeStar"}, {2, "threePath"}}));
  EXPECT_EQ(product(P::DividedPowers, cg("edge"), cg("edge")), sum({{2, "edge⊔edge"}}));
  EXPECT_EQ(product(P::VertexQuasiShuffle, cg("vertex"), cg("vertex")),
            sum({{2, "vertex⊔vertex"}, {2, "edge"}, {1, "vertex"}}));
  EXPECT_EQ(product(P::VertexShuffle, cg("edge"), cg("edge")),
            sum({{2, "edge⊔edge"}, {2, "threePath"}, {2, "paw"}, {4, "C4"}, {4, "diamond"}, {6, "K4"}}));
}

TEST(Products, FurtherWorkedExamples) {
  EXPECT_EQ(product(P::EdgeShuffle, cg("edge"), cg("edge")), sum({{2, "edge⊔edge"}, {2, "cherry"}}));
  EXPECT_EQ(product(P::EdgeQuasiShuffle, cg("edge"), cg("cherry")),
            sum({{1, "edge⊔cherry"}, {3, "triangle"}, {3, "threeStar"}, {2, "threePath"}, {2, "cherry"}}));
  EXPECT_EQ(product(P::VertexShuffle, cg("vertex"), cg("vertex")), sum({{2, "vertex⊔vertex"}, {2, "edge"}}));
  EXPECT_EQ(product(P::VertexQuasiShuffle, cg("edge"), cg("edge")),
            sum({{2, "edge⊔edge"}, {2, "threePath"}, {2, "paw"}, {4, "C4"}, {4, "diamond"}, {6, "K4"}, {1, "edge"},
                 {2, "cherry"}, {6, "triangle"}}));
  EXPECT_EQ(product(P::DividedPowers, cg("cherry"), cg("edge")), sum({{1, "cherry⊔edge"}}));
}

TEST(Products, UnitLaw) {
  CanonicalGraph e;
  for (auto kind : kProducts)
    for (const auto& g : domain(kind, 3, 4)) {
      EXPECT_EQ(product(kind, e, g), GraphSum(g)) << to_string(kind);
      EXPECT_EQ(product(kind, g, e), GraphSum(g)) << to_string(kind);
    }
}

TEST(Products, GluingSupport) {
  auto support = enumerate_gluings(P::EdgeQuasiShuffle, graph("edge"), graph("edge"));
  std::set<CanonicalGraph> got(support.begin(), support.end());
  EXPECT_EQ(got, (std::set<CanonicalGraph>{cg("edge⊔edge"), cg("cherry"), cg("edge")}));
  auto vs = enumerate_gluings(P::VertexShuffle, graph("vertex"), graph("vertex"));
  EXPECT_EQ(std::set<CanonicalGraph>(vs.begin(), vs.end()), (std::set<CanonicalGraph>{cg("vertex⊔vertex"), cg("edge")}));
  for (auto kind : kProducts) {
    auto s = enumerate_gluings(kind, Graph(), graph("cherry"));
    EXPECT_EQ(std::set<CanonicalGraph>(s.begin(), s.end()), std::set<CanonicalGraph>{cg("cherry")});
  }
}

TEST(Products, EdgeKindsRejectIsolatedVertices) {
  EXPECT_THROW(product(P::EdgeShuffle, cg("vertex"), cg("edge")), DomainError);
  EXPECT_THROW(product(P::EdgeQuasiShuffle, cg("edge⊔vertex"), cg("edge")), DomainError);
  EXPECT_NO_THROW(product(P::VertexQuasiShuffle, cg("vertex"), cg("edge")));
}

// Coefficient of γ in g·h equals ⟨g⊗h, Δ(γ)⟩ for every γ of the bounded universe.
TEST(Products, DualToCoproduct) {
  for (auto kind : kProducts) {
    auto universe = domain(kind, 4, 4);
    for (const auto& g : domain(kind, 2, 2)) {
      for (const auto& h : domain(kind, 2, 2)) {
        const auto& prod = product(kind, g, h);
        for (const auto& gamma : universe) {
          Rational expected = coproduct(dual_coproduct(kind), gamma).coefficient({g, h});
          ASSERT_EQ(prod.coefficient(gamma), expected)
              << to_string(kind) << " " << g.code() << "·" << h.code() << " at " << gamma.code();
        }
        for (const auto& [gamma, c] : prod)
          ASSERT_LE(size(kind, gamma), 4) << "term outside the checked universe";
      }
    }
  }
}

TEST(Products, CommutativeAndAssociative) {
  for (auto kind : kProducts) {
    auto all = domain(kind, 3, 4);
    for (const auto& x : all)
      for (const auto& y : all) {
        if (size(kind, x) + size(kind, y) > (needs_no_isolated(kind) ? 3 : 4)) continue;
        ASSERT_EQ(product(kind, x, y), product(kind, y, x)) << to_string(kind);
        for (const auto& z : all) {
          if (size(kind, x) + size(kind, y) + size(kind, z) > (needs_no_isolated(kind) ? 3 : 4)) continue;
          ASSERT_EQ(product(kind, product(kind, GraphSum(x), GraphSum(y)), GraphSum(z)),
                    product(kind, GraphSum(x), product(kind, GraphSum(y), GraphSum(z))))
              << to_string(kind);
        }
      }
  }
}

TEST(Products, LeadingTermCoincides) {
  auto all = enumerate_graphs(BoundKind::MaxEdges, 3, true).members;
  for (const auto& g : all)
    for (const auto& h : all) {
      if (g.n_edges() + h.n_edges() > 4) continue;
      auto lead = canonicalize(disjoint_union(g.graph(), h.graph()));
      Rational dp = product(P::DividedPowers, g, h).coefficient(lead);
      EXPECT_EQ(product(P::EdgeShuffle, g, h).coefficient(lead), dp);
      EXPECT_EQ(product(P::EdgeQuasiShuffle, g, h).coefficient(lead), dp);
      Rational closed = Rational(automorphism_count(lead), automorphism_count(g) * automorphism_count(h));
      EXPECT_EQ(dp, closed);
    }
}

TEST(Products, QuasiShuffleFiltrationAndShuffleRelation) {
  auto all = enumerate_graphs(BoundKind::MaxEdges, 3, true).members;
  for (const auto& g : all)
    for (const auto& h : all) {
      if (g.n_edges() + h.n_edges() > 4) continue;
      int top = g.n_edges() + h.n_edges();
      for (const auto& [gamma, c] : product(P::EdgeQuasiShuffle, g, h)) EXPECT_LE(gamma.n_edges(), top);
      for (const auto& [gamma, c] : product(P::EdgeShuffle, g, h)) EXPECT_EQ(gamma.n_edges(), top);
      GraphSum diff = product(P::EdgeQuasiShuffle, g, h) - product(P::EdgeShuffle, g, h);
      for (const auto& [gamma, c] : diff) EXPECT_LT(gamma.n_edges(), top);
    }
}

TEST(Products, Bilinear) {
  GraphSum x = sum({{2, "edge"}, {1, "cherry"}}), y = sum({{Rational(1, 2), "edge"}});
  GraphSum expected = Rational(1) * product(P::EdgeQuasiShuffle, cg("edge"), cg("edge")) +
                      Rational(1, 2) * product(P::EdgeQuasiShuffle, cg("cherry"), cg("edge"));
  EXPECT_EQ(product(P::EdgeQuasiShuffle, x, y), expected);
}
