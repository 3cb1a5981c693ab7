#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace hgtest;

namespace {

using M = CountingMode;

}  // namespace

TEST(Count, Examples) {
  EXPECT_EQ(count(M::EdgeRestricted, graph("cherry"), graph("K4")), 12);
  EXPECT_EQ(count(M::VertexInduced, graph("triangle"), graph("K4")), 4);
  EXPECT_EQ(count(M::Homomorphism, graph("cherry"), graph("K4")), 36);
  EXPECT_EQ(count(M::EdgeRestricted, graph("edge⊔edge"), graph("K4")), 3);
  EXPECT_EQ(count(M::HomomorphismDP, graph("cherry"), graph("K4")), 18);
  EXPECT_EQ(count(M::HomomorphismDP, graph("triangle"), graph("K4")), 4);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(count(M::EdgeRestricted, Graph(), random_graph(rng, 6)), 1);
}

TEST(Count, DomainErrors) {
  EXPECT_THROW(count(M::EdgeRestricted, graph("vertex"), graph("K4")), DomainError);
  EXPECT_THROW(count(M::EdgeRestricted, graph("edge⊔vertex"), graph("K4")), DomainError);
  EXPECT_NO_THROW(count(M::VertexInduced, graph("edge⊔vertex"), graph("K4")));
}

TEST(Count, HomDPIsRational) {
  EXPECT_EQ(count(M::HomomorphismDP, graph("edge"), graph("edge")), 1);
  EXPECT_EQ(count(M::HomomorphismDP, graph("edge⊔edge"), graph("edge")), Rational(1, 2));
}

// c^ei(τ,Λ) = |Mono(τ,Λ)| / |Aut(τ)|.
TEST(Count, EdgeRestrictedIsMonoOverAut) {
  auto patterns = enumerate_graphs(BoundKind::MaxEdges, 4, true);
  auto samples = enumerate_graphs(BoundKind::MaxVertices, 6, false);
  for (const auto& tau : patterns.members)
    for (const auto& lambda : samples.members) {
      Integer mono = count_morphisms(MorphismClass::Mono, tau.graph(), lambda.graph());
      Integer aut = automorphism_count(tau);
      ASSERT_EQ(mono % aut, 0);
      ASSERT_EQ(count(M::EdgeRestricted, tau, lambda), Rational(mono / aut)) << tau.code() << " in " << lambda.code();
    }
}

TEST(Count, VertexInducedIsRegMonoOverAut) {
  auto patterns = enumerate_graphs(BoundKind::MaxVertices, 4, false);
  auto samples = enumerate_graphs(BoundKind::MaxVertices, 5, false);
  for (const auto& s : patterns.members)
    for (const auto& lambda : samples.members)
      ASSERT_EQ(count(M::VertexInduced, s, lambda),
                Rational(count_morphisms(MorphismClass::RegMono, s.graph(), lambda.graph()), automorphism_count(s)));
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(M::VertexInduced, graph("K4")).terms,
            sum({{1, "e"}, {4, "vertex"}, {6, "edge"}, {4, "triangle"}, {1, "K4"}}));
  EXPECT_EQ(signature(M::VertexInduced, graph("edge⊔vertex")).terms,
            sum({{1, "e"}, {3, "vertex"}, {1, "edge"}, {2, "vertex⊔vertex"}, {1, "edge⊔vertex"}}));
  EXPECT_EQ(signature(M::EdgeRestricted, graph("edge")).terms, sum({{1, "e"}, {1, "edge"}}));
}

TEST(Signature, EdgeRestrictedOfK4) {
  auto sig = signature(M::EdgeRestricted, graph("K4"));
  EXPECT_TRUE(sig.complete);
  EXPECT_EQ(sig.terms, sum({{1, "e"},
                            {6, "edge"},
                            {12, "cherry"},
                            {3, "edge⊔edge"},
                            {4, "triangle"},
                            {4, "threeStar"},
                            {12, "threePath"},
                            {12, "paw"},
                            {3, "C4"},
                            {6, "diamond"},
                            {1, "K4"}}));
  Rational total = 0;
  for (const auto& [g, c] : sig.terms) total += c;
  EXPECT_EQ(total, 64);
}

TEST(Signature, HomomorphismOfK4Truncated) {
  auto sig = signature(M::Homomorphism, graph("K4"), {Grading::EdgeCount, 2});
  EXPECT_EQ(sig.terms, sum({{1, "e"}, {12, "edge"}, {36, "cherry"}, {144, "edge⊔edge"}}));
  EXPECT_THROW(sig(cg("triangle")), DomainError);
  EXPECT_THROW(sig(cg("vertex")), DomainError);
  auto by_vertices = signature(M::Homomorphism, graph("K4"), {Grading::VertexCount, 2});
  EXPECT_EQ(by_vertices.terms, sum({{1, "e"}, {4, "vertex"}, {16, "vertex⊔vertex"}, {12, "edge"}}));
  EXPECT_THROW(signature(M::Homomorphism, graph("K4")), DomainError);
}

TEST(Signature, MatchesCountsAndDiagonal) {
  for (const auto& lambda : enumerate_graphs(BoundKind::MaxVertices, 5, false).members) {
    for (auto mode : {M::EdgeRestricted, M::VertexInduced}) {
      auto sig = signature(mode, lambda.graph());
      EXPECT_EQ(sig(CanonicalGraph()), 1);
      if (mode == M::VertexInduced || !lambda.graph().has_isolated_vertices()) EXPECT_EQ(sig(lambda), 1);
      auto patterns = mode == M::VertexInduced ? enumerate_graphs(BoundKind::MaxVertices, 4, false)
                                               : enumerate_graphs(BoundKind::MaxEdges, 4, true);
      for (const auto& tau : patterns.members)
        ASSERT_EQ(sig(tau), count(mode, tau, lambda)) << to_string(mode) << " " << tau.code() << " in " << lambda.code();
    }
  }
}

TEST(Character, Examples) {
  auto r = check_character(M::EdgeRestricted, graph("K4"), graph("edge"), graph("edge"));
  EXPECT_EQ(r.lhs, 36);
  EXPECT_TRUE(r.equal);
  auto h = check_character(M::Homomorphism, graph("K4"), graph("edge"), graph("edge"));
  EXPECT_EQ(h.rhs, 144);
  EXPECT_TRUE(h.equal);
  for (auto mode : all_counting_modes()) {
    auto u = check_character(mode, graph("diamond"), graph("cherry"), Graph());
    EXPECT_TRUE(u.equal);
    EXPECT_EQ(u.lhs, count(mode, graph("cherry"), graph("diamond")));
  }
}

TEST(Character, RandomTriples) {
  std::mt19937_64 rng(31);
  for (auto mode : all_counting_modes()) {
    auto patterns = counting_patterns(mode, 3).members;
    std::uniform_int_distribution<std::size_t> pick(0, patterns.size() - 1);
    for (int i = 0; i < 60; ++i) {
      auto sample = random_graph(rng, 6);
      auto r = check_character(mode, sample, patterns[pick(rng)].graph(), patterns[pick(rng)].graph());
      ASSERT_TRUE(r.equal) << to_string(mode) << " " << encode_graph6(sample);
    }
  }
}

TEST(Chen, ExpansionExample) {
  // ⟨GC(Λ⊔Ψ), eee⟩ = Ψ(eee) + Λ(ee)Ψ(edge) + Λ(edge)Ψ(ee) + Λ(eee), edge-free cross terms vanish.
  auto lambda = graph("cherry"), psi = graph("triangle");
  auto a = signature(M::EdgeRestricted, lambda), b = signature(M::EdgeRestricted, psi);
  auto c = chen_combine(a, b);
  auto eee = cg("edge⊔edge⊔edge"), ee = cg("edge⊔edge"), e1 = cg("edge");
  Rational expected = b(eee) + a(ee) * b(e1) + a(e1) * b(ee) + a(eee);
  EXPECT_EQ(c(eee), expected);
  EXPECT_EQ(c(eee), count(M::EdgeRestricted, graph("edge⊔edge⊔edge"), disjoint_union(lambda, psi)));
}

TEST(Chen, CounitLeg) {
  for (auto mode : {M::EdgeRestricted, M::VertexInduced}) {
    auto s = signature(mode, graph("paw"));
    auto c = chen_combine(signature(mode, Graph()), s);
    EXPECT_EQ(c.terms, s.terms);
    EXPECT_EQ(c.sample, s.sample);
  }
}

TEST(Chen, K4AndTriangle) {
  auto k4 = graph("K4"), tri = graph("triangle");
  auto joined = disjoint_union(k4, tri);
  for (auto mode : {M::EdgeRestricted, M::VertexInduced}) {
    auto c = chen_combine(signature(mode, k4), signature(mode, tri));
    EXPECT_EQ(c.terms, signature(mode, joined).terms) << to_string(mode);
    EXPECT_TRUE(c.complete);
  }
  for (auto mode : {M::Homomorphism, M::HomomorphismDP}) {
    Truncation t{Grading::VertexCount, 4};
    EXPECT_EQ(chen_combine(signature(mode, k4, t), signature(mode, tri, t)).terms, signature(mode, joined, t).terms)
        << to_string(mode);
  }
}

TEST(Chen, EdgeRestrictedProductForm) {
  // GC(Λ) ⊔ GC(Ψ) = GC(Λ⊔Ψ) on the complete signatures.
  auto a = signature(M::EdgeRestricted, graph("cherry")), b = signature(M::EdgeRestricted, graph("edge"));
  EXPECT_EQ(product(ProductKind::DisjointUnion, a.terms, b.terms),
            signature(M::EdgeRestricted, graph("cherry⊔edge")).terms);
}

TEST(Chen, RejectsMixedModes) {
  EXPECT_THROW(chen_combine(signature(M::EdgeRestricted, graph("edge")), signature(M::VertexInduced, graph("edge"))),
               DomainError);
}

TEST(Chen, RandomPairsAllModes) { EXPECT_TRUE(verify_chen_suite(20, 4, 3, 77).ok()); }

// ⟨GC(Λ),σ⟩ ≠ 0 ⟹ |E(σ)| ≤ |E(Λ)|, with ⟨GC(Λ),Λ⟩ = 1, and Λ ↦ GC(Λ) injective on 𝔾̃.
TEST(Signature, TriangularAndInjectiveWithoutIsolatedVertices) {
  auto universe = enumerate_graphs(BoundKind::MaxEdges, 4, true);
  std::map<std::string, std::string> seen;
  for (const auto& lambda : universe.members) {
    auto sig = signature(M::EdgeRestricted, lambda.graph());
    EXPECT_EQ(sig(lambda), 1);
    for (const auto& [s, c] : sig.terms) {
      EXPECT_LE(s.n_edges(), lambda.n_edges());
      if (s.n_edges() == lambda.n_edges()) EXPECT_EQ(s, lambda);
    }
    auto key = to_text(sig.terms);
    auto [it, fresh] = seen.try_emplace(key, lambda.code());
    EXPECT_TRUE(fresh) << lambda.code() << " collides with " << it->second;
  }
}

TEST(Signature, NotInjectiveWithIsolatedVertices) {
  EXPECT_EQ(signature(M::EdgeRestricted, graph("edge")).terms, signature(M::EdgeRestricted, graph("edge⊔vertex")).terms);
}
