#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgtest;

namespace {

using P = ProductKind;

Monomial monomial(std::initializer_list<const char*> names) {
  Monomial m;
  for (const char* n : names) m.push_back(cg(n));
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST(Decompose, TwoEdges) {
  auto p = decompose_connected(graph("edge⊔edge"), P::EdgeQuasiShuffle);
  LinearCombination<Monomial> expected;
  expected.add(monomial({"edge", "edge"}), Rational(1, 2));
  expected.add(monomial({"edge"}), Rational(-1, 2));
  expected.add(monomial({"cherry"}), -1);
  EXPECT_EQ(p.terms, expected);
  EXPECT_EQ(to_text(p), "-1/2·edge + 1/2·edge^2 - 1·cherry");
}

TEST(Decompose, ConnectedIsItsOwnMonomial) {
  for (auto kind : {P::EdgeQuasiShuffle, P::EdgeShuffle, P::DividedPowers, P::DisjointUnion})
    for (const auto& g : enumerate_graphs(BoundKind::MaxEdges, 4, true).members) {
      if (!is_connected(g.graph())) continue;
      LinearCombination<Monomial> expected(Monomial{g});
      EXPECT_EQ(decompose_connected(g, kind).terms, expected);
    }
}

TEST(Decompose, CherryAndEdge) {
  auto p = decompose_connected(graph("cherry⊔edge"), P::EdgeQuasiShuffle);
  LinearCombination<Monomial> expected;
  expected.add(monomial({"cherry", "edge"}), 1);
  expected.add(monomial({"cherry"}), -2);
  expected.add(monomial({"triangle"}), -3);
  expected.add(monomial({"threeStar"}), -3);
  expected.add(monomial({"threePath"}), -2);
  EXPECT_EQ(p.terms, expected);
}

TEST(Decompose, RoundTripExhaustive) {
  for (auto kind : {P::EdgeQuasiShuffle, P::EdgeShuffle, P::DividedPowers, P::DisjointUnion})
    for (const auto& g : enumerate_graphs(BoundKind::MaxEdges, 4, true).members)
      ASSERT_EQ(evaluate(decompose_connected(g, kind)), GraphSum(g)) << to_string(kind) << " " << g.code();
  for (auto kind : {P::VertexQuasiShuffle, P::VertexShuffle})
    for (const auto& g : enumerate_graphs(BoundKind::MaxVertices, 4, false).members)
      ASSERT_EQ(evaluate(decompose_connected(g, kind)), GraphSum(g)) << to_string(kind) << " " << g.code();
}

TEST(Decompose, MonomialsAreConnected) {
  for (const auto& g : enumerate_graphs(BoundKind::MaxEdges, 4, true).members)
    for (const auto& [m, c] : decompose_connected(g, P::EdgeQuasiShuffle).terms)
      for (const auto& f : m) EXPECT_TRUE(is_connected(f.graph()));
}

TEST(Decompose, RejectsIsolatedVerticesForEdgeProducts) {
  EXPECT_THROW(decompose_connected(graph("edge⊔vertex"), P::EdgeQuasiShuffle), DomainError);
  EXPECT_NO_THROW(decompose_connected(graph("edge⊔vertex"), P::VertexQuasiShuffle));
}

TEST(BasisMatrix, ReferenceMatrixAndInverse) {
  auto [forward, inverse] = basis_matrix(P::EdgeQuasiShuffle, BoundKind::MaxEdges, 3, reference_basis_order());
  using R = Rational;
  const std::vector<std::vector<R>> expected_forward = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0, 0, 1}, {0, 0, 1, 2, 0, 0, 0, 2, 6},
      {0, 0, 0, 2, 0, 0, 0, 0, 6}, {0, 0, 0, 0, 1, 0, 0, 3, 6}, {0, 0, 0, 0, 0, 1, 0, 3, 6},
      {0, 0, 0, 0, 0, 0, 1, 2, 6}, {0, 0, 0, 0, 0, 0, 0, 1, 6}, {0, 0, 0, 0, 0, 0, 0, 0, 6}};
  const std::vector<std::vector<R>> expected_inverse = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0},          {0, 1, 0, R(-1, 2), 0, 0, 0, 0, R(1, 3)},
      {0, 0, 1, -1, 0, 0, 0, -2, 2},        {0, 0, 0, R(1, 2), 0, 0, 0, 0, R(-1, 2)},
      {0, 0, 0, 0, 1, 0, 0, -3, 2},         {0, 0, 0, 0, 0, 1, 0, -3, 2},
      {0, 0, 0, 0, 0, 0, 1, -2, 1},         {0, 0, 0, 0, 0, 0, 0, 1, -1},
      {0, 0, 0, 0, 0, 0, 0, 0, R(1, 6)}};
  EXPECT_EQ(forward.entries, expected_forward);
  EXPECT_EQ(inverse.entries, expected_inverse);
  EXPECT_EQ(forward.direction, MatrixDirection::MonomialToGraph);
  EXPECT_EQ(inverse.direction, MatrixDirection::GraphToMonomial);
}

TEST(BasisMatrix, ForwardTimesInverseIsIdentity) {
  for (auto kind : {P::EdgeQuasiShuffle, P::EdgeShuffle, P::DividedPowers})
    for (int bound = 0; bound <= 4; ++bound) {
      auto [f, inv] = basis_matrix(kind, BoundKind::MaxEdges, bound);
      std::size_t n = f.basis.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rational s = 0;
          for (std::size_t k = 0; k < n; ++k) s += f.entries[i][k] * inv.entries[k][j];
          ASSERT_EQ(s, i == j ? 1 : 0) << to_string(kind) << " bound " << bound;
        }
      for (std::size_t j = 0; j < n; ++j) EXPECT_NE(f.entries[j][j], 0);
    }
  auto [vf, vinv] = basis_matrix(P::VertexQuasiShuffle, BoundKind::MaxVertices, 3);
  EXPECT_EQ(vf.basis.size(), 8u);
}

TEST(BasisMatrix, SmallAndInvalid) {
  auto [f, inv] = basis_matrix(P::EdgeQuasiShuffle, BoundKind::MaxEdges, 1);
  const std::vector<std::vector<Rational>> id = {{1, 0}, {0, 1}};
  EXPECT_EQ(f.entries, id);
  EXPECT_EQ(inv.entries, id);
  EXPECT_THROW(basis_matrix(P::EdgeQuasiShuffle, BoundKind::MaxVertices, 3), DomainError);
  auto order = reference_basis_order();
  order.pop_back();
  EXPECT_THROW(basis_matrix(P::EdgeQuasiShuffle, BoundKind::MaxEdges, 3, order), DomainError);
}

TEST(CountingPolynomial, Examples) {
  auto ee = counting_polynomial(graph("edge⊔edge"), CountingMode::EdgeRestricted);
  EXPECT_EQ(to_text(ee), "-1/2·edge + 1/2·edge^2 - 1·cherry");
  auto ec = counting_polynomial(graph("edge⊔cherry"), CountingMode::EdgeRestricted);
  LinearCombination<Monomial> expected;
  expected.add(monomial({"edge", "cherry"}), 1);
  expected.add(monomial({"cherry"}), -2);
  expected.add(monomial({"triangle"}), -3);
  expected.add(monomial({"threeStar"}), -3);
  expected.add(monomial({"threePath"}), -2);
  EXPECT_EQ(ec.terms, expected);
  EXPECT_EQ(evaluate_counts(ee, CountingMode::EdgeRestricted, graph("K4")), 3);
  LinearCombination<Monomial> single(monomial({"paw"}));
  EXPECT_EQ(counting_polynomial(graph("paw"), CountingMode::EdgeRestricted).terms, single);
}

TEST(CountingPolynomial, EvaluatesCorrectlyForAllModes) {
  auto samples = enumerate_graphs(BoundKind::MaxVertices, 5, false);
  for (auto mode : all_counting_modes()) {
    for (const auto& g : counting_patterns(mode, 3).members) {
      auto p = counting_polynomial(g.graph(), mode);
      for (const auto& s : samples.members)
        ASSERT_EQ(evaluate_counts(p, mode, s.graph()), count(mode, g, s))
            << to_string(mode) << " " << g.code() << " in " << s.code();
    }
  }
}
