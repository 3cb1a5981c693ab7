#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopf.hpp"

namespace hopfgraph {

// Known compatibility tables. Rows are coproducts, columns products.
struct CompatibilityTable {
  Carrier carrier;
  std::vector<CoproductKind> rows;
  std::vector<ProductKind> columns;
  std::vector<std::string> cells;  // 'y' or 'n' per column
};

inline CompatibilityTable known_bialgebra_table(Carrier carrier) {
  using P = ProductKind;
  using C = CoproductKind;
  if (carrier == Carrier::AllGraphs)
    return {carrier,
            {C::DisjointUnion, C::DividedPowers, C::VertexShuffle, C::VertexQuasiShuffle},
            {P::DisjointUnion, P::DividedPowers, P::VertexShuffle, P::VertexQuasiShuffle},
            {"nyyy", "ynnn", "ynnn", "ynnn"}};
  return {carrier,
          {C::DisjointUnion, C::DividedPowers, C::EdgeShuffle, C::EdgeQuasiShuffle},
          {P::DisjointUnion, P::DividedPowers, P::EdgeShuffle, P::EdgeQuasiShuffle, P::VertexShuffle,
           P::VertexQuasiShuffle},
          {"nyyyyy", "ynnnnn", "ynnnnn", "ynnnnn"}};
}

inline CompatibilityTable known_hopf_table(Carrier carrier) {
  auto t = known_bialgebra_table(carrier);
  t.cells.back()[0] = 'n';
  return t;
}

struct TableCell {
  BialgebraConfig config;
  bool expected = false;
  bool observed = false;
  std::string evidence;
  bool matches() const { return expected == observed; }
};

// Bounds: vertex sum on G, edge sum on G~.
inline int default_table_bound(Carrier carrier) { return carrier == Carrier::AllGraphs ? 4 : 3; }

inline std::string describe(const BialgebraVerdict& v) {
  if (v.compatible) return "compatible on " + std::to_string(v.pairs_checked) + " pairs";
  const auto& [x, y] = *v.counterexample;
  return "x = " + graph_name(x) + ", y = " + graph_name(y) + ": Δ(x·y) = " + to_text(v.lhs) + " but Δ(x)·Δ(y) = " +
         to_text(v.rhs);
}

inline std::vector<TableCell> verify_bialgebra_table(Carrier carrier, int bound) {
  auto table = known_bialgebra_table(carrier);
  std::vector<TableCell> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      BialgebraConfig config{table.columns[c], table.rows[r], carrier, Grading::VertexCount};
      auto verdict = check_bialgebra(config, bound);
      out.push_back({config, table.cells[r][c] == 'y', verdict.compatible, describe(verdict)});
    }
  }
  return out;
}

namespace detail {

// Whether (uε − id)^{*n}(x) vanishes at n = max(|V|,|E|)+1 for every x.
inline std::optional<CanonicalGraph> find_non_unipotent(const BialgebraConfig& config, const GraphUniverse& universe) {
  for (const auto& g : universe.members) {
    int n = std::max(g.n_vertices(), g.n_edges()) + 1;
    if (!endomorphism_power(counit_minus_identity, n, config, GraphSum(g)).empty()) return g;
  }
  return std::nullopt;
}

inline std::string series_certificate(const BialgebraConfig& config, const CanonicalGraph& g) {
  std::string text = "(uε−id)^{*n}(" + graph_name(g) + ") has coefficient";
  Graph power;
  for (int n = 1; n <= 4; ++n) {
    power = disjoint_union(power, g.graph());
    Rational c = endomorphism_power(counit_minus_identity, n, config, GraphSum(g)).coefficient(canonicalize(power));
    text += (n == 1 ? " " : ", ") + to_short_string(c) + " on " + graph_name(canonicalize(power));
  }
  return text + "; the antipode series does not terminate";
}

}  // namespace detail

// A cell is observed Hopf when the bialgebra check passes, the series for
// the antipode terminates on the universe, and the series satisfies the
// antipode axiom there.
inline std::vector<TableCell> verify_hopf_table(Carrier carrier, int bound) {
  auto table = known_hopf_table(carrier);
  auto universe = carrier == Carrier::AllGraphs ? enumerate_graphs(BoundKind::MaxVertices, bound, false)
                                                : enumerate_graphs(BoundKind::MaxEdges, bound, true);
  std::vector<TableCell> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      BialgebraConfig config{table.columns[c], table.rows[r], carrier, Grading::VertexCount};
      TableCell cell{config, table.cells[r][c] == 'y', false, ""};
      auto verdict = check_bialgebra(config, bound);
      if (!verdict.compatible) {
        cell.evidence = "not a bialgebra: " + describe(verdict);
      } else if (auto bad = detail::find_non_unipotent(config, universe)) {
        cell.evidence = detail::series_certificate(config, *bad);
      } else {
        bool axiom = true;
        for (const auto& g : universe.members) {
          GraphSum s_left, s_right;
          for (const auto& [pair, k] : coproduct(config.coproduct, g)) {
            s_left.add_scaled(product(config.product, antipode_series(config, GraphSum(pair.first)), GraphSum(pair.second)), k);
            s_right.add_scaled(product(config.product, GraphSum(pair.first), antipode_series(config, GraphSum(pair.second))), k);
          }
          GraphSum expected = unit(g.is_empty() ? 1 : 0);
          if (s_left != expected || s_right != expected) {
            axiom = false;
            cell.evidence = "antipode axiom fails on " + graph_name(g);
            break;
          }
        }
        cell.observed = axiom;
        if (axiom) cell.evidence = "antipode axiom holds on " + std::to_string(universe.members.size()) + " graphs";
      }
      out.push_back(std::move(cell));
    }
  }
  return out;
}

struct GradingColumn {
  Carrier carrier;
  Grading grading;
};

inline std::array<GradingColumn, 3> grading_columns() {
  return {{{Carrier::AllGraphs, Grading::VertexCount},
           {Carrier::NoIsolated, Grading::EdgeCount},
           {Carrier::NoIsolated, Grading::VertexCount}}};
}

struct GradingCell {
  Operation op;
  GradingColumn column;
  std::optional<GradingBehavior> expected;  // empty: not part of the table
  std::optional<GradingVerdict> observed;
  bool matches() const { return !expected || (observed && observed->behavior == *expected); }
};

// g graded, f filtered, x non-filtered, - not tabulated.
inline std::vector<std::pair<Operation, std::string>> known_grading_table() {
  using P = ProductKind;
  using C = CoproductKind;
  return {{C::DisjointUnion, "ggg"},       {C::DividedPowers, "ggg"},      {C::EdgeShuffle, "-gx"},
          {C::EdgeQuasiShuffle, "-xx"},    {C::VertexShuffle, "g--"},      {C::VertexQuasiShuffle, "x--"},
          {P::DisjointUnion, "ggg"},       {P::DividedPowers, "ggg"},      {P::EdgeShuffle, "-gf"},
          {P::EdgeQuasiShuffle, "-ff"},    {P::VertexShuffle, "g-g"},      {P::VertexQuasiShuffle, "f-f"}};
}

inline std::vector<GradingCell> verify_grading_tables(int vertex_bound, int edge_bound) {
  std::vector<GradingCell> out;
  auto columns = grading_columns();
  for (const auto& [op, row] : known_grading_table()) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      GradingCell cell{op, columns[c], std::nullopt, std::nullopt};
      char mark = row[c];
      if (mark == '-') {
        out.push_back(cell);
        continue;
      }
      cell.expected = mark == 'g' ? GradingBehavior::Graded
                                  : mark == 'f' ? GradingBehavior::Filtered : GradingBehavior::NonFiltered;
      int bound = columns[c].grading == Grading::EdgeCount ? edge_bound : vertex_bound;
      cell.observed = check_grading(op, columns[c].grading, columns[c].carrier, bound);
      out.push_back(std::move(cell));
    }
  }
  return out;
}

struct AntipodeCheck {
  BialgebraConfig config;
  int graphs_checked = 0;
  bool axiom_holds = true;
  bool series_agrees = true;
  bool unipotent = true;
  std::string failure;
};

// Antipode axiom, series agreement and unipotency for every carrier element
// of grade ≤ max_grade in the configuration's grading.
inline AntipodeCheck check_antipode(const BialgebraConfig& config, int max_grade) {
  AntipodeCheck out{config};
  auto universe = graded_universe(config.carrier, config.grading, max_grade);
  for (const auto& g : universe.members) {
    ++out.graphs_checked;
    GraphSum expected = unit(g.is_empty() ? 1 : 0);
    auto [left, right] = antipode_sides(config, g);
    if (left != expected || right != expected) {
      out.axiom_holds = false;
      out.failure = "axiom fails on " + graph_name(g);
      return out;
    }
    if (antipode(config, g) != antipode_series(config, GraphSum(g))) {
      out.series_agrees = false;
      out.failure = "recursion and series differ on " + graph_name(g);
      return out;
    }
    int n = grade(g, config.grading) + 1;
    if (!endomorphism_power(identity_minus_counit, n, config, GraphSum(g)).empty()) {
      out.unipotent = false;
      out.failure = "(id−uε)^{*" + std::to_string(n) + "} does not vanish on " + graph_name(g);
      return out;
    }
  }
  return out;
}

}  // namespace hopfgraph
