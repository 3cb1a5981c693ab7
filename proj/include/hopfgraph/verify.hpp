#pragma once

#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "basis.hpp"
#include "tables.hpp"
#include "translate.hpp"

namespace hopfgraph {

struct CheckLine {
  std::string label;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool ok() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
};

namespace detail {

// Runs f(i) for i in [0, n) on up to `jobs` threads.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs && static_cast<std::size_t>(w) < n; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::string yes_no(bool b) { return b ? "y" : "n"; }

}  // namespace detail

// Bounds: vertex_bound on graphs with isolated vertices, edge_bound otherwise.
inline SuiteReport verify_bialgebra_suite(int edge_bound, int vertex_bound, int jobs = 1) {
  SuiteReport report{"bialgebra", {}};
  for (Carrier carrier : {Carrier::AllGraphs, Carrier::NoIsolated}) {
    auto table = known_bialgebra_table(carrier);
    int bound = carrier == Carrier::AllGraphs ? vertex_bound : edge_bound;
    std::size_t cols = table.columns.size();
    std::vector<CheckLine> lines(table.rows.size() * cols);
    detail::parallel_for(lines.size(), jobs, [&](std::size_t i) {
      BialgebraConfig config{table.columns[i % cols], table.rows[i / cols], carrier, Grading::VertexCount};
      bool expected = table.cells[i / cols][i % cols] == 'y';
      auto verdict = check_bialgebra(config, bound);
      lines[i] = {to_string(carrier) + " " + to_string(config.product) + "/" + to_string(config.coproduct),
                  verdict.compatible == expected,
                  "expected " + detail::yes_no(expected) + ", observed " + detail::yes_no(verdict.compatible) + ": " +
                      describe(verdict)};
    });
    report.lines.insert(report.lines.end(), lines.begin(), lines.end());
  }
  return report;
}

inline SuiteReport verify_hopf_suite(int edge_bound, int vertex_bound) {
  SuiteReport report{"hopf", {}};
  for (Carrier carrier : {Carrier::AllGraphs, Carrier::NoIsolated}) {
    int bound = carrier == Carrier::AllGraphs ? vertex_bound : edge_bound;
    for (const auto& cell : verify_hopf_table(carrier, bound))
      report.lines.push_back({to_string(carrier) + " " + to_string(cell.config.product) + "/" +
                                  to_string(cell.config.coproduct),
                              cell.matches(),
                              "expected " + detail::yes_no(cell.expected) + ", observed " +
                                  detail::yes_no(cell.observed) + ": " + cell.evidence});
  }
  return report;
}

inline SuiteReport verify_grading_suite(int edge_bound, int vertex_bound) {
  SuiteReport report{"grading", {}};
  for (const auto& cell : verify_grading_tables(vertex_bound, edge_bound)) {
    if (!cell.expected) continue;
    std::string detail = "expected " + to_string(*cell.expected) + ", observed " + to_string(cell.observed->behavior);
    if (!cell.observed->witness_text.empty())
      detail += " (" + cell.observed->witness_text + ")";
    else if (!cell.matches())
      detail += " (no witness within the bound)";
    report.lines.push_back({to_string(cell.op) + " on " + to_string(cell.column.carrier) + " by " +
                                to_string(cell.column.grading),
                            cell.matches(), detail});
  }
  return report;
}

// Coassociativity and cocommutativity of the six coproducts, associativity
// and commutativity of the six products, over graphs of at most edge_bound
// edges (carrier without isolated vertices) or vertex_bound vertices.
inline SuiteReport verify_algebra_laws_suite(int edge_bound, int vertex_bound, int jobs = 1) {
  SuiteReport report{"coassoc", {}};
  auto universe_for = [&](bool no_isolated) {
    return no_isolated ? enumerate_graphs(BoundKind::MaxEdges, edge_bound, true)
                       : enumerate_graphs(BoundKind::MaxVertices, vertex_bound, false);
  };
  const std::vector<CoproductKind> coproducts = {CoproductKind::DisjointUnion,    CoproductKind::DividedPowers,
                                                 CoproductKind::EdgeShuffle,      CoproductKind::EdgeQuasiShuffle,
                                                 CoproductKind::VertexShuffle,    CoproductKind::VertexQuasiShuffle};
  const std::vector<ProductKind> products = {ProductKind::DisjointUnion,    ProductKind::DividedPowers,
                                             ProductKind::EdgeShuffle,      ProductKind::EdgeQuasiShuffle,
                                             ProductKind::VertexShuffle,    ProductKind::VertexQuasiShuffle};
  std::vector<CheckLine> lines(2 * (coproducts.size() + products.size()));
  detail::parallel_for(coproducts.size() + products.size(), jobs, [&](std::size_t i) {
    if (i < coproducts.size()) {
      auto kind = coproducts[i];
      auto universe = universe_for(needs_no_isolated(kind));
      CheckLine assoc{"coassociative " + to_string(kind), true, ""}, comm{"cocommutative " + to_string(kind), true, ""};
      for (const auto& g : universe.members) {
        const auto& d = coproduct(kind, g);
        if (assoc.ok && coproduct_left(kind, d) != coproduct_right(kind, d))
          assoc = {assoc.label, false, "fails on " + graph_name(g)};
        if (comm.ok && swap_factors(d) != d) comm = {comm.label, false, "fails on " + graph_name(g)};
      }
      if (assoc.ok) assoc.detail = std::to_string(universe.members.size()) + " graphs";
      if (comm.ok) comm.detail = std::to_string(universe.members.size()) + " graphs";
      lines[2 * i] = assoc;
      lines[2 * i + 1] = comm;
      return;
    }
    auto kind = products[i - coproducts.size()];
    bool by_edges = needs_no_isolated(kind);
    auto universe = universe_for(by_edges);
    int bound = by_edges ? edge_bound : vertex_bound;
    auto size = [&](const CanonicalGraph& g) { return by_edges ? g.n_edges() : g.n_vertices(); };
    CheckLine assoc{"associative " + to_string(kind), true, ""}, comm{"commutative " + to_string(kind), true, ""};
    long long triples = 0, pairs = 0;
    for (const auto& x : universe.members) {
      for (const auto& y : universe.members) {
        if (size(x) + size(y) > bound) continue;
        ++pairs;
        if (comm.ok && product(kind, x, y) != product(kind, y, x))
          comm = {comm.label, false, "fails on " + graph_name(x) + ", " + graph_name(y)};
        for (const auto& z : universe.members) {
          if (size(x) + size(y) + size(z) > bound) continue;
          ++triples;
          GraphSum left = product(kind, product(kind, x, y), GraphSum(z));
          GraphSum right = product(kind, GraphSum(x), product(kind, y, z));
          if (assoc.ok && left != right)
            assoc = {assoc.label, false, "fails on " + graph_name(x) + ", " + graph_name(y) + ", " + graph_name(z)};
        }
      }
    }
    if (assoc.ok) assoc.detail = std::to_string(triples) + " triples";
    if (comm.ok) comm.detail = std::to_string(pairs) + " pairs";
    lines[2 * i] = assoc;
    lines[2 * i + 1] = comm;
  });
  report.lines = std::move(lines);
  return report;
}

inline SuiteReport verify_antipode_suite(int max_grade) {
  SuiteReport report{"antipode", {}};
  for (const auto& config : hopf_configurations()) {
    auto r = check_antipode(config, max_grade);
    bool ok = r.axiom_holds && r.series_agrees && r.unipotent;
    report.lines.push_back(
        {to_string(config), ok, ok ? std::to_string(r.graphs_checked) + " graphs" : r.failure});
  }
  return report;
}

// Pattern universe used by the counting sweeps: graphs without isolated
// vertices up to `bound` edges, or all graphs up to `bound` vertices for
// vertex-induced counting.
inline GraphUniverse counting_patterns(CountingMode mode, int bound) {
  return mode == CountingMode::VertexInduced ? enumerate_graphs(BoundKind::MaxVertices, bound, false)
                                             : enumerate_graphs(BoundKind::MaxEdges, bound, true);
}

inline const std::array<CountingMode, 4>& all_counting_modes() {
  static const std::array<CountingMode, 4> modes = {CountingMode::EdgeRestricted, CountingMode::VertexInduced,
                                                    CountingMode::Homomorphism, CountingMode::HomomorphismDP};
  return modes;
}

inline SuiteReport verify_character_suite(int pattern_bound, int sample_vertices, int jobs = 1) {
  SuiteReport report{"character", {}};
  auto samples = enumerate_graphs(BoundKind::MaxVertices, sample_vertices, false);
  const auto& modes = all_counting_modes();
  std::vector<CheckLine> lines(modes.size());
  detail::parallel_for(modes.size(), jobs, [&](std::size_t i) {
    auto mode = modes[i];
    auto patterns = counting_patterns(mode, pattern_bound);
    CheckLine line{"character " + to_string(mode), true, ""};
    long long checks = 0;
    for (std::size_t a = 0; a < patterns.members.size() && line.ok; ++a) {
      for (std::size_t b = a; b < patterns.members.size() && line.ok; ++b) {
        for (const auto& s : samples.members) {
          ++checks;
          auto r = check_character(mode, s.graph(), patterns.members[a].graph(), patterns.members[b].graph());
          if (!r.equal) {
            line = {line.label, false,
                    graph_name(patterns.members[a]) + ", " + graph_name(patterns.members[b]) + " in " + graph_name(s) +
                        ": " + to_short_string(r.lhs) + " ≠ " + to_short_string(r.rhs)};
            break;
          }
        }
      }
    }
    if (line.ok) line.detail = std::to_string(checks) + " checks";
    lines[i] = line;
  });
  report.lines = std::move(lines);
  return report;
}

inline SuiteReport verify_chen_suite(int pairs, int sample_vertices, int hom_pattern_vertices, std::uint64_t seed) {
  SuiteReport report{"chen", {}};
  auto samples = enumerate_graphs(BoundKind::MaxVertices, sample_vertices, false);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, samples.members.size() - 1);
  std::vector<std::pair<CanonicalGraph, CanonicalGraph>> chosen;
  for (int i = 0; i < pairs; ++i) chosen.emplace_back(samples.members[pick(rng)], samples.members[pick(rng)]);
  for (auto mode : all_counting_modes()) {
    CheckLine line{"chen " + to_string(mode), true, std::to_string(pairs) + " pairs"};
    for (const auto& [a, b] : chosen) {
      Graph joined = disjoint_union(a.graph(), b.graph());
      Signature combined, direct;
      if (mode == CountingMode::EdgeRestricted || mode == CountingMode::VertexInduced) {
        combined = chen_combine(signature(mode, a.graph()), signature(mode, b.graph()));
        direct = signature(mode, joined);
      } else {
        Truncation t{Grading::VertexCount, hom_pattern_vertices};
        combined = chen_combine(signature(mode, a.graph(), t), signature(mode, b.graph(), t));
        direct = signature(mode, joined, t);
      }
      if (combined.terms != direct.terms) {
        line = {line.label, false, "fails on " + graph_name(a) + " and " + graph_name(b)};
        break;
      }
    }
    report.lines.push_back(line);
  }
  return report;
}

inline SuiteReport verify_translation_suite(int pattern_edges, int sample_vertices) {
  SuiteReport report{"translation", {}};
  auto patterns = enumerate_graphs(BoundKind::MaxEdges, pattern_edges, true);
  auto samples = enumerate_graphs(BoundKind::MaxVertices, sample_vertices, false);
  for (auto kind : {TranslationKind::ViFromEi, TranslationKind::EiFromHom, TranslationKind::ViFromHom}) {
    CheckLine line{"identity " + to_string(kind), true, ""};
    long long checks = 0;
    for (const auto& tau : patterns.members) {
      for (const auto& s : samples.members) {
        ++checks;
        auto r = check_translation_identity(kind, tau.graph(), s.graph());
        if (!r.equal) {
          line = {line.label, false,
                  graph_name(tau) + " in " + graph_name(s) + ": " + to_short_string(r.lhs) + " ≠ " +
                      to_short_string(r.rhs)};
          break;
        }
      }
      if (!line.ok) break;
    }
    if (line.ok) line.detail = std::to_string(checks) + " checks";
    report.lines.push_back(line);
  }
  return report;
}

}  // namespace hopfgraph
