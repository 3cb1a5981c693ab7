#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfgraph/hopfgraph.hpp"

namespace hopfgraph::cli {

using nlohmann::ordered_json;

// A file that cannot be opened or read.
class InputError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { Text, Json };

struct CliConfig {
  OutputFormat format = OutputFormat::Text;
  int jobs = 1;
  std::uint64_t seed = 1;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw InputError("cannot read file '" + path + "'");
  return text.str();
}

// A graph argument: a file (.g6 for graph6, anything else an edge list), a
// name such as cherry or K4, "g6:<code>", or names joined by ⊔.
inline Graph parse_graph_argument(const std::string& text) {
  if (auto g = try_named_graph(text)) return *g;
  if (text.rfind("g6:", 0) == 0) return decode_graph6(text.substr(3));
  if (std::filesystem::is_regular_file(text)) {
    auto ext = std::filesystem::path(text).extension().string();
    return parse_graph(read_file(text), ext == ".g6" ? GraphFormat::Graph6 : GraphFormat::EdgeList);
  }
  static const std::string join = "⊔";
  if (text.find(join) != std::string::npos) {
    Graph out;
    std::size_t start = 0;
    while (true) {
      auto pos = text.find(join, start);
      out = disjoint_union(out, parse_graph_argument(text.substr(start, pos - start)));
      if (pos == std::string::npos) break;
      start = pos + join.size();
    }
    return out;
  }
  if (text.find('/') != std::string::npos || text.find('.') != std::string::npos)
    throw InputError("cannot read file '" + text + "'");
  throw DomainError("'" + text + "' is neither a graph name nor a file");
}

// A linear combination such as "edge + 2·cherry - 1/2*g6:Bw"; a bare graph
// argument is the sum with one term.
inline GraphSum parse_sum_argument(const std::string& text) {
  try {
    return as_sum(parse_graph_argument(text));
  } catch (const Error& e) {
    if (!dynamic_cast<const DomainError*>(&e) && !dynamic_cast<const InputError*>(&e)) throw;
    if (text.find(" + ") == std::string::npos && text.find(" - ") == std::string::npos && text.find("·") == std::string::npos &&
        text.find('*') == std::string::npos)
      throw;
  }
  GraphSum out;
  std::string rest = text;
  Rational sign = 1;
  auto trim = [](std::string s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  rest = trim(rest);
  if (!rest.empty() && rest[0] == '-') {
    sign = -1;
    rest = trim(rest.substr(1));
  }
  while (true) {
    auto plus = rest.find(" + "), minus = rest.find(" - ");
    auto cut = std::min(plus, minus);
    std::string term = trim(rest.substr(0, cut));
    Rational coeff = 1;
    std::string graph = term;
    for (const std::string sep : {"·", "*"}) {
      if (auto pos = term.find(sep); pos != std::string::npos) {
        coeff = parse_rational(trim(term.substr(0, pos)));
        graph = trim(term.substr(pos + sep.size()));
        break;
      }
    }
    if (graph.empty()) throw DomainError("empty term in '" + text + "'");
    out.add(canonicalize(parse_graph_argument(graph)), sign * coeff);
    if (cut == std::string::npos) break;
    sign = cut == plus ? 1 : -1;
    rest = rest.substr(cut + 3);
  }
  return out;
}

inline ordered_json graph_json(const CanonicalGraph& g) {
  return {{"name", graph_name(g)}, {"graph6", g.code()}, {"vertices", g.n_vertices()}, {"edges", g.n_edges()}};
}

// Sum terms: {"graph": <graph6>, "name": <text name>, "coeff": "p/q"} in basis order.
inline ordered_json sum_json(const GraphSum& x) {
  auto terms = ordered_json::array();
  for (const auto& [g, c] : x)
    terms.push_back({{"graph", g.code()}, {"name", graph_name(g)}, {"coeff", to_fraction_string(c)}});
  return terms;
}

inline ordered_json tensor_json(const TensorSum& x) {
  auto terms = ordered_json::array();
  for (const auto& [k, c] : x)
    terms.push_back({{"left", k.first.code()},
                     {"right", k.second.code()},
                     {"name", graph_name(k.first) + "⊗" + graph_name(k.second)},
                     {"coeff", to_fraction_string(c)}});
  return terms;
}

inline ordered_json polynomial_json(const ConnectedPolynomial& p) {
  auto terms = ordered_json::array();
  for (const auto& [m, c] : p.terms) {
    auto factors = ordered_json::array();
    for (const auto& f : m) factors.push_back(graph_json(f));
    terms.push_back({{"factors", factors}, {"coeff", to_fraction_string(c)}});
  }
  return terms;
}

inline std::string matrix_text(const BasisMatrix& m) {
  std::vector<std::string> labels;
  for (const auto& g : m.basis) labels.push_back(graph_name(g));
  std::vector<std::vector<std::string>> cells(m.basis.size());
  // Graph names may contain multibyte characters; pad by display width.
  auto display = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
    return n;
  };
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, display(l));
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    for (const auto& x : m.entries[i]) {
      cells[i].push_back(to_short_string(x));
      width = std::max(width, cells[i].back().size());
    }
  auto pad = [&](const std::string& s) { return std::string(width + 2 - std::min(width + 2, display(s)), ' ') + s; };
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, display(l));
  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (const auto& l : labels) out << pad(l);
  out << '\n';
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    out << labels[i] << std::string(label_width - display(labels[i]), ' ');
    for (const auto& c : cells[i]) out << pad(c);
    out << '\n';
  }
  return out.str();
}

inline ordered_json matrix_json(const BasisMatrix& m) {
  auto basis = ordered_json::array();
  for (const auto& g : m.basis) basis.push_back(graph_json(g));
  auto rows = ordered_json::array();
  for (const auto& row : m.entries) {
    auto r = ordered_json::array();
    for (const auto& x : row) r.push_back(to_fraction_string(x));
    rows.push_back(r);
  }
  return {{"direction", m.direction == MatrixDirection::MonomialToGraph ? "monomial-to-graph" : "graph-to-monomial"},
          {"basis", basis},
          {"entries", rows}};
}

inline ordered_json report_json(const SuiteReport& r) {
  auto checks = ordered_json::array();
  for (const auto& l : r.lines) checks.push_back({{"label", l.label}, {"ok", l.ok}, {"detail", l.detail}});
  return {{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}};
}

inline std::string report_text(const SuiteReport& r) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& l : r.lines) width = std::max(width, l.label.size());
  // Counterexample sums can be long; JSON output carries them in full.
  constexpr std::size_t kMaxDetail = 240;
  for (const auto& l : r.lines) {
    std::string detail = l.detail;
    if (detail.size() > kMaxDetail) {
      std::size_t cut = kMaxDetail;
      while (cut > 0 && (static_cast<unsigned char>(detail[cut]) & 0xC0) == 0x80) --cut;
      detail = detail.substr(0, cut) + " ...";
    }
    out << (l.ok ? "ok    " : "FAIL  ") << l.label << std::string(width - l.label.size() + 2, ' ') << detail << '\n';
  }
  out << r.suite << ": " << (r.ok() ? "all checks passed" : "verification failed") << '\n';
  return out.str();
}

inline const std::map<std::string, ProductKind>& product_names() {
  static const std::map<std::string, ProductKind> m = {
      {"union", ProductKind::DisjointUnion},        {"dp", ProductKind::DividedPowers},
      {"shuffle", ProductKind::EdgeShuffle},        {"qs", ProductKind::EdgeQuasiShuffle},
      {"is", ProductKind::VertexShuffle},           {"qis", ProductKind::VertexQuasiShuffle}};
  return m;
}

inline const std::map<std::string, CoproductKind>& coproduct_names() {
  static const std::map<std::string, CoproductKind> m = {
      {"union", CoproductKind::DisjointUnion},      {"dp", CoproductKind::DividedPowers},
      {"shuffle", CoproductKind::EdgeShuffle},      {"qs", CoproductKind::EdgeQuasiShuffle},
      {"is", CoproductKind::VertexShuffle},         {"qis", CoproductKind::VertexQuasiShuffle},
      {"ol", CoproductKind::Overlap}};
  return m;
}

inline const std::map<std::string, CountingMode>& mode_names() {
  static const std::map<std::string, CountingMode> m = {{"ei", CountingMode::EdgeRestricted},
                                                        {"vi", CountingMode::VertexInduced},
                                                        {"hom", CountingMode::Homomorphism},
                                                        {"homdp", CountingMode::HomomorphismDP}};
  return m;
}

inline const std::map<std::string, TranslationKind>& translation_names() {
  static const std::map<std::string, TranslationKind> m = {{"vi-ei", TranslationKind::ViFromEi},
                                                           {"ei-hom", TranslationKind::EiFromHom},
                                                           {"vi-hom", TranslationKind::ViFromHom}};
  return m;
}

inline const std::map<std::string, Grading>& grading_names() {
  static const std::map<std::string, Grading> m = {{"vertices", Grading::VertexCount}, {"edges", Grading::EdgeCount}};
  return m;
}

// Parses and runs one command line (without the program name). Exit codes:
// 0 success, 1 usage, input or domain error, 2 verification failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph counting and the Hopf algebras of graphs", "hopfgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig config;
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"text", OutputFormat::Text},
                                                                              {"json", OutputFormat::Json}}));
  app.add_option("--jobs", config.jobs, "Worker threads for verification sweeps")->check(CLI::Range(1, 256));
  app.add_option("--seed", config.seed, "Seed for randomized sweeps");

  auto checked = [](const auto& names) { return CLI::CheckedTransformer(names); };

  // count
  auto* count_cmd = app.add_subcommand("count", "Count a pattern inside a sample");
  CountingMode count_mode{};
  std::string pattern_arg, sample_arg;
  count_cmd->add_option("--mode", count_mode, "ei, vi, hom or homdp")->required()->transform(checked(mode_names()));
  count_cmd->add_option("--pattern", pattern_arg, "Pattern graph")->required();
  count_cmd->add_option("--sample", sample_arg, "Sample graph")->required();

  // signature
  auto* sig_cmd = app.add_subcommand("signature", "Counting signature of a sample");
  CountingMode sig_mode{};
  std::optional<int> sig_edges, sig_vertices;
  sig_cmd->add_option("--mode", sig_mode, "ei, vi, hom or homdp")->required()->transform(checked(mode_names()));
  sig_cmd->add_option("--sample", sample_arg, "Sample graph")->required();
  auto* sig_e = sig_cmd->add_option("--max-edges", sig_edges, "Truncate to patterns with at most N edges");
  auto* sig_v = sig_cmd->add_option("--max-vertices", sig_vertices, "Truncate to patterns with at most N vertices");
  sig_e->excludes(sig_v);

  // product
  auto* prod_cmd = app.add_subcommand("product", "Product of two graphs or sums");
  ProductKind prod_kind{};
  std::vector<std::string> operands;
  prod_cmd->add_option("--kind", prod_kind, "union, dp, shuffle, qs, is or qis")->required()->transform(checked(product_names()));
  prod_cmd->add_option("operands", operands, "Two graphs or sums")->required()->expected(2);

  // coproduct
  auto* coprod_cmd = app.add_subcommand("coproduct", "Coproduct of a graph or sum");
  CoproductKind coprod_kind{};
  std::string operand;
  coprod_cmd->add_option("--kind", coprod_kind, "union, dp, shuffle, qs, is, qis or ol")
      ->required()
      ->transform(checked(coproduct_names()));
  coprod_cmd->add_option("operand", operand, "Graph or sum")->required();

  // antipode
  auto* anti_cmd = app.add_subcommand("antipode", "Antipode in a Hopf configuration");
  ProductKind anti_product{};
  CoproductKind anti_coproduct{};
  std::optional<Grading> anti_grading;
  anti_cmd->add_option("--product", anti_product, "Product kind")->required()->transform(checked(product_names()));
  anti_cmd->add_option("--coproduct", anti_coproduct, "Coproduct kind")->required()->transform(checked(coproduct_names()));
  anti_cmd->add_option("--grading", anti_grading, "vertices or edges")->transform(checked(grading_names()));
  anti_cmd->add_option("operand", operand, "Graph or sum")->required();

  // translate
  auto* trans_cmd = app.add_subcommand("translate", "Translate between counting semantics");
  TranslationKind trans_kind{};
  bool inverse = false;
  trans_cmd->add_option("--kind", trans_kind, "vi-ei, ei-hom or vi-hom")->required()->transform(checked(translation_names()));
  trans_cmd->add_flag("--inverse", inverse, "Apply the inverse map");
  trans_cmd->add_option("operand", operand, "Graph or sum")->required();

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Polynomial in connected graphs");
  ProductKind dec_product{};
  dec_cmd->add_option("--product", dec_product, "Product kind")->required()->transform(checked(product_names()));
  dec_cmd->add_option("operand", operand, "Graph")->required();

  // basis-matrix
  auto* mat_cmd = app.add_subcommand("basis-matrix", "Change of basis between graphs and connected monomials");
  ProductKind mat_product{};
  std::optional<int> mat_edges, mat_vertices;
  bool mat_inverse = false;
  mat_cmd->add_option("--product", mat_product, "Product kind")->required()->transform(checked(product_names()));
  auto* mat_e = mat_cmd->add_option("--max-edges", mat_edges, "Graphs without isolated vertices, at most N edges");
  auto* mat_v = mat_cmd->add_option("--max-vertices", mat_vertices, "All graphs with at most N vertices");
  mat_e->excludes(mat_v);
  mat_cmd->add_flag("--inverse", mat_inverse, "Print the inverse matrix");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification sweep");
  std::string suite;
  std::optional<int> bound;
  int pairs = 50, sample_vertices = 5;
  ver_cmd->add_option("--suite", suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"bialgebra", "hopf", "grading", "coassoc", "antipode", "character", "chen", "translation"}));
  ver_cmd->add_option("--bound", bound, "Size bound; meaning depends on the suite");
  ver_cmd->add_option("--pairs", pairs, "Random sample pairs (chen)")->check(CLI::Range(1, 100000));
  ver_cmd->add_option("--sample-vertices", sample_vertices, "Largest sample (character, chen, translation)")
      ->check(CLI::Range(0, kHardCap));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  bool json = config.format == OutputFormat::Json;
  auto emit = [&](const ordered_json& j, const std::string& text) {
    if (json)
      out << j.dump(2) << '\n';
    else
      out << text << (text.empty() || text.back() != '\n' ? "\n" : "");
  };

  try {
    if (*count_cmd) {
      Graph pattern = parse_graph_argument(pattern_arg), sample = parse_graph_argument(sample_arg);
      Rational c = count(count_mode, pattern, sample);
      emit({{"command", "count"}, {"mode", to_string(count_mode)}, {"pattern", graph_json(canonicalize(pattern))},
            {"sample", graph_json(canonicalize(sample))}, {"count", to_fraction_string(c)}},
           to_short_string(c));
    } else if (*sig_cmd) {
      Graph sample = parse_graph_argument(sample_arg);
      Signature sig = sig_edges      ? signature(sig_mode, sample, {Grading::EdgeCount, *sig_edges})
                      : sig_vertices ? signature(sig_mode, sample, {Grading::VertexCount, *sig_vertices})
                                     : signature(sig_mode, sample);
      emit({{"command", "signature"},
            {"mode", to_string(sig_mode)},
            {"sample", graph_json(sig.sample)},
            {"truncation", {{"grading", to_string(sig.truncation.grading)}, {"bound", sig.truncation.bound}}},
            {"complete", sig.complete},
            {"terms", sum_json(sig.terms)}},
           to_text(sig.terms));
    } else if (*prod_cmd) {
      GraphSum x = parse_sum_argument(operands[0]), y = parse_sum_argument(operands[1]);
      GraphSum r = product(prod_kind, x, y);
      emit({{"command", "product"}, {"kind", to_string(prod_kind)}, {"terms", sum_json(r)}}, to_text(r));
    } else if (*coprod_cmd) {
      TensorSum r = coproduct(coprod_kind, parse_sum_argument(operand));
      emit({{"command", "coproduct"}, {"kind", to_string(coprod_kind)}, {"terms", tensor_json(r)}}, to_text(r));
    } else if (*anti_cmd) {
      GraphSum x = parse_sum_argument(operand);
      bool isolated = false;
      for (const auto& [g, c] : x) isolated = isolated || g.graph().has_isolated_vertices();
      Carrier carrier = Carrier::AllGraphs;
      if (needs_no_isolated(anti_product) || needs_no_isolated(anti_coproduct) ||
          (!isolated && !is_hopf(anti_product, anti_coproduct, Carrier::AllGraphs)))
        carrier = Carrier::NoIsolated;
      auto gradings = hopf_gradings(anti_product, anti_coproduct, carrier);
      Grading grading = anti_grading ? *anti_grading : (gradings.empty() ? Grading::VertexCount : gradings.front());
      BialgebraConfig cfg{anti_product, anti_coproduct, carrier, grading};
      GraphSum r = antipode(cfg, x);
      emit({{"command", "antipode"}, {"configuration", to_string(cfg)}, {"terms", sum_json(r)}}, to_text(r));
    } else if (*trans_cmd) {
      GraphSum x = parse_sum_argument(operand);
      GraphSum r = inverse ? translate_inverse(trans_kind, x) : translate(trans_kind, x);
      emit({{"command", "translate"}, {"kind", to_string(trans_kind)}, {"inverse", inverse}, {"terms", sum_json(r)}},
           to_text(r));
    } else if (*dec_cmd) {
      auto p = decompose_connected(parse_graph_argument(operand), dec_product);
      emit({{"command", "decompose"}, {"product", to_string(dec_product)}, {"terms", polynomial_json(p)}}, to_text(p));
    } else if (*mat_cmd) {
      if (!mat_edges && !mat_vertices) throw DomainError("basis-matrix needs --max-edges or --max-vertices");
      auto [fwd, inv] = mat_edges ? basis_matrix(mat_product, BoundKind::MaxEdges, *mat_edges)
                                  : basis_matrix(mat_product, BoundKind::MaxVertices, *mat_vertices);
      const auto& m = mat_inverse ? inv : fwd;
      auto j = matrix_json(m);
      j["command"] = "basis-matrix";
      j["product"] = to_string(mat_product);
      emit(j, matrix_text(m));
    } else if (*ver_cmd) {
      SuiteReport report;
      if (suite == "bialgebra") {
        int b = bound.value_or(3);
        report = verify_bialgebra_suite(b, b + 1, config.jobs);
      } else if (suite == "hopf") {
        int b = bound.value_or(3);
        report = verify_hopf_suite(b, b + 1);
      } else if (suite == "grading") {
        int b = bound.value_or(3);
        report = verify_grading_suite(b, b + 1);
      } else if (suite == "coassoc") {
        int b = bound.value_or(3);
        report = verify_algebra_laws_suite(b, b + 1, config.jobs);
      } else if (suite == "antipode") {
        report = verify_antipode_suite(bound.value_or(4));
      } else if (suite == "character") {
        report = verify_character_suite(bound.value_or(3), sample_vertices, config.jobs);
      } else if (suite == "chen") {
        report = verify_chen_suite(pairs, sample_vertices, bound.value_or(4), config.seed);
      } else {
        report = verify_translation_suite(bound.value_or(3), sample_vertices);
      }
      emit(report_json(report), report_text(report));
      return report.ok() ? 0 : 2;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 1;
  } catch (const UnsupportedConfig& e) {
    err << "unsupported configuration: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hopfgraph::cli
