#include "graphrel/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "graphrel/class_scan.hpp"
#include "graphrel/counts.hpp"
#include "graphrel/fixtures.hpp"
#include "graphrel/graph_io.hpp"
#include "graphrel/mc.hpp"
#include "graphrel/order.hpp"
#include "graphrel/serialize.hpp"
#include "graphrel/tutte.hpp"

namespace graphrel::cli {

namespace {

// Raised when a verdict-negative outcome was requested to fail the run.
struct VerdictNegative {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write \"" + path + "\"");
  out << text;
}

int default_workers() {
  if (const char* env = std::getenv("GRAPHREL_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace

SimpleGraph load_graph(const std::string& source) {
  if (source.starts_with("fixture:")) return fixtures::by_name(source.substr(8));
  if (source.starts_with("g6:")) return parse_graph6(source.substr(3));
  if (source.starts_with("file:")) return parse_edge_list(read_file(source.substr(5)));
  if (std::filesystem::is_regular_file(source)) return parse_edge_list(read_file(source));
  return parse_graph6(source);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tutte/Whitney polynomials, spanning-subgraph counts and reliability orders"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // poly
  std::string poly_graph;
  bool poly_whitney = false;
  std::string poly_method = "dc";
  auto* poly = app.add_subcommand("poly", "Tutte or Whitney polynomial as JSON");
  poly->add_option("--graph", poly_graph, "graph source")->required();
  auto* tutte_flag = poly->add_flag("--tutte", "Tutte polynomial (default)");
  poly->add_flag("--whitney", poly_whitney, "Whitney polynomial")->excludes(tutte_flag);
  poly->add_option("--method", poly_method, "dc or expansion")->check(CLI::IsMember({"dc", "expansion"}));

  // counts
  std::string counts_graph;
  auto* counts = app.add_subcommand("counts", "N-table, mu-vector, t_k and lambda^(k)");
  counts->add_option("--graph", counts_graph, "graph source")->required();

  // rel
  std::string rel_graph;
  std::string rel_against;
  int rel_k = 1;
  std::string rel_p;
  bool rel_via_tutte = false;
  int rel_depth = 30;
  auto* rel = app.add_subcommand("rel", "Exact k-reliability at a rational p");
  rel->add_option("--graph", rel_graph, "graph source")->required();
  rel->add_option("--k", rel_k, "component bound")->required();
  rel->add_option("--p", rel_p, "edge survival probability a/b")->required();
  rel->add_flag("--via-tutte", rel_via_tutte, "also evaluate through the Tutte polynomial (k = 1)");
  rel->add_option("--against", rel_against, "certify R_G - R_H >= 0 on [0, 1] against this graph");
  rel->add_option("--max-depth", rel_depth, "subdivision depth for --against");

  // compare
  std::string cmp_g;
  std::string cmp_h;
  std::string cmp_order = "whitney";
  auto* compare = app.add_subcommand("compare", "Decide h <= g in the Whitney or Tutte order");
  compare->set_help_flag("--help", "Print this help message and exit");
  compare->add_option("--g", cmp_g, "dominating candidate")->required();
  compare->add_option("--h", cmp_h, "dominated candidate")->required();
  compare->add_option("--order", cmp_order, "whitney or tutte")->check(CLI::IsMember({"whitney", "tutte"}));

  // scan
  ClassSpec scan_spec;
  ScanConfig scan_cfg;
  scan_cfg.workers = default_workers();
  std::size_t scan_limit = 0;
  std::string scan_output;
  std::string scan_csv;
  bool scan_section4 = false;
  auto* scan_cmd = app.add_subcommand("scan", "Classify every isomorphism class of C_{n,m}");
  scan_cmd->add_option("--n", scan_spec.n, "vertices")->required();
  scan_cmd->add_option("--m", scan_spec.m, "edges")->required();
  scan_cmd->add_option("--workers", scan_cfg.workers, "worker threads (default $GRAPHREL_WORKERS or 1)");
  scan_cmd->add_flag("--full", scan_cfg.full, "compare all pairs and report failure counts");
  scan_cmd->add_flag("--prefilter", scan_cfg.prefilter, "certify only members that are strong by N-tables");
  scan_cmd->add_option("--limit", scan_limit, "scan only the first L members (smoke mode)");
  scan_cmd->add_option("--memo-entries", scan_cfg.memo_entries, "deletion-contraction memo bound");
  scan_cmd->add_option("--output", scan_output, "write the JSON report here instead of stdout");
  scan_cmd->add_option("--csv", scan_csv, "write the CSV digest here");
  scan_cmd->add_flag("--check-maxima", scan_section4, "append invariant-maxima checks to the report");

  // certify
  std::string cert_graph;
  ClassSpec cert_spec;
  std::string cert_order = "whitney";
  bool cert_expect = false;
  bool cert_full = false;
  auto* certify = app.add_subcommand("certify", "Test a graph for Whitney/Tutte maximality over C_{n,m}");
  certify->add_option("--graph", cert_graph, "graph source")->required();
  certify->add_option("--n", cert_spec.n, "vertices")->required();
  certify->add_option("--m", cert_spec.m, "edges")->required();
  certify->add_option("--order", cert_order, "whitney or tutte")->check(CLI::IsMember({"whitney", "tutte"}));
  certify->add_flag("--expect-maximum", cert_expect, "exit 1 when a counterexample exists");
  certify->add_flag("--full", cert_full, "collect every counterexample");

  // mc
  std::string mc_graph;
  int mc_k = 1;
  std::string mc_p;
  std::uint64_t mc_trials = 100000;
  std::uint64_t mc_seed = 1;
  bool mc_cross = false;
  double mc_sigmas = 4.0;
  std::string mc_exact;
  int mc_workers = default_workers();
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of R^(k)(p)");
  mc->add_option("--graph", mc_graph, "graph source")->required();
  mc->add_option("--k", mc_k, "component bound")->required();
  mc->add_option("--p", mc_p, "edge survival probability a/b")->required();
  mc->add_option("--trials", mc_trials, "number of trials");
  mc->add_option("--seed", mc_seed, "RNG seed");
  mc->add_flag("--cross-check", mc_cross, "compare against the exact value");
  mc->add_option("--sigmas", mc_sigmas, "tolerance in standard errors");
  mc->add_option("--exact", mc_exact, "override the exact value a/b");
  mc->add_option("--workers", mc_workers, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return kUsage;
  }

  try {
    if (poly->parsed()) {
      const SimpleGraph g = load_graph(poly_graph);
      BivarPoly p;
      if (poly_method == "expansion") {
        p = poly_whitney ? whitney_expansion(g) : tutte_expansion(g);
      } else {
        p = tutte_dc(g);
        if (poly_whitney) p = p.shifted(1, 1);
      }
      emit(out, {{"graph", to_graph6(g)},
                 {"polynomial", poly_whitney ? "whitney" : "tutte"},
                 {"method", poly_method},
                 {"text", p.to_string()},
                 {"terms", to_json(p)}});
    } else if (counts->parsed()) {
      const SimpleGraph g = load_graph(counts_graph);
      if (!is_connected(g)) throw std::invalid_argument("counts requires a connected graph");
      const NTable t = ntable_from_whitney(whitney(g), g.order(), g.size());
      Json ts = Json::array();
      Json lambdas = Json::array();
      for (int k = 1; k <= g.order(); ++k) {
        ts.push_back(t_k(t, k).get_str());
        const auto l = lambda_k(t, k);
        lambdas.push_back(l ? Json(*l) : Json(nullptr));
      }
      Json mu = Json::array();
      for (const auto& v : mu_vector(t)) mu.push_back(v.get_str());
      emit(out, {{"graph", to_graph6(g)},
                 {"n", g.order()},
                 {"m", g.size()},
                 {"ntable", to_json(t)},
                 {"mu", mu},
                 {"t", ts},
                 {"lambda", lambdas}});
    } else if (rel->parsed()) {
      const SimpleGraph g = load_graph(rel_graph);
      const mpq_class p = parse_rational(rel_p);
      if (!is_connected(g)) throw std::invalid_argument("rel requires a connected graph");
      if (rel_k < 1 || rel_k > g.order()) throw std::invalid_argument("--k must lie in [1, n]");
      const BivarPoly tutte = tutte_dc(g);
      const NTable t = ntable_from_whitney(tutte.shifted(1, 1), g.order(), g.size());
      const ReliabilityPoly rp = reliability(t, rel_k);
      const mpq_class value = rel_eval(rp, p);
      Json j = {{"graph", to_graph6(g)}, {"k", rel_k}, {"p", rational_string(p)}, {"value", rational_string(value)}};
      Json coeffs = Json::array();
      for (const auto& c : rp.bernstein) coeffs.push_back(c.get_str());
      j["bernstein"] = coeffs;
      if (rel_via_tutte) {
        if (rel_k != 1) throw std::invalid_argument("--via-tutte applies to k = 1 only");
        const mpq_class other = reliability_via_tutte(g, tutte, p);
        j["via_tutte"] = rational_string(other);
        j["agree"] = other == value;
      }
      if (!rel_against.empty()) {
        const SimpleGraph h = load_graph(rel_against);
        if (h.order() != g.order() || h.size() != g.size()) throw DimensionError("--against graph is in another class");
        if (!is_connected(h)) throw std::invalid_argument("--against requires a connected graph");
        const NTable th = ntable_from_whitney(whitney(h), h.order(), h.size());
        const ReliabilityPoly rh = reliability(th, rel_k);
        std::vector<mpq_class> delta(rp.bernstein.size());
        for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = mpq_class(rp.bernstein[i] - rh.bernstein[i]);
        const BernsteinResult cert = bernstein_certify(delta, rel_depth);
        const char* verdict = cert.verdict == BernsteinVerdict::NonnegativeOn01 ? "NonnegativeOn01"
                              : cert.verdict == BernsteinVerdict::NegativeWitness ? "NegativeWitness"
                                                                                  : "Unknown";
        j["against"] = {{"graph", to_graph6(h)},
                        {"certificate", verdict},
                        {"depth", cert.depth},
                        {"witness", cert.witness ? Json(rational_string(*cert.witness)) : Json(nullptr)}};
      }
      emit(out, j);
    } else if (compare->parsed()) {
      const SimpleGraph g = load_graph(cmp_g);
      const SimpleGraph h = load_graph(cmp_h);
      const OrderResult r = parse_order(cmp_order) == Order::Whitney ? whitney_compare(g, h) : tutte_compare(g, h);
      Json j = to_json(r);
      j["g"] = to_graph6(g);
      j["h"] = to_graph6(h);
      emit(out, j);
    } else if (scan_cmd->parsed()) {
      if (scan_limit > 0) scan_cfg.limit = scan_limit;
      const ClassReport report = scan(scan_spec, scan_cfg);
      Json j = to_json(report);
      if (scan_section4) j["invariant_maxima"] = to_json(verify_section4(report));
      if (scan_output.empty()) {
        emit(out, j);
      } else {
        write_text(scan_output, j.dump(2) + "\n");
      }
      if (!scan_csv.empty()) write_text(scan_csv, to_csv(report));
      if (!report.theorem2_check) {
        err << error_json("consistency", "strong set differs from Whitney-maximum set").dump() << '\n';
        return kVerdictNegative;
      }
    } else if (certify->parsed()) {
      const SimpleGraph g = load_graph(cert_graph);
      if (g.order() != cert_spec.n || g.size() != cert_spec.m) {
        throw DimensionError("graph is not in C_{" + std::to_string(cert_spec.n) + "," +
                             std::to_string(cert_spec.m) + "}");
      }
      const auto members = enumerate_class(cert_spec);
      TutteMemo memo;
      const MaximumResult r = certify_maximum(g, members, parse_order(cert_order), memo, cert_full);
      Json ces = Json::array();
      for (const auto& c : r.counterexamples) {
        Json cj = to_json(c.result);
        cj["graph6"] = to_graph6(c.graph);
        ces.push_back(std::move(cj));
      }
      emit(out, {{"graph", to_graph6(g)},
                 {"order", cert_order},
                 {"class", {{"n", cert_spec.n}, {"m", cert_spec.m}}},
                 {"class_size", members.size()},
                 {"verdict", r.maximum ? "Maximum" : "Counterexample"},
                 {"counterexamples", ces}});
      if (!r.maximum && cert_expect) throw VerdictNegative{};
    } else if (mc->parsed()) {
      const SimpleGraph g = load_graph(mc_graph);
      const mpq_class p = parse_rational(mc_p);
      Json j;
      if (mc_cross || !mc_exact.empty()) {
        std::optional<mpq_class> exact;
        if (!mc_exact.empty()) exact = parse_rational(mc_exact);
        const CrossCheckResult r = cross_check(g, mc_k, p, mc_trials, mc_seed, mc_sigmas, exact, mc_workers);
        j = to_json(r.estimate);
        j["exact"] = rational_string(r.exact);
        j["sigmas"] = mc_sigmas;
        j["deviation_sigmas"] = r.deviation;
        j["verdict"] = r.pass ? "pass" : "fail";
        emit(out, j);
        if (!r.pass) throw VerdictNegative{};
      } else {
        emit(out, to_json(estimate(g, mc_k, p, mc_trials, mc_seed, mc_workers)));
      }
    }
  } catch (const VerdictNegative&) {
    return kVerdictNegative;
  } catch (const BudgetError& e) {
    err << error_json("budget", e.what()).dump() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    Json j = error_json("parse", e.what());
    j["offset"] = e.offset();
    err << j.dump() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << error_json("dimension", e.what()).dump() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace graphrel::cli
