#include "signed_spectra/cli.hpp"

#include "signed_spectra/report_json.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace signed_spectra {
namespace {

constexpr const char* kHeuristicBanner =
    "UPPER BOUND ONLY: psi values are heuristic upper bounds; links that need exact psi are not verified";

struct Settings {
  std::string format = "text";
  double tol = 1e-8;
  int threshold = PsiOptions{}.exact_threshold;
  bool force_exact = false;
  bool force_heuristic = false;
};

/// Search mode for a graph of n vertices. Exact unless the graph is above the
/// threshold or heuristic mode was requested; an explicit --exact is passed
/// through so that psi_global reports the size limit.
BoundOptions bound_options(const Settings& s, int n) {
  BoundOptions o;
  o.tol = s.tol;
  o.psi.exact_threshold = s.threshold;
  if (s.force_heuristic || (!s.force_exact && n > s.threshold)) o.psi.mode = SearchMode::heuristic;
  return o;
}

class Report {
 public:
  explicit Report(std::string command) { json_["command"] = std::move(command); }

  Json& operator[](const char* key) { return json_[key]; }
  void violation(const std::string& what) { violations_.push_back(what); }
  void heuristic() { heuristic_ = true; }
  bool failed() const { return !violations_.empty(); }

  int emit(const Settings& s, std::ostream& out) {
    Json j;
    j["command"] = json_["command"];
    if (heuristic_) j["notice"] = kHeuristicBanner;
    for (const auto& [key, value] : json_.items())
      if (key != "command") j[key] = value;
    j["status"] = failed() ? "violation" : "ok";
    j["violations"] = violations_;
    if (s.format == "json") {
      out << j.dump(2) << '\n';
    } else {
      if (heuristic_) out << kHeuristicBanner << '\n';
      j.erase("notice");
      out << render_text(j);
    }
    return failed() ? exit_violation : exit_ok;
  }

 private:
  Json json_;
  std::vector<std::string> violations_;
  bool heuristic_ = false;
};

void check_balance_equivalence(Report& report, const BalanceCertificate& balance, const IsoperimetricReport& iso,
                               double mu1) {
  const bool zero_mu = mu1 < 1e-9;
  if (zero_mu != balance.balanced) report.violation("mu1 = 0 disagrees with the balance certificate");
  if (iso.exact && (iso.psi == Rational(0)) != balance.balanced) report.violation("psi = 0 disagrees with the balance certificate");
}

void check_certificate(Report& report, const SignedGraph& g, const BalanceCertificate& c) {
  if (c.balanced) {
    const SignedGraph switched = switch_graph(g, *c.switching);
    for (const Edge& e : switched.edges())
      if (e.sign < 0) {
        report.violation("switching certificate leaves a negative edge");
        break;
      }
  } else if (walk_sign(g, c.odd_cycle_edges) != -1) {
    report.violation("odd cycle certificate has positive sign");
  }
}

int cmd_analyze(const std::string& path, const Settings& s, std::ostream& out) {
  const SignedGraph g = load_graph_file(path);
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
  const BoundOptions options = bound_options(s, g.vertex_count());
  Report report("analyze");
  report["graph"] = graph_summary_json(g);

  const BalanceCertificate balance = check_balance(g);
  check_certificate(report, g, balance);
  report["balance"] = balance_json(balance);

  const IsoperimetricReport iso = psi_global(g, options.psi);
  if (!iso.exact) report.heuristic();
  report["isoperimetric"] = isoperimetric_json(iso);

  const SpectralReport spectrum = eigen_spectrum(twisted_laplacian(g), options.eigen);
  report["spectrum"] = spectral_json(spectrum);
  if (spectrum.residual > 1e-8) report.violation("eigenpair residual above 1e-8");
  check_balance_equivalence(report, balance, iso, spectrum.mu1);

  const BoundChainReport chain = evaluate_chain(degree_stats(g).d_max, iso.psi, iso.psi_tilde, spectrum.mu1,
                                                iso.exact, options.tol);
  report["bounds"] = chain_json(chain);
  if (!chain.chain_ok) report.violation("eigenvalue bound chain fails");

  if (g.is_connected()) {
    const SpanningTreeBound tree = spanning_tree_bound(g);
    report["spanning_tree"] = spanning_tree_json(tree);
    if (!tree.holds) report.violation("spanning tree bound fails");
  }

  if (g.regular_degree() >= 1) {
    const AdjacencyBounds adjacency = adjacency_bounds(g, options);
    report["adjacency_bounds"] = adjacency_json(adjacency);
    if (!adjacency.chain_ok) report.violation("adjacency bound chain fails");
    report["lift_assessment"] = lift_assessment_json(lift_signing_assessment(g, options));
  }

  const LiftSpectrumCheck lift = lift_spectrum_property(g, options.tol);
  report["lift_spectrum"] = Json{{"ok", lift.ok}, {"max_gap", lift.max_gap}};
  if (!lift.ok) report.violation("2-lift spectrum is not the union of the signed and unsigned spectra");
  return report.emit(s, out);
}

int cmd_psi(const std::string& path, const Settings& s, std::ostream& out) {
  const SignedGraph g = load_graph_file(path);
  const BoundOptions options = bound_options(s, g.vertex_count());
  Report report("psi");
  report["graph"] = graph_summary_json(g);
  const IsoperimetricReport iso = psi_global(g, options.psi);
  if (!iso.exact) report.heuristic();
  report["isoperimetric"] = isoperimetric_json(iso);

  const FrustrationResult frustration = frustration_index(g, iso.witness_psi);
  report["witness_psi_detail"] = Json{{"boundary", boundary_size(g, iso.witness_psi)},
                                      {"frustration", frustration.value},
                                      {"removal_set", frustration.removal_set},
                                      {"switching", frustration.switching.labels()}};
  if (psi_subset(g, iso.witness_psi) != iso.psi) report.violation("psi witness does not attain psi");
  if (psi_tilde_subset(g, iso.witness_psi_tilde) != iso.psi_tilde)
    report.violation("psi-tilde witness does not attain psi-tilde");
  if (iso.psi_tilde < iso.psi || iso.psi_tilde > iso.psi * 2) report.violation("psi <= psi-tilde <= 2 psi fails");
  return report.emit(s, out);
}

int cmd_spectrum(const std::string& path, const Settings& s, std::ostream& out) {
  const SignedGraph g = load_graph_file(path);
  Report report("spectrum");
  report["graph"] = graph_summary_json(g);
  const SpectralReport laplacian = eigen_spectrum(twisted_laplacian(g));
  const SpectralReport adjacency = eigen_spectrum(signed_adjacency(g));
  report["twisted_laplacian"] = spectral_json(laplacian);
  report["signed_adjacency"] = spectral_json(adjacency);
  if (std::max(laplacian.residual, adjacency.residual) > 1e-8) report.violation("eigenpair residual above 1e-8");
  if (laplacian.mu1 < -s.tol) report.violation("twisted Laplacian has a negative eigenvalue");
  return report.emit(s, out);
}

int cmd_balance(const std::string& path, const Settings& s, std::ostream& out) {
  const SignedGraph g = load_graph_file(path);
  Report report("balance");
  report["graph"] = graph_summary_json(g);
  const BalanceCertificate balance = check_balance(g);
  check_certificate(report, g, balance);
  report["balance"] = balance_json(balance);
  if (balance.balanced) {
    const CutSet cut = negative_cut_set(g);
    report["negative_cut"] = Json{{"s", subset_json(cut.s)}, {"t", subset_json(cut.t)}};
  }
  return report.emit(s, out);
}

int cmd_bounds(const std::string& path, const Settings& s, std::ostream& out) {
  const SignedGraph g = load_graph_file(path);
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
  const BoundOptions options = bound_options(s, g.vertex_count());
  Report report("bounds");
  report["graph"] = graph_summary_json(g);
  const BoundChainReport chain = theorem_bounds(g, options);
  if (!chain.exact) report.heuristic();
  report["bounds"] = chain_json(chain);
  if (!chain.chain_ok) report.violation("eigenvalue bound chain fails");
  if (g.is_connected()) {
    const SpanningTreeBound tree = spanning_tree_bound(g);
    report["spanning_tree"] = spanning_tree_json(tree);
    if (!tree.holds) report.violation("spanning tree bound fails");
  }
  if (g.regular_degree() >= 1) {
    const AdjacencyBounds adjacency = adjacency_bounds(g, options);
    report["adjacency_bounds"] = adjacency_json(adjacency);
    if (!adjacency.chain_ok) report.violation("adjacency bound chain fails");
  }
  return report.emit(s, out);
}

int cmd_lift(const std::string& path, const std::string& out_path, const Settings& s, std::ostream& out) {
  const SignedGraph g = load_graph_file(path);
  const LiftGraph lift = two_lift(g);
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  file << serialize_graph(lift.graph);
  if (!file) throw std::runtime_error("write failed for " + out_path);

  Report report("lift");
  report["graph"] = graph_summary_json(g);
  report["lift"] = graph_summary_json(lift.graph);
  report["output"] = out_path;
  const LiftSpectrumCheck check = lift_spectrum_property(g, s.tol);
  report["spectrum_union"] = lift_check_json(check);
  if (!check.ok) report.violation("2-lift spectrum is not the union of the signed and unsigned spectra");
  return report.emit(s, out);
}

int analyze_complex(const std::string& command, const Complex& x, int k, const Settings& s, std::ostream& out) {
  if (k < 0 || k > x.top_dimension())
    throw std::invalid_argument("degree " + std::to_string(k) + " outside 0.." + std::to_string(x.top_dimension()));
  Report report(command);
  Json summary{{"kind", x.kind() == Complex::Kind::simplicial ? "simplicial" : "cubical"},
               {"dimension", x.top_dimension()}};
  Json counts = Json::array();
  for (int d = 0; d <= x.top_dimension(); ++d) counts.push_back(x.cell_count(d));
  summary["cell_counts"] = counts;
  if (x.kind() == Complex::Kind::cubical) summary["torus_shape"] = x.torus_shape();
  report["complex"] = summary;
  report["degree"] = k;

  bool boundary_ok = true;
  for (int d = 1; d < x.top_dimension(); ++d)
    if (!(boundary_matrix(x, d) * boundary_matrix(x, d + 1)).is_zero()) boundary_ok = false;
  report["boundary_squared_zero"] = boundary_ok;
  if (!boundary_ok) report.violation("boundary of boundary is not zero");

  if (k >= 1 && k < x.top_dimension()) {
    const IntMatrix down = boundary_matrix(x, k);
    const IntMatrix up = boundary_matrix(x, k + 1);
    const bool orthogonal = (down.transpose() * down * (up * up.transpose())).is_zero();
    report["summands_orthogonal"] = orthogonal;
    if (!orthogonal) report.violation("the two summands of the Laplacian do not annihilate each other");
  }

  const SpectralReport spectrum = eigen_spectrum(higher_laplacian(x, k));
  report["laplacian"] = spectral_json(spectrum);
  if (spectrum.residual > 1e-8) report.violation("eigenpair residual above 1e-8");

  Json betti = Json::array();
  for (int d = 0; d <= x.top_dimension(); ++d) {
    try {
      const BettiNumber b = betti_number(x, d);
      betti.push_back(b.value);
      if (d == k) {
        report["betti"] = betti_json(b);
        if ((spectrum.mu1 < 1e-8) != (b.value > 0)) report.violation("mu1 = 0 disagrees with homology");
      }
    } catch (const std::runtime_error& e) {
      betti.push_back(nullptr);
      report.violation(e.what());
    }
  }
  report["betti_numbers"] = betti;

  const BoundOptions options = bound_options(s, static_cast<int>(x.cell_count(k)));
  const std::optional<int> ell = valency_default(x, k);
  report["valency_default"] = ell ? Json(*ell) : Json(nullptr);
  if (ell) {
    const CorollaryReport corollary = corollary_bounds_k(x, k, options);
    if (!corollary.graph_chain.exact) report.heuristic();
    report["corollary"] = corollary_json(corollary);
    if (!corollary.identity_ok) report.violation("valency identity fails");
    if (!corollary.chain_ok) report.violation("shifted bound chain fails");
    if (!corollary.graph_chain.chain_ok) report.violation("bound chain of the degree-k graph fails");
    if (!corollary.simplification_ok) report.violation("d_max - l differs from the cell degree");
  }

  const RayleighPsiBound rayleigh = rayleigh_psi_bound(x, k, options);
  if (!rayleigh.psi_exact) report.heuristic();
  report["rayleigh_psi_bound"] = rayleigh_json(rayleigh);
  if (rayleigh.verified && !rayleigh.ok) report.violation("mu1 <= 2 K psi fails");

  if (x.kind() == Complex::Kind::cubical && k == 1 && x.torus_shape().size() >= 2) {
    Json examples = Json::array();
    for (int axis = 1; axis <= static_cast<int>(x.torus_shape().size()); ++axis) {
      const TorusRayleigh t = torus_rayleigh_example(x.torus_shape(), axis);
      Json j = torus_example_json(t);
      j["axis"] = axis;
      examples.push_back(j);
      if (!t.kernel_ok) report.violation("a translate chain is not harmonic");
      if (std::abs(t.quotient - t.expected) > 1e-9)
        report.violation("torus Rayleigh quotient differs from its closed form on axis " + std::to_string(axis));
    }
    report["torus_example"] = examples;
  }
  return report.emit(s, out);
}

std::vector<int> parse_kvec(const std::string& text) {
  std::vector<int> kvec;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw std::invalid_argument("bad torus side '" + tok + "'");
    kvec.push_back(k);
  }
  if (kvec.empty()) throw std::invalid_argument("empty torus shape");
  return kvec;
}

void verify_chain(Report& report, const nlohmann::json& b, double tol) {
  const Rational psi = rational_from_json(b.at("psi"));
  const Rational psi_tilde = rational_from_json(b.at("upper_main"));
  const Rational loose = rational_from_json(b.at("upper_loose"));
  const BoundChainReport chain = evaluate_chain(b.at("d_max").get<int>(), psi, psi_tilde, b.at("mu1").get<double>(),
                                                b.at("exact").get<bool>(), tol);
  report["bounds"] = chain_json(chain);
  if (!chain.chain_ok) report.violation("eigenvalue bound chain fails");
  if (loose != psi * 2) report.violation("upper_loose is not 2 psi");
  if (b.at("chain_ok").get<bool>() != chain.chain_ok) report.violation("stored chain_ok disagrees with the numbers");
}

void verify_rationals(Report& report, const nlohmann::json& j, const std::string& where) {
  if (j.is_object()) {
    if (j.size() == 3 && j.contains("num") && j.contains("den") && j.contains("value")) {
      const double value = to_double(rational_from_json(j));
      if (!j["value"].is_number() || std::abs(j["value"].get<double>() - value) > 1e-12 * std::max(1.0, std::abs(value)))
        report.violation("decimal of " + where + " does not match its fraction");
      return;
    }
    for (const auto& [key, value] : j.items()) verify_rationals(report, value, where.empty() ? key : where + "." + key);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) verify_rationals(report, j[i], where + "[" + std::to_string(i) + "]");
  }
}

int cmd_verify(const std::string& path, const Settings& s, std::ostream& out) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  Report report("verify");
  report["source"] = doc.value("command", "");
  bool checked = false;
  try {
    verify_rationals(report, doc, "");
    if (doc.contains("bounds")) {
      verify_chain(report, doc["bounds"], s.tol);
      checked = true;
    }
    if (doc.contains("adjacency_bounds")) {
      const auto& a = doc["adjacency_bounds"];
      const double lower2 = a.at("lower2"), lower1 = a.at("lower1"), lambda1 = a.at("lambda1"), upper = a.at("upper");
      const bool ok = a.at("exact").get<bool>()
                          ? lower2 <= lower1 + s.tol && lower1 <= lambda1 + s.tol && lambda1 <= upper + s.tol
                          : lower1 <= lambda1 + s.tol;
      report["adjacency_chain_ok"] = ok;
      if (!ok) report.violation("adjacency bound chain fails");
      checked = true;
    }
    if (doc.contains("balance") && doc.contains("isoperimetric") && doc.contains("spectrum")) {
      const bool balanced = doc["balance"].at("balanced").get<bool>();
      const bool zero_mu = doc["spectrum"].at("mu1").get<double>() < 1e-9;
      const bool exact = doc["isoperimetric"].at("exact").get<bool>();
      const bool zero_psi = rational_from_json(doc["isoperimetric"].at("psi")) == Rational(0);
      const bool ok = zero_mu == balanced && (!exact || zero_psi == balanced);
      report["balance_equivalence_ok"] = ok;
      if (!ok) report.violation("balance, mu1 = 0 and psi = 0 disagree");
      checked = true;
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  if (!checked) throw std::invalid_argument("report has no checkable bounds");
  return report.emit(s, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isoperimetric constants and twisted Laplacian spectra of signed graphs", "signed-spectra"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", settings.tol, "Tolerance for comparing bounds with eigenvalues")
      ->check(CLI::PositiveNumber);
  app.add_option("--threshold", settings.threshold, "Largest vertex count for exact psi")
      ->envname("SIGNED_SPECTRA_THRESHOLD")
      ->check(CLI::NonNegativeNumber);

  std::string file, out_path, shape;
  int degree = 0;
  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "Full report: balance, psi, spectrum, bounds");
  analyze->add_option("file", file, "Signed graph file")->required();
  analyze->callback([&] { action = [&] { return cmd_analyze(file, settings, out); }; });

  auto* psi = app.add_subcommand("psi", "Isoperimetric constants psi and psi-tilde with witnesses");
  psi->add_option("file", file, "Signed graph file")->required();
  auto* exact_flag = psi->add_flag("--exact", settings.force_exact, "Exact search (fails above the threshold)");
  psi->add_flag("--heuristic", settings.force_heuristic, "Local search; values are upper bounds")->excludes(exact_flag);
  psi->callback([&] { action = [&] { return cmd_psi(file, settings, out); }; });

  auto* spectrum = app.add_subcommand("spectrum", "Twisted Laplacian and signed adjacency spectra");
  spectrum->add_option("file", file, "Signed graph file")->required();
  spectrum->callback([&] { action = [&] { return cmd_spectrum(file, settings, out); }; });

  auto* balance = app.add_subcommand("balance", "Balance certificate");
  balance->add_option("file", file, "Signed graph file")->required();
  balance->callback([&] { action = [&] { return cmd_balance(file, settings, out); }; });

  auto* bounds = app.add_subcommand("bounds", "Eigenvalue bound chains");
  bounds->add_option("file", file, "Signed graph file")->required();
  bounds->callback([&] { action = [&] { return cmd_bounds(file, settings, out); }; });

  auto* lift = app.add_subcommand("lift", "Write the 2-lift and compare spectra");
  lift->add_option("file", file, "Signed graph file")->required();
  lift->add_option("--out", out_path, "Destination for the lift")->required();
  lift->callback([&] { action = [&] { return cmd_lift(file, out_path, settings, out); }; });

  auto* complex = app.add_subcommand("complex", "Higher Laplacian analysis of a complex file");
  complex->add_option("file", file, "Complex file")->required();
  complex->add_option("--degree", degree, "Cell dimension k")->required();
  complex->callback([&] {
    action = [&] { return analyze_complex("complex", load_complex_file(file), degree, settings, out); };
  });

  auto* torus = app.add_subcommand("torus", "Higher Laplacian analysis of a cubical torus");
  torus->add_option("shape", shape, "Side lengths k1,k2,...")->required();
  torus->add_option("--degree", degree, "Cell dimension k")->required();
  torus->callback([&] {
    action = [&] { return analyze_complex("torus", cubical_torus(parse_kvec(shape)), degree, settings, out); };
  });

  auto* verify = app.add_subcommand("verify", "Re-check the inequalities recorded in a JSON report");
  verify->add_option("file", file, "JSON report")->required();
  verify->callback([&] { action = [&] { return cmd_verify(file, settings, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    err << "invariant violated: " << e.what() << '\n';
    return exit_violation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_usage;
}

}  // namespace signed_spectra
