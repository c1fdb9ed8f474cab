#include "signed_spectra/report_json.hpp"

#include <sstream>

namespace signed_spectra {

Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"value", to_double(r)}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_number_integer() ||
      !j["den"].is_number_integer())
    throw std::invalid_argument("expected a rational {num, den}");
  const auto den = j["den"].get<std::int64_t>();
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(j["num"].get<std::int64_t>(), den);
}

Json subset_json(const VertexSubset& s) { return Json(s.members()); }

Json graph_summary_json(const SignedGraph& g) {
  const DegreeStats stats = degree_stats(g);
  const int regular = g.regular_degree();
  return Json{{"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"d_max", stats.d_max},
              {"d_min", stats.d_min},
              {"d_ave", rational_json(stats.d_ave)},
              {"connected", g.is_connected()},
              {"regular", regular >= 0 ? Json(regular) : Json(nullptr)}};
}

Json balance_json(const BalanceCertificate& c) {
  Json j{{"balanced", c.balanced}};
  j["switching"] = c.switching ? Json(c.switching->labels()) : Json(nullptr);
  j["odd_cycle"] = c.odd_cycle;
  j["odd_cycle_edges"] = c.odd_cycle_edges;
  return j;
}

Json isoperimetric_json(const IsoperimetricReport& r) {
  return Json{{"exact", r.exact},
              {"psi", rational_json(r.psi)},
              {"psi_tilde", rational_json(r.psi_tilde)},
              {"witness_psi", subset_json(r.witness_psi)},
              {"witness_psi_tilde", subset_json(r.witness_psi_tilde)}};
}

Json spectral_json(const SpectralReport& r) {
  return Json{{"mu1", r.mu1}, {"eigenvalues", r.eigenvalues}, {"residual", r.residual}};
}

Json chain_json(const BoundChainReport& r) {
  return Json{{"d_max", r.d_max},
              {"psi", rational_json(r.psi)},
              {"lower_taylor", r.lower_taylor},
              {"lower_main", r.lower_main},
              {"mu1", r.mu1},
              {"upper_main", rational_json(r.upper_main)},
              {"upper_loose", rational_json(r.upper_loose)},
              {"slack", r.slack},
              {"verified", r.verified},
              {"exact", r.exact},
              {"chain_ok", r.chain_ok}};
}

Json adjacency_json(const AdjacencyBounds& r) {
  return Json{{"ell", r.ell},
              {"lower2", r.lower2},
              {"lower1", r.lower1},
              {"lambda1", r.lambda1},
              {"upper", r.upper},
              {"lambda_min", r.lambda_min},
              {"bipartite", r.bipartite},
              {"smallest_eigenvalue_unbounded", r.smallest_eigenvalue_unbounded},
              {"exact", r.exact},
              {"chain_ok", r.chain_ok}};
}

Json spanning_tree_json(const SpanningTreeBound& r) {
  return Json{{"psi_v", rational_json(r.psi_v)}, {"bound", rational_json(r.bound)}, {"holds", r.holds}};
}

Json lift_assessment_json(const LiftAssessment& r) {
  Json j{{"ell", r.ell}, {"lambda1", r.lambda1}, {"target", r.target}, {"meets_target", r.meets_target}};
  j["obstruction"] = r.obstruction ? subset_json(*r.obstruction) : Json(nullptr);
  j["obstruction_d_coh"] = r.obstruction ? rational_json(r.obstruction_d_coh) : Json(nullptr);
  j["psi_v"] = rational_json(r.psi_v);
  j["near_ceiling"] = r.near_ceiling;
  j["psi_condition"] = r.psi_condition;
  j["exact"] = r.exact;
  return j;
}

Json lift_check_json(const LiftSpectrumCheck& r) {
  return Json{{"ok", r.ok},
              {"max_gap", r.max_gap},
              {"lift_spectrum", r.lift_spectrum},
              {"base_spectrum", r.base_spectrum},
              {"signed_spectrum", r.signed_spectrum}};
}

Json betti_json(const BettiNumber& b) {
  return Json{{"value", b.value}, {"from_eigenvalues", b.from_eigenvalues}, {"from_rank", b.from_rank}};
}

Json corollary_json(const CorollaryReport& r) {
  return Json{{"ell", r.ell},
              {"mu1", r.mu1},
              {"lower_shifted", r.lower_shifted},
              {"upper_shifted", rational_json(r.upper_shifted)},
              {"upper_loose_shifted", rational_json(r.upper_loose_shifted)},
              {"chain_ok", r.chain_ok},
              {"betti", r.betti},
              {"homology_ok", r.homology_ok},
              {"identity_ok", r.identity_ok},
              {"simplification_ok", r.simplification_ok},
              {"graph_chain", chain_json(r.graph_chain)}};
}

Json rayleigh_json(const RayleighPsiBound& r) {
  return Json{{"lhs", r.lhs},
              {"rhs", r.rhs},
              {"k_constant", r.k_constant},
              {"psi", rational_json(r.psi)},
              {"psi_exact", r.psi_exact},
              {"verified", r.verified},
              {"ok", r.ok}};
}

Json torus_example_json(const TorusRayleigh& r) {
  return Json{{"quotient", r.quotient},
              {"expected", rational_json(r.expected_exact)},
              {"kernel_ok", r.kernel_ok}};
}

namespace {

bool is_rational(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("num") && j.contains("den") && j.contains("value");
}

std::string scalar_text(const Json& j) {
  if (is_rational(j)) {
    std::string s = j["num"].dump();
    if (j["den"].get<std::int64_t>() != 1) s += "/" + j["den"].dump();
    return s + " (" + j["value"].dump() + ")";
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& item : j)
    if (item.is_structured() && !is_rational(item)) return false;
  return true;
}

void render(const Json& j, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  for (const auto& [key, value] : j.items()) {
    out << pad << key << ':';
    if (value.is_object() && !is_rational(value)) {
      out << '\n';
      render(value, depth + 1, out);
    } else if (value.is_array() && !is_flat(value)) {
      out << '\n';
      for (std::size_t i = 0; i < value.size(); ++i) {
        out << pad << "  [" << i << "]\n";
        render(value[i], depth + 2, out);
      }
    } else if (value.is_array() && !value.empty() && value.front().is_string()) {
      out << '\n';
      for (const auto& item : value) out << pad << "  - " << scalar_text(item) << '\n';
    } else if (value.is_array()) {
      for (const auto& item : value) out << ' ' << scalar_text(item);
      out << '\n';
    } else {
      out << ' ' << scalar_text(value) << '\n';
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace signed_spectra
