#include "signed_spectra/bounds.hpp"

#include "signed_spectra/balance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace signed_spectra {

double cheeger_lower_bound(int d_max, const Rational& psi) {
  if (d_max == 0) return 0.0;
  const double d = d_max;
  const double p = to_double(psi);
  const double disc = std::max(0.0, d * d - p * p);
  return p * p / (d + std::sqrt(disc));
}

BoundChainReport evaluate_chain(int d_max, const Rational& psi, const Rational& psi_tilde, double mu1, bool exact,
                                double tol) {
  BoundChainReport r;
  r.d_max = d_max;
  r.psi = psi;
  r.mu1 = mu1;
  r.upper_main = psi_tilde;
  r.upper_loose = psi * 2;
  r.exact = exact;
  if (d_max > 0) {
    const double p = to_double(psi);
    r.lower_taylor = p * p / (2.0 * d_max);
    r.lower_main = cheeger_lower_bound(d_max, psi);
  }
  r.slack = {r.lower_main - r.lower_taylor, r.mu1 - r.lower_main, to_double(r.upper_main) - r.mu1,
             to_double(r.upper_loose - r.upper_main)};
  if (!exact) r.verified = {false, false, true, false};

  bool ok = true;
  for (std::size_t i = 0; i < 4; ++i)
    if (r.verified[i] && r.slack[i] < -tol) ok = false;
  if (r.verified[3] && r.upper_main > r.upper_loose) ok = false;
  // psi never exceeds the smallest valency, so psi > d_max means the inputs are inconsistent.
  if (psi > Rational(d_max) || psi < 0 || psi_tilde < psi) ok = false;
  r.chain_ok = ok;
  return r;
}

BoundChainReport theorem_bounds(const SignedGraph& g, const BoundOptions& options) {
  if (g.vertex_count() == 0) throw std::invalid_argument("theorem bounds need at least one vertex");
  const DegreeStats stats = degree_stats(g);
  if (stats.d_max == 0) {
    BoundChainReport r;
    r.exact = true;
    return r;
  }
  const IsoperimetricReport iso = psi_global(g, options.psi);
  const SpectralReport spec = eigen_spectrum(twisted_laplacian(g), options.eigen);
  return evaluate_chain(stats.d_max, iso.psi, iso.psi_tilde, spec.mu1, iso.exact, options.tol);
}

NotRegularError::NotRegularError(int a, int b, int da, int db)
    : std::invalid_argument("graph is not regular: vertex " + std::to_string(a) + " has valency " + std::to_string(da) +
                            ", vertex " + std::to_string(b) + " has valency " + std::to_string(db)),
      a_(a),
      b_(b) {}

int require_regular(const SignedGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.valency(v) != g.valency(0)) throw NotRegularError(0, v, g.valency(0), g.valency(v));
  return g.valency(0);
}

bool is_bipartite(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = -1;
  return check_balance(SignedGraph(g.vertex_count(), std::move(edges))).balanced;
}

AdjacencyBounds adjacency_bounds(const SignedGraph& g, const BoundOptions& options) {
  AdjacencyBounds r;
  r.ell = require_regular(g);
  if (r.ell < 1) throw std::invalid_argument("adjacency bounds need valency >= 1");
  const IsoperimetricReport iso = psi_global(g, options.psi);
  const SpectralReport spec = eigen_spectrum(signed_adjacency(g), options.eigen);

  const double ell = r.ell;
  const double psi = to_double(iso.psi);
  r.exact = iso.exact;
  r.lower2 = ell - 2.0 * psi;
  r.lower1 = ell - to_double(iso.psi_tilde);
  r.lambda1 = spec.eigenvalues.back();
  r.lambda_min = spec.eigenvalues.front();
  r.upper = std::sqrt(std::max(0.0, ell * ell - psi * psi));
  r.bipartite = is_bipartite(g);
  r.smallest_eigenvalue_unbounded = !r.bipartite;

  const double tol = options.tol;
  if (iso.exact) {
    r.chain_ok = r.lower2 <= r.lower1 + tol && r.lower1 <= r.lambda1 + tol && r.lambda1 <= r.upper + tol;
  } else {
    // A heuristic psi~ is an upper bound, so only l - psi~ <= lambda1 stays valid.
    r.chain_ok = r.lower1 <= r.lambda1 + tol;
  }
  return r;
}

SpanningTreeBound spanning_tree_bound(const SignedGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("spanning tree bound needs at least one vertex");
  if (!g.is_connected()) throw std::invalid_argument("spanning tree bound needs a connected graph");
  const int n = g.vertex_count();
  SpanningTreeBound r;
  r.bound = degree_stats(g).d_ave - 2 + Rational(2, n);
  r.psi_v = psi_subset(g, VertexSubset::all(n));
  r.holds = r.psi_v <= r.bound;
  return r;
}

CoherentDegree coherent_average_degree(const SignedGraph& g, const VertexSubset& s) {
  if (s.empty()) throw std::invalid_argument("coherent degree of empty subset");
  const FrustrationResult frustration = frustration_index(g, s);
  const auto in = membership(g, s);

  std::vector<char> removed(g.edge_count(), 0);
  for (std::size_t e : frustration.removal_set) removed[e] = 1;
  std::int64_t kept_internal = 0, degree_sum = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const bool a = in[static_cast<std::size_t>(e.u)], b = in[static_cast<std::size_t>(e.v)];
    degree_sum += a + b;
    if (a && b && !removed[i]) ++kept_internal;
  }
  const auto size = static_cast<std::int64_t>(s.size());

  CoherentDegree r;
  r.d_coh = Rational(2 * kept_internal, size);
  r.psi_s = psi_subset(g, s);
  r.mean_degree = Rational(degree_sum, size);
  r.identity_ok = r.d_coh + r.psi_s == r.mean_degree;
  return r;
}

LiftAssessment lift_signing_assessment(const SignedGraph& g, const BoundOptions& options) {
  LiftAssessment r;
  r.ell = require_regular(g);
  if (r.ell < 1) throw std::invalid_argument("lift assessment needs valency >= 1");
  const SpectralReport spec = eigen_spectrum(signed_adjacency(g), options.eigen);
  const IsoperimetricReport iso = psi_global(g, options.psi);
  const int n = g.vertex_count();

  r.exact = iso.exact;
  r.lambda1 = spec.eigenvalues.back();
  r.target = 2.0 * std::sqrt(static_cast<double>(r.ell - 1));
  r.meets_target = r.lambda1 <= r.target + options.tol;

  // d_coh(S) = l - psi(S) > l/2 + sqrt(l-1)  <=>  x = l/2 - psi(S) > 0 and x^2 > l - 1.
  // The psi witness minimizes psi(S), so it maximizes d_coh(S).
  const Rational x = Rational(r.ell, 2) - iso.psi;
  if (x > 0 && x * x > Rational(r.ell - 1)) {
    r.obstruction = iso.witness_psi;
    r.obstruction_d_coh = Rational(r.ell) - iso.psi;
  }

  r.psi_v = psi_subset(g, VertexSubset::all(n));
  const Rational floor = Rational(r.ell - 2);
  r.near_ceiling = r.psi_v >= floor && r.psi_v <= floor + Rational(2, n);
  r.psi_condition = iso.exact && iso.psi >= floor;
  return r;
}

}  // namespace signed_spectra
