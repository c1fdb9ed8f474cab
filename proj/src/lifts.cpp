#include "signed_spectra/lifts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace signed_spectra {

LiftGraph two_lift(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.sign > 0) {
      edges.push_back({e.u, e.v, 1});
      edges.push_back({e.u + n, e.v + n, 1});
    } else {
      edges.push_back({e.u, e.v + n, 1});
      edges.push_back({e.u + n, e.v, 1});
    }
  }
  return {n, SignedGraph(2 * n, std::move(edges))};
}

double sorted_spectrum_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

LiftSpectrumCheck lift_spectrum_property(const SignedGraph& g, double tol) {
  LiftSpectrumCheck check;
  check.lift_spectrum = eigen_spectrum(signed_adjacency(two_lift(g).graph)).eigenvalues;
  check.base_spectrum = eigen_spectrum(signed_adjacency(unsigned_version(g))).eigenvalues;
  check.signed_spectrum = eigen_spectrum(signed_adjacency(g)).eigenvalues;

  std::vector<double> merged = check.base_spectrum;
  merged.insert(merged.end(), check.signed_spectrum.begin(), check.signed_spectrum.end());
  std::sort(merged.begin(), merged.end());
  check.max_gap = sorted_spectrum_gap(check.lift_spectrum, merged);
  check.ok = check.max_gap <= tol;
  return check;
}

}  // namespace signed_spectra
