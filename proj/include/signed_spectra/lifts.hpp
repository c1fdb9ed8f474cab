#pragma once

#include "signed_spectra/graph.hpp"
#include "signed_spectra/spectra.hpp"

#include <vector>

namespace signed_spectra {

/// Double cover of a signed graph. Vertex x+ is x and x- is x + base_n; all
/// lift edges are positive.
struct LiftGraph {
  int base_n = 0;
  SignedGraph graph;
};

/// Positive edge (x,y) lifts to (x+,y+), (x-,y-); negative edge to (x+,y-), (x-,y+).
/// Parallel base edges lift independently.
LiftGraph two_lift(const SignedGraph& g);

struct LiftSpectrumCheck {
  bool ok = false;
  std::vector<double> lift_spectrum;      // adjacency of the lift
  std::vector<double> base_spectrum;      // unsigned adjacency of g
  std::vector<double> signed_spectrum;    // signed adjacency of g
  double max_gap = 0.0;                   // worst sorted pairwise difference
};

/// spec(A(lift)) = spec(A(|g|)) + spec(A_signed(g)) as multisets.
LiftSpectrumCheck lift_spectrum_property(const SignedGraph& g, double tol = 1e-8);

/// Largest pairwise difference of two ascending lists of equal length.
double sorted_spectrum_gap(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace signed_spectra
