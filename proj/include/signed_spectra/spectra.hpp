#pragma once

#include "signed_spectra/graph.hpp"
#include "signed_spectra/matrix.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace signed_spectra {

/// Twisted Laplacian: valency on the diagonal, minus the summed signs of the
/// parallel edges (x,y) off the diagonal.
IntMatrix twisted_laplacian_exact(const SignedGraph& g);
SymMatrix twisted_laplacian(const SignedGraph& g);

/// One row per edge in stored orientation u < v: +1 at v, -sign at u.
/// With this convention twisted_laplacian = incidence^T incidence.
IntMatrix incidence(const SignedGraph& g);

/// A[x][y] = sum of the signs of the parallel edges (x,y); zero diagonal.
SymMatrix signed_adjacency(const SignedGraph& g);

struct EigenOptions {
  /// Stop once the off-diagonal Frobenius norm drops below this.
  double tol = 1e-10;
  int max_sweeps = 64;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] pairs with eigenvalues[i]
  int sweeps = 0;
};

struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  double mu1 = 0.0;                 // smallest eigenvalue; 0 for an empty matrix
  double residual = 0.0;            // max ||Mv - lambda v||_2 over the computed pairs
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclic Jacobi rotations on a private copy of M.
EigenDecomposition eigen_decompose(const SymMatrix& m, const EigenOptions& options = {});
SpectralReport eigen_spectrum(const SymMatrix& m, const EigenOptions& options = {});

/// max ||Mv - lambda v||_2 over the pairs of `d`.
double max_residual(const SymMatrix& m, const EigenDecomposition& d);

/// <f, Mf> / <f, f>
double rayleigh_quotient(const SymMatrix& m, std::span<const double> f);

}  // namespace signed_spectra
