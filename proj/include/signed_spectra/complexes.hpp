#pragma once

#include "signed_spectra/bounds.hpp"
#include "signed_spectra/graph.hpp"
#include "signed_spectra/matrix.hpp"
#include "signed_spectra/spectra.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signed_spectra {

/// Incidence of a cell with one of its faces (or cofaces): the face index and
/// +1 when the cell induces the face's own orientation, -1 otherwise.
struct CellFace {
  std::size_t cell = 0;
  int sign = 1;
};

/// Finite oriented cell complex, closed under faces.
///
/// Simplicial cells are stored as ascending vertex tuples and oriented by that
/// order; the face omitting the i-th vertex carries (-1)^i. Cubical cells of a
/// torus are a base point plus an ascending axis list; the pair of faces
/// normal to the i-th axis carry (-1)^i (+ for the shifted face, - for the
/// base face).
class Complex {
 public:
  enum class Kind { simplicial, cubical };

  Kind kind() const { return kind_; }
  /// -1 for the empty complex.
  int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t cell_count(int k) const;
  /// (k-1)-faces of the k-cell i. Empty for k = 0.
  std::span<const CellFace> faces(int k, std::size_t i) const;
  /// (k+1)-cells having the k-cell i as a face, with the induced sign.
  std::span<const CellFace> cofaces(int k, std::size_t i) const;
  /// Vertex tuple (simplicial) or base coordinates followed by axes (cubical).
  const std::vector<int>& cell(int k, std::size_t i) const;
  std::string describe(int k, std::size_t i) const;
  /// Torus side lengths; empty for simplicial complexes.
  const std::vector<int>& torus_shape() const { return shape_; }

 private:
  friend Complex build_complex(const std::vector<std::vector<int>>& top_cells);
  friend Complex cubical_torus(const std::vector<int>& kvec);
  void finalize();

  Kind kind_ = Kind::simplicial;
  std::vector<std::vector<std::vector<int>>> cells_;
  std::vector<std::vector<std::vector<CellFace>>> faces_;
  std::vector<std::vector<std::vector<CellFace>>> cofaces_;
  std::vector<int> shape_;
};

/// Simplicial complex generated by the listed cells and all their faces.
/// Throws on repeated vertices or a cell listed twice.
Complex build_complex(const std::vector<std::vector<int>>& top_cells);

/// Cubical flat torus Z_{k1} x ... x Z_{kn} with its unit cubes. Every k_i
/// must be at least 3 so that no cube has two identified faces.
Complex cubical_torus(const std::vector<int>& kvec);

/// The simplicial complex whose 1-cells are the edges of g (signs ignored).
Complex graph_complex(const SignedGraph& g);

/// Text format: `cell: v0 v1 ... vk` lines, or a single `torus: k1,k2,...`.
Complex load_complex(std::string_view text);
Complex load_complex_file(const std::string& path);

/// ((k-1)-cells x k-cells); 1 <= k <= top dimension.
IntMatrix boundary_matrix(const Complex& x, int k);

/// del_k^T del_k + del_{k+1} del_{k+1}^T in exact integers; 0 <= k <= top dimension.
IntMatrix higher_laplacian_exact(const Complex& x, int k);
SymMatrix higher_laplacian(const Complex& x, int k);

/// Rank over the rationals.
std::size_t rational_rank(const IntMatrix& m);

struct BettiNumber {
  int value = 0;
  int from_eigenvalues = 0;  // eigenvalues of Delta_k below tol
  int from_rank = 0;         // dim C_k - rank del_k - rank del_{k+1}
};

/// dim ker Delta_k. Throws std::runtime_error if the two computations disagree.
BettiNumber betti_number(const Complex& x, int k, double tol = 1e-8);

/// l with l = |N_-1(x)| + |N_+1(x)| - |dx| - |d*x| for every k-cell x, both
/// neighbourhoods counted with multiplicity.
std::optional<int> valency_default(const Complex& x, int k);

struct EdgeProvenance {
  bool via_face = true;  // shared (k-1)-cell; otherwise common (k+1)-cell
  std::size_t cell = 0;  // index of that cell in its dimension
};

/// Signed graph on the k-cells: one edge per shared (k-1)-cell and one per
/// common (k+1)-cell, with the sign -(delta_x * delta_y) of the induced
/// orientations. Parallel edges are kept.
struct DegreeKGraph {
  SignedGraph graph;
  std::vector<EdgeProvenance> labels;  // aligned with graph.edges()
  std::vector<int> updeg;              // |d*x|
  std::vector<int> downdeg;            // |dx|
};

DegreeKGraph degree_k_signed_graph(const Complex& x, int k);

struct CorollaryReport {
  int ell = 0;
  double mu1 = 0.0;                 // smallest eigenvalue of Delta_k
  BoundChainReport graph_chain;     // chain for the degree-k graph itself
  double lower_shifted = 0.0;       // d - sqrt(d^2 - psi^2) - l
  Rational upper_shifted{0};        // psi~ - l
  Rational upper_loose_shifted{0};  // 2 psi - l
  bool chain_ok = true;
  int betti = 0;
  bool homology_ok = true;          // mu1 = 0 exactly when H_k != 0
  bool identity_ok = true;          // l I + Delta_k = twisted Laplacian of the degree-k graph
  bool simplification_ok = true;    // d_max - l = |dx| + |d*x| at a max-valency cell
};

/// Throws std::invalid_argument when there is no valency default in degree k.
CorollaryReport corollary_bounds_k(const Complex& x, int k, const BoundOptions& options = {});

struct RayleighPsiBound {
  double lhs = 0.0;  // mu1(Delta_k)
  double rhs = 0.0;  // 2 K psi(G)
  int k_constant = 0;
  Rational psi{0};
  bool psi_exact = true;
  /// False when psi was only bounded heuristically and lhs > 0.
  bool verified = true;
  bool ok = true;
};

/// K is the largest number of k-cells on a (k-1)-cell or of (k+1)-cells on a k-cell.
RayleighPsiBound rayleigh_psi_bound(const Complex& x, int k, const BoundOptions& options = {});

struct TorusRayleigh {
  double quotient = 0.0;
  double expected = 0.0;
  Rational expected_exact{0};  // 2(n-1) / (1 - 1/prod_{i != j} k_i)
  bool kernel_ok = true;       // every translate chain lies in ker Delta_1
};

/// Rayleigh quotient of the axis-j loop (1-based axis) after projecting out
/// the translate chains spanning ker Delta_1.
TorusRayleigh torus_rayleigh_example(const std::vector<int>& kvec, int axis);

}  // namespace signed_spectra
