#pragma once

#include "signed_spectra/frustration.hpp"
#include "signed_spectra/graph.hpp"
#include "signed_spectra/spectra.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace signed_spectra {

struct BoundOptions {
  PsiOptions psi;
  EigenOptions eigen;
  /// Slack allowed when comparing rational bounds against eigenvalues.
  double tol = 1e-8;
};

/// psi^2/(2 dmax) <= dmax - sqrt(dmax^2 - psi^2) <= mu1 <= psi~ <= 2 psi
struct BoundChainReport {
  int d_max = 0;
  Rational psi{0};
  double lower_taylor = 0.0;
  double lower_main = 0.0;
  double mu1 = 0.0;
  Rational upper_main{0};   // psi-tilde
  Rational upper_loose{0};  // 2 psi
  /// Per link, left to right: upper side minus lower side.
  std::array<double, 4> slack{};
  /// Links that could be checked. With heuristic psi only mu1 <= psi~ is valid.
  std::array<bool, 4> verified{true, true, true, true};
  bool exact = true;
  bool chain_ok = true;
};

/// Evaluates the chain from already computed quantities. Used both by
/// theorem_bounds and to re-check stored reports.
BoundChainReport evaluate_chain(int d_max, const Rational& psi, const Rational& psi_tilde, double mu1, bool exact,
                                double tol = 1e-8);

/// d - sqrt(d^2 - psi^2), evaluated without cancellation; 0 when d = 0.
double cheeger_lower_bound(int d_max, const Rational& psi);

BoundChainReport theorem_bounds(const SignedGraph& g, const BoundOptions& options = {});

class NotRegularError : public std::invalid_argument {
 public:
  NotRegularError(int a, int b, int da, int db);
  int first() const { return a_; }
  int second() const { return b_; }

 private:
  int a_, b_;
};

/// Valency of a regular graph; throws NotRegularError otherwise.
int require_regular(const SignedGraph& g);

/// l - 2 psi <= l - psi~ <= lambda1 <= sqrt(l^2 - psi^2) for l-regular graphs.
struct AdjacencyBounds {
  int ell = 0;
  double lower2 = 0.0;
  double lower1 = 0.0;
  double lambda1 = 0.0;
  double lambda_min = 0.0;
  double upper = 0.0;
  bool exact = true;
  bool chain_ok = true;
  bool bipartite = false;
  /// The chain says nothing about the smallest eigenvalue unless the graph is bipartite.
  bool smallest_eigenvalue_unbounded = false;
};

AdjacencyBounds adjacency_bounds(const SignedGraph& g, const BoundOptions& options = {});

struct SpanningTreeBound {
  Rational bound{0};  // d_ave - 2 + 2/n
  Rational psi_v{0};  // psi(V)
  bool holds = true;
};

/// Requires a connected graph.
SpanningTreeBound spanning_tree_bound(const SignedGraph& g);

struct CoherentDegree {
  Rational d_coh{0};        // average degree of coh(S), counted on the pruned graph
  Rational psi_s{0};        // psi(S)
  Rational mean_degree{0};  // (1/|S|) sum of d^G(s)
  bool identity_ok = true;  // d_coh + psi(S) == mean_degree
};

CoherentDegree coherent_average_degree(const SignedGraph& g, const VertexSubset& s);

struct LiftAssessment {
  int ell = 0;
  double lambda1 = 0.0;
  double target = 0.0;  // 2 sqrt(l - 1)
  bool meets_target = false;
  /// A subset whose coherent average degree exceeds l/2 + sqrt(l-1).
  std::optional<VertexSubset> obstruction;
  Rational obstruction_d_coh{0};
  Rational psi_v{0};
  /// l - 2 <= psi(V) <= l - 2 + 2/|V|
  bool near_ceiling = false;
  /// psi(G) >= l - 2, the condition under which the adjacency chain gives the target.
  bool psi_condition = false;
  bool exact = true;
};

LiftAssessment lift_signing_assessment(const SignedGraph& g, const BoundOptions& options = {});

/// True when the graph has no odd cycle.
bool is_bipartite(const SignedGraph& g);

}  // namespace signed_spectra
