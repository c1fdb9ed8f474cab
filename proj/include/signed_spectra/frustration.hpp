#pragma once

#include "signed_spectra/balance.hpp"
#include "signed_spectra/graph.hpp"
#include "signed_spectra/rational.hpp"

#include <cstdint>
#include <vector>

namespace signed_spectra {

/// Minimum number of internal edges of S whose deletion leaves the induced
/// graph balanced, with the deletion set and the switching that realizes it.
struct FrustrationResult {
  int value = 0;
  /// Edge indices into the original graph.
  std::vector<std::size_t> removal_set;
  /// Labels of the members of S, in ascending vertex order.
  Switching switching;
};

/// Exact e_mc(S), minimized over switchings of S.
///
/// The first vertex of each induced component is pinned to +1 and remaining
/// vertices are enumerated in ascending order, + before -, with
/// branch-and-bound on the running best. The reported switching is therefore
/// the lexicographically smallest optimal one (reading + as smaller than -).
FrustrationResult frustration_index(const SignedGraph& g, const VertexSubset& s);

/// Internal edges of S that `labels` (indexed by rank in S) leaves frustrated.
int frustrated_edges(const SignedGraph& g, const VertexSubset& s, const Switching& labels);

/// (|dS| + 2 e_mc(S)) / |S|
Rational psi_subset(const SignedGraph& g, const VertexSubset& s);
/// (|dS| + 4 e_mc(S)) / |S|
Rational psi_tilde_subset(const SignedGraph& g, const VertexSubset& s);

enum class SearchMode { exact, heuristic };

struct PsiOptions {
  SearchMode mode = SearchMode::exact;
  /// Largest vertex count accepted by exact mode.
  int exact_threshold = 16;
  int restarts = 32;
  std::uint64_t seed = 0x5157a7ULL;
};

struct IsoperimetricReport {
  Rational psi{0};
  Rational psi_tilde{0};
  VertexSubset witness_psi;
  VertexSubset witness_psi_tilde;
  /// False when the values are heuristic upper bounds.
  bool exact = true;
};

/// psi(G) and psi-tilde(G), minimized over all nonempty S (S = V included).
///
/// Exact mode enumerates the states {excluded, +, -} per vertex with the
/// global sign flip factored out and a per-vertex lower bound on the
/// remaining cost. Among minimizers the lexicographically smallest vertex set
/// is reported. Heuristic mode runs restarted steepest descent over single
/// vertex moves and reports upper bounds.
IsoperimetricReport psi_global(const SignedGraph& g, const PsiOptions& options = {});

/// min over nonempty T of S of |dT| / |T|, signs ignored.
Rational edge_isoperimetric_h(const SignedGraph& g, const VertexSubset& s, int threshold = 20);

}  // namespace signed_spectra
