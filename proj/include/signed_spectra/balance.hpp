#pragma once

#include "signed_spectra/graph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace signed_spectra {

/// A +-1 label per vertex.
class Switching {
 public:
  Switching() = default;
  explicit Switching(std::vector<int> labels);
  static Switching identity(int n);

  int operator[](int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::size_t size() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const Switching&, const Switching&) = default;

 private:
  std::vector<int> labels_;
};

/// Either a switching that makes every edge positive, or a closed walk whose
/// edge-sign product is -1.
struct BalanceCertificate {
  bool balanced = true;
  std::optional<Switching> switching;
  /// Closed vertex walk v0 v1 ... v0; empty when balanced.
  std::vector<int> odd_cycle;
  /// Edge indices traversed by odd_cycle, so parallel edges are unambiguous.
  std::vector<std::size_t> odd_cycle_edges;
};

class UnbalancedError : public std::runtime_error {
 public:
  explicit UnbalancedError(BalanceCertificate certificate);
  const BalanceCertificate& certificate() const { return certificate_; }

 private:
  BalanceCertificate certificate_;
};

struct CutSet {
  VertexSubset s;
  VertexSubset t;
};

/// BFS per component (ascending roots, ascending neighbours); the root gets +1
/// and each vertex gets the parity of negative edges on its tree path. The
/// first inconsistent non-tree edge yields the fundamental odd-signed cycle.
BalanceCertificate check_balance(const SignedGraph& g);

/// Split of V whose crossing edges are exactly the negative ones. Throws
/// UnbalancedError when g is not balanced.
CutSet negative_cut_set(const SignedGraph& g);

/// Edge (u,v,s) becomes (u,v, sigma(u) sigma(v) s).
SignedGraph switch_graph(const SignedGraph& g, const Switching& sigma);

/// Product of the signs of the listed edges.
int walk_sign(const SignedGraph& g, const std::vector<std::size_t>& edges);

}  // namespace signed_spectra
