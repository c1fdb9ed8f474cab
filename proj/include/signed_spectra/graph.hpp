#pragma once

#include "signed_spectra/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace signed_spectra {

/// Undirected signed edge. Stored canonically with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  int sign = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Adjacency entry: the neighbour reached through edge `edge`.
struct Incident {
  int neighbor = 0;
  int sign = 1;
  std::size_t edge = 0;
};

/// Finite signed multigraph on vertices 0..n-1. Immutable after construction.
///
/// Parallel edges are kept as a multiset, each with its own sign. Self-loops
/// are rejected. Edge order is the insertion order; only the endpoints of each
/// edge are canonicalized.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n);
  SignedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::span<const Incident> incident(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int valency(int v) const { return static_cast<int>(incident(v).size()); }

  bool is_connected() const;
  /// Valency shared by every vertex, or -1 when the graph is not regular.
  int regular_degree() const;

  /// Same vertex count and same edge multiset.
  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incident>> adjacency_;
};

/// Sorted set of vertex indices. Ordered lexicographically as a sorted sequence.
class VertexSubset {
 public:
  VertexSubset() = default;
  VertexSubset(std::initializer_list<int> members);
  explicit VertexSubset(std::vector<int> members);

  static VertexSubset all(int n);
  static VertexSubset from_mask(std::uint64_t mask);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
  friend auto operator<=>(const VertexSubset& a, const VertexSubset& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<int> members_;
};

struct DegreeStats {
  int d_max = 0;
  int d_min = 0;
  Rational d_ave{0};
};

/// E^-(S), E^-(T), E^+(S:T), E(S), E(S:T).
struct EdgePartition {
  std::vector<Edge> negative_in_s;
  std::vector<Edge> negative_in_t;
  std::vector<Edge> positive_across;
  std::vector<Edge> internal_s;
  std::vector<Edge> across;
};

using SignedVector = std::vector<double>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented signed-graph format:
///   optional header `n=<count>`, edge lines `<u> <v> <sign>` with sign in
///   {+, -, +1, -1}, `#` starting a comment.
/// Endpoints are vertex indices. If any endpoint token is not a non-negative
/// integer, every endpoint token is treated as a vertex name and names are
/// numbered in order of first appearance.
SignedGraph load_graph(std::string_view text);
SignedGraph load_graph_file(const std::string& path);

/// Canonical text: header, then edges sorted by (u, v, sign).
std::string serialize_graph(const SignedGraph& g);

DegreeStats degree_stats(const SignedGraph& g);

/// Throws std::invalid_argument if some member is outside 0..n-1.
void check_subset(const SignedGraph& g, const VertexSubset& s);

/// Membership flags indexed by vertex.
std::vector<char> membership(const SignedGraph& g, const VertexSubset& s);

/// Edges with exactly one endpoint in S, with multiplicity.
std::vector<Edge> boundary_edges(const SignedGraph& g, const VertexSubset& s);
std::size_t boundary_size(const SignedGraph& g, const VertexSubset& s);

EdgePartition edge_partition(const SignedGraph& g, const VertexSubset& s, const VertexSubset& t);

/// +1 on S, -1 on T, 0 elsewhere.
SignedVector indicator(const SignedGraph& g, const VertexSubset& s, const VertexSubset& t);

/// Induced subgraph on S, vertices renumbered by rank in S.
SignedGraph induced_subgraph(const SignedGraph& g, const VertexSubset& s);

/// Same graph with every sign set to +1.
SignedGraph unsigned_version(const SignedGraph& g);

}  // namespace signed_spectra
