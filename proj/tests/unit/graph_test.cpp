#include "signed_spectra/graph.hpp"

#include "doctest.h"

using namespace signed_spectra;

TEST_CASE("edges are canonicalized and validated") {
  const SignedGraph g(3, {{2, 0, -1}, {1, 2, 1}});
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 2);
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(SignedGraph(3, {{1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(3, {{0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(3, {{0, 3, 1}}), std::invalid_argument);
}

TEST_CASE("parallel edges are kept") {
  const SignedGraph g(2, {{0, 1, 1}, {0, 1, -1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.valency(0) == 2);
  CHECK(g.regular_degree() == 2);
}

TEST_CASE("load and serialize round trip") {
  const SignedGraph g = load_graph("# comment\nn=4\n0 1 +\n1 2 -1\n2 3 -  # trailing\n\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(serialize_graph(g) == "n=4\n0 1 +\n1 2 -\n2 3 -\n");
  CHECK(load_graph(serialize_graph(g)) == g);
}

TEST_CASE("isolated vertices come from the header") {
  const SignedGraph g = load_graph("n=5\n0 1 +\n");
  CHECK(g.vertex_count() == 5);
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("named vertices are numbered by first appearance") {
  const SignedGraph g = load_graph("bob alice +\nalice carol -\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.edge(1).u == 1);
  CHECK(g.edge(1).v == 2);
  CHECK(g.edge(1).sign == -1);
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const char* text) {
    try {
      load_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("n=3\n0 1 +\n1 2 x\n") == 3);
  CHECK(line_of("0 0 +\n") == 1);
  CHECK(line_of("n=2\n0 2 +\n") == 2);
  CHECK(line_of("0 1\n") == 1);
  CHECK(line_of("n=2\nn=3\n") == 2);
}

TEST_CASE("degree statistics") {
  const SignedGraph g(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, -1}});
  const DegreeStats s = degree_stats(g);
  CHECK(s.d_max == 3);
  CHECK(s.d_min == 1);
  CHECK(s.d_ave == Rational(3, 2));
  CHECK(degree_stats(SignedGraph(0)).d_max == 0);
}

TEST_CASE("vertex subsets") {
  const VertexSubset s{3, 1, 3};
  CHECK(s.members() == std::vector<int>{1, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(VertexSubset::from_mask(0b1010) == s);
  CHECK(VertexSubset{0, 5} < VertexSubset{1});
  CHECK_THROWS_AS(check_subset(SignedGraph(3), VertexSubset{3}), std::invalid_argument);
}

TEST_CASE("boundary, partition and indicator") {
  const SignedGraph g(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, -1}, {0, 3, 1}, {0, 2, 1}});
  const VertexSubset s{0, 1}, t{2};
  CHECK(boundary_size(g, s) == 3);
  CHECK_THROWS(boundary_edges(g, VertexSubset{}));
  const EdgePartition p = edge_partition(g, s, t);
  CHECK(p.negative_in_s.size() == 1);
  CHECK(p.negative_in_t.empty());
  CHECK(p.positive_across.size() == 2);
  CHECK(p.internal_s.size() == 1);
  CHECK(p.across.size() == 2);
  CHECK_THROWS(edge_partition(g, s, VertexSubset{1, 2}));
  CHECK(indicator(g, s, t) == std::vector<double>{1, 1, -1, 0});
}

TEST_CASE("induced subgraph renumbers by rank") {
  const SignedGraph g(4, {{0, 1, -1}, {1, 3, 1}, {2, 3, -1}});
  const SignedGraph h = induced_subgraph(g, VertexSubset{1, 2, 3});
  CHECK(h.vertex_count() == 3);
  CHECK(h == SignedGraph(3, {{0, 2, 1}, {1, 2, -1}}));
  CHECK(unsigned_version(g).edge(0).sign == 1);
}
