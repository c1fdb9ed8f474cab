#include "signed_spectra/frustration.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace signed_spectra;
using namespace signed_spectra::testing;

namespace {

BigRational big(const Rational& r) { return BigRational(r.numerator(), r.denominator()); }

}  // namespace

TEST_CASE("pinned values") {
  const SignedGraph triangle(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}});
  const IsoperimetricReport t = psi_global(triangle);
  CHECK(t.psi == Rational(2, 3));
  CHECK(t.psi_tilde == Rational(1));
  CHECK(t.exact);

  const SignedGraph c4(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  const IsoperimetricReport c = psi_global(c4);
  CHECK(c.psi == Rational(1, 2));
  CHECK(c.psi_tilde == Rational(2, 3));
}

TEST_CASE("frustration index of the all-negative triangle") {
  const SignedGraph g(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}});
  const FrustrationResult r = frustration_index(g, VertexSubset::all(3));
  CHECK(r.value == 1);
  CHECK(r.removal_set.size() == 1);
  CHECK(frustrated_edges(g, VertexSubset::all(3), r.switching) == 1);
  // Lexicographically smallest optimum with + before -.
  CHECK(r.switching.labels() == std::vector<int>{1, 1, -1});
  CHECK_THROWS(frustration_index(g, VertexSubset{}));
}

TEST_CASE("frustration index matches edge-deletion enumeration") {
  for (const auto& item : corpus_up_to(5)) {
    const SignedGraph& g = item.graph;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
      const VertexSubset s = VertexSubset::from_mask(mask);
      const FrustrationResult r = frustration_index(g, s);
      REQUIRE(r.value == brute_frustration(g, mask));
      CHECK(frustrated_edges(g, s, r.switching) == r.value);
    }
  }
}

TEST_CASE("exact psi matches subset enumeration") {
  std::vector<CorpusGraph> cases = corpus_up_to(5);
  const auto& all = main_corpus();
  for (std::size_t i = 0; i < all.size(); i += 37)
    if (all[i].graph.vertex_count() > 5) cases.push_back(all[i]);
  for (const auto& item : cases) {
    const SignedGraph& g = item.graph;
    const IsoperimetricReport r = psi_global(g);
    INFO(item.name);
    REQUIRE(big(r.psi) == brute_psi(g, 2).value);
    REQUIRE(big(r.psi_tilde) == brute_psi(g, 4).value);
    CHECK(psi_subset(g, r.witness_psi) == r.psi);
    CHECK(psi_tilde_subset(g, r.witness_psi_tilde) == r.psi_tilde);
  }
}

TEST_CASE("witness is the lexicographically smallest minimizer") {
  const SignedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  const IsoperimetricReport r = psi_global(g);
  CHECK(r.psi == Rational(0));
  CHECK(r.witness_psi == VertexSubset::all(4));
  const SignedGraph h(4, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}, {2, 3, -1}});
  const IsoperimetricReport q = psi_global(h);
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    const VertexSubset s = VertexSubset::from_mask(mask);
    if (psi_subset(h, s) == q.psi) CHECK_FALSE(s < q.witness_psi);
  }
}

TEST_CASE("heuristic mode gives upper bounds with the sandwich intact") {
  PsiOptions heuristic;
  heuristic.mode = SearchMode::heuristic;
  const auto& all = main_corpus();
  for (std::size_t i = 0; i < all.size(); i += 11) {
    const SignedGraph& g = all[i].graph;
    const IsoperimetricReport exact = psi_global(g);
    const IsoperimetricReport upper = psi_global(g, heuristic);
    CHECK_FALSE(upper.exact);
    CHECK(upper.psi >= exact.psi);
    CHECK(upper.psi_tilde >= exact.psi_tilde);
    CHECK(upper.psi <= upper.psi_tilde);
    CHECK(upper.psi_tilde <= upper.psi * 2);
    CHECK(psi_subset(g, upper.witness_psi) == upper.psi);
  }
}

TEST_CASE("exact mode refuses graphs above the threshold") {
  PsiOptions options;
  options.exact_threshold = 4;
  const SignedGraph g(5, complete_edges(5));
  CHECK_THROWS_AS(psi_global(g, options), std::invalid_argument);
  options.mode = SearchMode::heuristic;
  CHECK_NOTHROW(psi_global(g, options));
  CHECK_THROWS(psi_global(SignedGraph(0)));
}

TEST_CASE("heuristic runs are reproducible") {
  PsiOptions options;
  options.mode = SearchMode::heuristic;
  const SignedGraph g = random_signings(10, petersen_edges(), 1, 3).front();
  const IsoperimetricReport a = psi_global(g, options);
  const IsoperimetricReport b = psi_global(g, options);
  CHECK(a.psi == b.psi);
  CHECK(a.witness_psi == b.witness_psi);
}

TEST_CASE("edge isoperimetric number") {
  const SignedGraph path(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}});
  CHECK(edge_isoperimetric_h(path, VertexSubset::all(4)) == Rational(0));
  CHECK(edge_isoperimetric_h(path, VertexSubset{0, 1}) == Rational(1, 2));
  const SignedGraph k4(4, complete_edges(4));
  CHECK(edge_isoperimetric_h(k4, VertexSubset{0, 1, 2}) == Rational(1));
}
