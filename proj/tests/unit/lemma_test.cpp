#include "signed_spectra/frustration.hpp"
#include "signed_spectra/spectra.hpp"

#include "corpus.hpp"

#include "doctest.h"

using namespace signed_spectra;
using namespace signed_spectra::testing;

// <r, L r> >= 4 e_mc(S u T) + |d(S u T)| for the +-1 indicator r of disjoint S, T.
TEST_CASE("indicator quadratic form bound") {
  for (const auto& item : corpus_up_to(4)) {
    const SignedGraph& g = item.graph;
    const IntMatrix lap = twisted_laplacian_exact(g);
    const int n = g.vertex_count();
    int states = 1;
    for (int i = 0; i < n; ++i) states *= 3;
    for (int code = 1; code < states; ++code) {
      std::vector<std::int64_t> r(static_cast<std::size_t>(n));
      std::vector<int> members;
      for (int v = 0, c = code; v < n; ++v, c /= 3) {
        r[static_cast<std::size_t>(v)] = c % 3 == 0 ? 0 : c % 3 == 1 ? 1 : -1;
        if (c % 3) members.push_back(v);
      }
      std::int64_t form = 0;
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) form += r[i] * lap(i, j) * r[j];
      const VertexSubset u(members);
      CHECK(form >= 4 * frustration_index(g, u).value + static_cast<std::int64_t>(boundary_size(g, u)));
    }
  }
}
