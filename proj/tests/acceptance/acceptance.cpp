// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include "signed_spectra/balance.hpp"
#include "signed_spectra/bounds.hpp"
#include "signed_spectra/complexes.hpp"
#include "signed_spectra/lifts.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

using namespace signed_spectra;
using namespace signed_spectra::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  Outcome outcome(const std::string& summary) const {
    std::string detail = summary + ", " + std::to_string(checks_) + " checks";
    if (failed_) {
      detail += ", " + std::to_string(failed_) + " failed:";
      for (const auto& f : failures_) detail += " [" + f + "]";
    }
    return {failed_ == 0, detail};
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

BigRational big(const Rational& r) { return BigRational(r.numerator(), r.denominator()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

std::vector<double> oracle_spectrum(const DenseInt& m) { return real_roots(characteristic_polynomial(m)); }

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double gap = 0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

struct NamedComplex {
  std::string name;
  Complex complex;
};

const std::vector<NamedComplex>& test_complexes() {
  static const std::vector<NamedComplex> all = [] {
    std::vector<NamedComplex> out;
    out.push_back({"single triangle", build_complex({{0, 1, 2}})});
    out.push_back({"triangle boundary", build_complex({{0, 1}, {1, 2}, {0, 2}})});
    out.push_back({"two triangles", build_complex({{0, 1, 2}, {1, 2, 3}})});
    out.push_back({"hollow tetrahedron", build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})});
    out.push_back({"solid tetrahedron", build_complex({{0, 1, 2, 3}})});
    out.push_back({"octahedron", build_complex({{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5},
                                                {1, 3, 4}, {1, 3, 5}})});
    out.push_back({"4-simplex boundary", build_complex({{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4},
                                                        {1, 2, 3, 4}})});
    out.push_back({"Petersen graph", graph_complex(SignedGraph(10, petersen_edges()))});
    out.push_back({"K5 graph", graph_complex(SignedGraph(5, complete_edges(5)))});
    for (const std::vector<int>& k : std::vector<std::vector<int>>{{5}, {3, 3}, {3, 4}, {3, 3, 3}, {4, 4, 4}}) {
      std::string name = "torus";
      for (int side : k) name += " " + std::to_string(side);
      out.push_back({name, cubical_torus(k)});
    }
    return out;
  }();
  return all;
}

struct CommandResult {
  int status = -1;
  std::string out;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string("\"") + SIGNED_SPECTRA_CLI + "\" " + args + " 2>/dev/null";
  CommandResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// 1. psi^2/2d <= d - sqrt(d^2 - psi^2) <= mu1 <= psi~ <= 2 psi
Outcome criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  std::size_t oracle_checked = 0;
  for (const auto& item : main_corpus()) {
    const BoundChainReport r = theorem_bounds(item.graph);
    tally.check(r.exact && r.chain_ok, item.name);
    const double d = r.d_max, p = to_double(r.psi);
    const double tol = 1e-8;
    tally.check(p * p / (2 * std::max(d, 1.0)) <= r.lower_main + tol, item.name + " taylor");
    tally.check(r.lower_main <= r.mu1 + tol, item.name + " lower");
    tally.check(r.mu1 <= to_double(r.upper_main) + tol, item.name + " upper");
    tally.check(r.upper_main <= r.upper_loose, item.name + " loose");
    if (item.graph.vertex_count() <= 5) {
      tally.check(big(r.psi) == brute_psi(item.graph, 2).value, item.name + " psi oracle");
      tally.check(big(r.upper_main) == brute_psi(item.graph, 4).value, item.name + " psi-tilde oracle");
      ++oracle_checked;
    }
  }
  const double elapsed = seconds_since(t0);
  tally.check(elapsed < 300, "runtime");
  return tally.outcome(std::to_string(main_corpus().size()) + " graphs (" + std::to_string(oracle_checked) +
                       " with psi from subset enumeration) in " + fmt(elapsed) + " s");
}

// 2. mu1 = 0 <=> balanced <=> psi = 0
Outcome criterion_2() {
  Tally tally;
  std::size_t balanced = 0;
  for (const auto& item : main_corpus()) {
    const bool b = check_balance(item.graph).balanced;
    const bool zero_mu = eigen_spectrum(twisted_laplacian(item.graph)).mu1 < 1e-9;
    const bool zero_psi = psi_global(item.graph).psi == Rational(0);
    tally.check(b == zero_mu && b == zero_psi, item.name);
    balanced += b;
  }
  return tally.outcome(std::to_string(balanced) + " balanced of " + std::to_string(main_corpus().size()));
}

// 3. Balanced graphs share the spectrum of the unsigned Laplacian.
Outcome criterion_3() {
  Tally tally;
  std::size_t count = 0;
  double worst = 0;
  for (const auto& item : main_corpus()) {
    if (!check_balance(item.graph).balanced) continue;
    ++count;
    const auto a = eigen_spectrum(twisted_laplacian(item.graph)).eigenvalues;
    const auto b = eigen_spectrum(twisted_laplacian(unsigned_version(item.graph))).eigenvalues;
    const double gap = max_gap(a, b);
    worst = std::max(worst, gap);
    tally.check(gap <= 1e-9, item.name);
  }
  return tally.outcome(std::to_string(count) + " balanced graphs, worst gap " + fmt(worst));
}

// 4. Pinned values, each against enumeration and the characteristic polynomial.
Outcome criterion_4() {
  Tally tally;
  const SignedGraph triangle(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}});
  const SignedGraph c4(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});

  const IsoperimetricReport t = psi_global(triangle);
  const double t_mu1 = eigen_spectrum(twisted_laplacian(triangle)).mu1;
  tally.check(t.psi == Rational(2, 3) && brute_psi(triangle, 2).value == BigRational(2, 3), "triangle psi");
  tally.check(t.psi_tilde == Rational(1) && brute_psi(triangle, 4).value == BigRational(1), "triangle psi-tilde");
  tally.check(std::abs(t_mu1 - 1) <= 1e-9 && std::abs(oracle_spectrum(dense_twisted_laplacian(triangle))[0] - 1) <= 1e-9,
              "triangle mu1");
  tally.check(std::abs(t_mu1 - to_double(t.psi_tilde)) <= 1e-9, "triangle upper bound tight");

  const IsoperimetricReport c = psi_global(c4);
  const double c_mu1 = eigen_spectrum(twisted_laplacian(c4)).mu1;
  const double expected = 2 - std::numbers::sqrt2;
  tally.check(c.psi == Rational(1, 2) && brute_psi(c4, 2).value == BigRational(1, 2), "C4 psi");
  tally.check(c.psi_tilde == Rational(2, 3) && brute_psi(c4, 4).value == BigRational(2, 3), "C4 psi-tilde");
  tally.check(std::abs(c_mu1 - expected) <= 1e-9 &&
                  std::abs(oracle_spectrum(dense_twisted_laplacian(c4))[0] - expected) <= 1e-9,
              "C4 mu1");
  return tally.outcome("triangle psi=2/3 psi~=1 mu1=" + fmt(t_mu1) + "; C4 psi=1/2 psi~=2/3 mu1=" + fmt(c_mu1));
}

// 5. <r, L r> >= 4 e_mc(S u T) + |d(S u T)|, exact integers.
Outcome criterion_5() {
  Tally tally;
  std::size_t pairs = 0;
  for (const auto& item : corpus_up_to(5)) {
    const SignedGraph& g = item.graph;
    const int n = g.vertex_count();
    const DenseInt lap = dense_twisted_laplacian(g);
    std::vector<int> emc(std::size_t{1} << n, 0), boundary(std::size_t{1} << n, 0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      emc[mask] = brute_frustration(g, mask);
      for (const Edge& e : g.edges()) boundary[mask] += (mask >> e.u & 1) != (mask >> e.v & 1);
    }
    int states = 1;
    for (int i = 0; i < n; ++i) states *= 3;
    for (int code = 1; code < states; ++code) {
      std::vector<std::int64_t> r(static_cast<std::size_t>(n));
      std::uint64_t mask = 0;
      for (int v = 0, c = code; v < n; ++v, c /= 3) {
        r[static_cast<std::size_t>(v)] = c % 3 == 0 ? 0 : c % 3 == 1 ? 1 : -1;
        if (c % 3) mask |= std::uint64_t{1} << v;
      }
      std::int64_t form = 0;
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) form += r[i] * lap[i][j] * r[j];
      tally.check(form >= 4 * emc[mask] + boundary[mask], item.name + " code " + std::to_string(code));
      ++pairs;
    }
  }
  return tally.outcome(std::to_string(pairs) + " (S,T) pairs");
}

// 6. Spanning-tree bound, average-degree identity, adjacency chain.
Outcome criterion_6() {
  Tally tally;
  std::size_t connected = 0, regular = 0;
  for (const auto& item : main_corpus()) {
    if (item.graph.is_connected()) {
      const SpanningTreeBound s = spanning_tree_bound(item.graph);
      const Rational bound = degree_stats(item.graph).d_ave - Rational(2) + Rational(2, item.graph.vertex_count());
      tally.check(s.holds && s.bound == bound && s.psi_v <= bound, item.name + " spanning tree");
      ++connected;
    }
    if (item.graph.regular_degree() >= 1) {
      const AdjacencyBounds a = adjacency_bounds(item.graph);
      const double tol = 1e-8;
      tally.check(a.exact && a.lower2 <= a.lower1 + tol && a.lower1 <= a.lambda1 + tol && a.lambda1 <= a.upper + tol,
                  item.name + " adjacency chain");
      ++regular;
    }
  }
  std::mt19937_64 rng(6);
  const auto& all = main_corpus();
  for (int trial = 0; trial < 100; ++trial) {
    const auto& item = all[rng() % all.size()];
    const std::uint64_t full = (std::uint64_t{1} << item.graph.vertex_count()) - 1;
    const VertexSubset s = VertexSubset::from_mask(1 + rng() % full);
    const CoherentDegree c = coherent_average_degree(item.graph, s);
    tally.check(c.identity_ok && c.d_coh + c.psi_s == c.mean_degree, item.name + " identity");
  }
  return tally.outcome(std::to_string(connected) + " connected, " + std::to_string(regular) +
                       " regular, 100 identity pairs");
}

// 7. Lift spectrum union; all-negative triangle lifts to C6.
Outcome criterion_7() {
  Tally tally;
  double worst = 0;
  for (const auto& item : main_corpus()) {
    const LiftSpectrumCheck c = lift_spectrum_property(item.graph, 1e-8);
    worst = std::max(worst, c.max_gap);
    tally.check(c.ok, item.name);
  }
  const SignedGraph triangle(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}});
  const SignedGraph lift = two_lift(triangle).graph;
  const SignedGraph c6(6, cycle_edges(6));
  tally.check(lift.regular_degree() == 2 && lift.is_connected() && lift.vertex_count() == 6, "lift degree sequence");
  tally.check(max_gap(eigen_spectrum(signed_adjacency(lift)).eigenvalues,
                      eigen_spectrum(signed_adjacency(c6)).eigenvalues) <= 1e-9,
              "lift spectrum vs C6");
  return tally.outcome(std::to_string(main_corpus().size()) + " graphs, worst gap " + fmt(worst) +
                       "; triangle lift matches C6");
}

// 8. Chain-complex law and Betti numbers.
Outcome criterion_8() {
  Tally tally;
  std::map<std::string, std::vector<int>> betti;
  for (const auto& [name, x] : test_complexes()) {
    for (int k = 1; k < x.top_dimension(); ++k)
      tally.check((boundary_matrix(x, k) * boundary_matrix(x, k + 1)).is_zero(), name + " dd=0");
    for (int k = 0; k <= x.top_dimension(); ++k) {
      try {
        const BettiNumber b = betti_number(x, k);
        tally.check(b.from_eigenvalues == b.from_rank, name + " betti agreement");
        betti[name].push_back(b.value);
      } catch (const std::exception& e) {
        tally.check(false, name + ": " + e.what());
      }
    }
  }
  tally.check(betti["hollow tetrahedron"] == std::vector<int>{1, 0, 1}, "hollow tetrahedron");
  tally.check(betti["torus 3 3"] == std::vector<int>{1, 2, 1}, "torus 3 3");
  tally.check(betti["torus 3 3 3"] == std::vector<int>{1, 3, 3, 1}, "torus 3 3 3");
  return tally.outcome(std::to_string(test_complexes().size()) + " complexes");
}

// 9. Valency-default identity and shifted bounds.
Outcome criterion_9() {
  Tally tally;
  std::size_t identities = 0, corollaries = 0;
  bool triangle = false, torus = false;
  BoundOptions options;
  options.psi.exact_threshold = 24;
  for (const auto& [name, x] : test_complexes()) {
    for (int k = 0; k <= x.top_dimension(); ++k) {
      const auto ell = valency_default(x, k);
      if (!ell) continue;
      IntMatrix shifted = higher_laplacian_exact(x, k);
      for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) += *ell;
      tally.check(shifted == twisted_laplacian_exact(degree_k_signed_graph(x, k).graph),
                  name + " identity k=" + std::to_string(k));
      ++identities;
      if (static_cast<int>(x.cell_count(k)) > options.psi.exact_threshold) continue;
      const CorollaryReport r = corollary_bounds_k(x, k, options);
      tally.check(r.graph_chain.exact && r.chain_ok && r.graph_chain.chain_ok && r.identity_ok && r.homology_ok &&
                      r.simplification_ok,
                  name + " corollary k=" + std::to_string(k));
      ++corollaries;
      triangle |= name == "single triangle" && k == 1;
      torus |= name == "torus 3 3" && k == 1;
    }
  }
  tally.check(triangle, "single triangle k=1 covered");
  tally.check(torus, "torus 3 3 k=1 covered");
  return tally.outcome(std::to_string(identities) + " identities, " + std::to_string(corollaries) +
                       " corollary chains with exact psi");
}

// 10. Torus Rayleigh example and mu1 <= 2 K psi.
Outcome criterion_10() {
  Tally tally;
  std::size_t examples = 0, bounds = 0;
  for (const std::vector<int>& k : std::vector<std::vector<int>>{{3, 3}, {3, 4}, {4, 4, 4}}) {
    for (int axis = 1; axis <= static_cast<int>(k.size()); ++axis) {
      const TorusRayleigh t = torus_rayleigh_example(k, axis);
      std::int64_t others = 1;
      for (int i = 0; i < static_cast<int>(k.size()); ++i)
        if (i != axis - 1) others *= k[static_cast<std::size_t>(i)];
      const double closed = 2.0 * (static_cast<double>(k.size()) - 1) / (1.0 - 1.0 / static_cast<double>(others));
      tally.check(t.kernel_ok && std::abs(t.quotient - closed) <= 1e-9, "torus example axis " + std::to_string(axis));
      ++examples;
    }
  }
  // Complexes whose k-cells have a (k-1)-face in no other k-cell stay in the set;
  // those faces add to the quotient without adding edges to the graph.
  BoundOptions options;
  options.psi.exact_threshold = 24;
  for (const auto& [name, x] : test_complexes()) {
    for (int k = 0; k <= x.top_dimension(); ++k) {
      const RayleighPsiBound r = rayleigh_psi_bound(x, k, options);
      tally.check(r.verified && r.ok, name + " k=" + std::to_string(k));
      ++bounds;
    }
  }
  return tally.outcome(std::to_string(examples) + " torus quotients, " + std::to_string(bounds) + " Rayleigh bounds");
}

// 11. Eigensolver residuals and characteristic polynomial roots.
Outcome criterion_11() {
  Tally tally;
  std::size_t matrices = 0, small = 0;
  double worst = 0;
  auto check_matrix = [&](const SymMatrix& m, const std::string& name) {
    const EigenDecomposition d = eigen_decompose(m);
    const double residual = max_residual(m, d);
    worst = std::max(worst, residual);
    tally.check(residual <= 1e-8, name + " residual");
    ++matrices;
  };
  for (const auto& item : main_corpus()) {
    check_matrix(twisted_laplacian(item.graph), item.name + " laplacian");
    check_matrix(signed_adjacency(item.graph), item.name + " adjacency");
    if (item.graph.vertex_count() <= 4) {
      for (const DenseInt& m : {dense_twisted_laplacian(item.graph), dense_signed_adjacency(item.graph)}) {
        std::vector<std::vector<double>> rows;
        for (const auto& row : m) rows.emplace_back(row.begin(), row.end());
        const double gap = max_gap(eigen_spectrum(SymMatrix::from_rows(rows)).eigenvalues, oracle_spectrum(m));
        tally.check(gap <= 1e-8, item.name + " characteristic polynomial");
        ++small;
      }
    }
  }
  for (const auto& [name, x] : test_complexes())
    for (int k = 0; k <= x.top_dimension(); ++k) check_matrix(higher_laplacian(x, k), name + " k=" + std::to_string(k));
  return tally.outcome(std::to_string(matrices) + " matrices, worst residual " + fmt(worst) + ", " +
                       std::to_string(small) + " spectra against polynomial roots");
}

// 12. Byte-stable JSON from the CLI; a hand-edited report exits with 1.
Outcome criterion_12() {
  Tally tally;
  const std::string fixtures = FIXTURE_DIR, golden = GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::string>> runs{
      {"--format json analyze \"" + fixtures + "/c4_one_negative.sg\"", "analyze_c4.json"},
      {"--format json psi \"" + fixtures + "/triangle_allneg.sg\" --exact", "psi_triangle.json"},
      {"--format json torus 3,3 --degree 1", "torus_3_3.json"}};
  for (const auto& [args, file] : runs) {
    const CommandResult a = run_cli(args), b = run_cli(args);
    tally.check(a.status == 0 && b.status == 0, file + " exit status");
    tally.check(!a.out.empty() && a.out == b.out, file + " repeated runs differ");
    tally.check(a.out == read_file(golden + "/" + file), file + " differs from golden file");
  }
  const CommandResult clean = run_cli("verify \"" + fixtures + "/c4_report.json\"");
  tally.check(clean.status == 0, "clean report exit " + std::to_string(clean.status));
  const CommandResult corrupted = run_cli("verify \"" + fixtures + "/corrupted_report.json\"");
  tally.check(corrupted.status == 1, "corrupted report exit " + std::to_string(corrupted.status));
  return tally.outcome("3 golden outputs; verify exits " + std::to_string(clean.status) + " on the clean report and " +
                       std::to_string(corrupted.status) + " on the corrupted one");
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3,  criterion_4,
                                                       criterion_5, criterion_6, criterion_7,  criterion_8,
                                                       criterion_9, criterion_10, criterion_11, criterion_12};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << " ("
              << fmt(seconds_since(t0)) << " s)" << std::endl;
  }
  return failed;
}
