#include "signed_spectra/complexes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace signed_spectra {

std::size_t Complex::cell_count(int k) const {
  if (k < 0 || k > top_dimension()) return 0;
  return cells_[static_cast<std::size_t>(k)].size();
}

std::span<const CellFace> Complex::faces(int k, std::size_t i) const {
  return faces_.at(static_cast<std::size_t>(k)).at(i);
}

std::span<const CellFace> Complex::cofaces(int k, std::size_t i) const {
  return cofaces_.at(static_cast<std::size_t>(k)).at(i);
}

const std::vector<int>& Complex::cell(int k, std::size_t i) const {
  return cells_.at(static_cast<std::size_t>(k)).at(i);
}

std::string Complex::describe(int k, std::size_t i) const {
  const auto& c = cell(k, i);
  std::ostringstream out;
  if (kind_ == Kind::simplicial) {
    out << '[';
    for (std::size_t j = 0; j < c.size(); ++j) out << (j ? " " : "") << c[j];
    out << ']';
  } else {
    const std::size_t dim = shape_.size();
    out << '(';
    for (std::size_t j = 0; j < dim; ++j) out << (j ? "," : "") << c[j];
    out << ")+{";
    for (std::size_t j = dim; j < c.size(); ++j) out << (j > dim ? "," : "") << 'e' << c[j] + 1;
    out << '}';
  }
  return out.str();
}

void Complex::finalize() {
  const std::size_t dims = cells_.size();
  cofaces_.assign(dims, {});
  for (std::size_t k = 0; k < dims; ++k) cofaces_[k].assign(cells_[k].size(), {});
  for (std::size_t k = 1; k < dims; ++k)
    for (std::size_t i = 0; i < cells_[k].size(); ++i)
      for (const CellFace& f : faces_[k][i]) cofaces_[k - 1][f.cell].push_back({i, f.sign});

  for (int k = 1; k < static_cast<int>(dims) - 1; ++k) {
    if (!(boundary_matrix(*this, k) * boundary_matrix(*this, k + 1)).is_zero())
      throw std::logic_error("boundary of boundary is not zero in degree " + std::to_string(k));
  }
}

Complex build_complex(const std::vector<std::vector<int>>& top_cells) {
  std::vector<std::set<std::vector<int>>> by_dim;
  std::set<std::vector<int>> listed;
  for (std::vector<int> c : top_cells) {
    if (c.empty()) throw std::invalid_argument("empty cell");
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw std::invalid_argument("cell repeats a vertex");
    if (c.front() < 0) throw std::invalid_argument("negative vertex index");
    if (!listed.insert(c).second) throw std::invalid_argument("duplicate cell");

    // Close under faces.
    std::vector<std::vector<int>> pending{c};
    while (!pending.empty()) {
      std::vector<int> s = std::move(pending.back());
      pending.pop_back();
      const std::size_t dim = s.size() - 1;
      if (by_dim.size() <= dim) by_dim.resize(dim + 1);
      if (!by_dim[dim].insert(s).second || dim == 0) continue;
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        pending.push_back(std::move(face));
      }
    }
  }

  Complex x;
  x.kind_ = Complex::Kind::simplicial;
  std::vector<std::map<std::vector<int>, std::size_t>> index(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    x.cells_.emplace_back(by_dim[k].begin(), by_dim[k].end());
    for (std::size_t i = 0; i < x.cells_[k].size(); ++i) index[k][x.cells_[k][i]] = i;
  }
  x.faces_.assign(x.cells_.size(), {});
  for (std::size_t k = 0; k < x.cells_.size(); ++k) {
    x.faces_[k].assign(x.cells_[k].size(), {});
    if (k == 0) continue;
    for (std::size_t i = 0; i < x.cells_[k].size(); ++i) {
      const auto& s = x.cells_[k][i];
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<int> face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        x.faces_[k][i].push_back({index[k - 1].at(face), j % 2 == 0 ? 1 : -1});
      }
    }
  }
  x.finalize();
  return x;
}

Complex cubical_torus(const std::vector<int>& kvec) {
  if (kvec.empty()) throw std::invalid_argument("torus needs at least one axis");
  for (int k : kvec)
    if (k < 3)
      throw std::invalid_argument("torus side " + std::to_string(k) +
                                  " < 3 would identify faces of a single cube; use sides >= 3");
  const std::size_t dim = kvec.size();
  if (dim > 20) throw std::invalid_argument("torus dimension too large");
  const std::size_t points =
      std::accumulate(kvec.begin(), kvec.end(), std::size_t{1}, [](std::size_t a, int k) { return a * static_cast<std::size_t>(k); });

  auto coords_of = [&](std::size_t linear) {
    std::vector<int> p(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      p[a] = static_cast<int>(linear % static_cast<std::size_t>(kvec[a]));
      linear /= static_cast<std::size_t>(kvec[a]);
    }
    return p;
  };
  auto linear_of = [&](const std::vector<int>& p) {
    std::size_t linear = 0;
    for (std::size_t a = dim; a-- > 0;) linear = linear * static_cast<std::size_t>(kvec[a]) + static_cast<std::size_t>(p[a]);
    return linear;
  };

  // Axis subsets per dimension, in lexicographic order of the ascending axis lists.
  std::vector<std::vector<std::vector<int>>> axis_sets(dim + 1);
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
    std::vector<int> axes;
    for (std::size_t a = 0; a < dim; ++a)
      if (mask & (1u << a)) axes.push_back(static_cast<int>(a));
    axis_sets[axes.size()].push_back(std::move(axes));
  }
  for (auto& sets : axis_sets) std::sort(sets.begin(), sets.end());

  std::vector<std::map<std::vector<int>, std::size_t>> offset(dim + 1);
  Complex x;
  x.kind_ = Complex::Kind::cubical;
  x.shape_ = kvec;
  x.cells_.assign(dim + 1, {});
  x.faces_.assign(dim + 1, {});
  for (std::size_t d = 0; d <= dim; ++d) {
    for (const auto& axes : axis_sets[d]) {
      offset[d][axes] = x.cells_[d].size();
      for (std::size_t lin = 0; lin < points; ++lin) {
        std::vector<int> record = coords_of(lin);
        record.insert(record.end(), axes.begin(), axes.end());
        x.cells_[d].push_back(std::move(record));
      }
    }
  }
  for (std::size_t d = 1; d <= dim; ++d) {
    x.faces_[d].assign(x.cells_[d].size(), {});
    for (const auto& axes : axis_sets[d]) {
      const std::size_t base = offset[d].at(axes);
      for (std::size_t lin = 0; lin < points; ++lin) {
        auto& faces = x.faces_[d][base + lin];
        const std::vector<int> p = coords_of(lin);
        for (std::size_t i = 0; i < axes.size(); ++i) {
          std::vector<int> rest = axes;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          const std::size_t face_base = offset[d - 1].at(rest);
          const int sign = i % 2 == 0 ? 1 : -1;
          std::vector<int> shifted = p;
          const auto a = static_cast<std::size_t>(axes[i]);
          shifted[a] = (shifted[a] + 1) % kvec[a];
          faces.push_back({face_base + linear_of(shifted), sign});
          faces.push_back({face_base + lin, -sign});
        }
      }
    }
  }
  x.faces_[0].assign(x.cells_[0].size(), {});
  x.finalize();
  return x;
}

Complex graph_complex(const SignedGraph& g) {
  std::vector<std::vector<int>> cells;
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges())
    if (seen.insert({e.u, e.v}).second) cells.push_back({e.u, e.v});
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.valency(v) == 0) cells.push_back({v});
  return build_complex(cells);
}

Complex load_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string buffer;
  std::size_t line_no = 0;
  std::vector<std::vector<int>> cells;
  std::optional<std::vector<int>> torus;
  while (std::getline(in, buffer)) {
    ++line_no;
    std::string line = buffer.substr(0, buffer.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'cell:' or 'torus:'");
    std::string key = line.substr(0, colon);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::string rest = line.substr(colon + 1);

    if (key == "cell") {
      if (torus) throw ParseError(line_no, "cannot mix cells with a torus");
      std::istringstream tokens(rest);
      std::vector<int> cell;
      std::string tok;
      while (tokens >> tok) {
        try {
          std::size_t used = 0;
          int v = std::stoi(tok, &used);
          if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
          cell.push_back(v);
        } catch (const std::exception&) {
          throw ParseError(line_no, "bad vertex '" + tok + "'");
        }
      }
      if (cell.empty()) throw ParseError(line_no, "cell without vertices");
      cells.push_back(std::move(cell));
    } else if (key == "torus") {
      if (torus || !cells.empty()) throw ParseError(line_no, "a torus must be the only entry");
      std::vector<int> kvec;
      std::replace(rest.begin(), rest.end(), ',', ' ');
      std::istringstream tokens(rest);
      std::string tok;
      while (tokens >> tok) {
        try {
          std::size_t used = 0;
          int k = std::stoi(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          kvec.push_back(k);
        } catch (const std::exception&) {
          throw ParseError(line_no, "bad torus side '" + tok + "'");
        }
      }
      torus = std::move(kvec);
    } else {
      throw ParseError(line_no, "unknown entry '" + key + "'");
    }
  }
  if (torus) return cubical_torus(*torus);
  try {
    return build_complex(cells);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Complex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_complex(buf.str());
}

IntMatrix boundary_matrix(const Complex& x, int k) {
  if (k < 1 || k > x.top_dimension())
    throw std::invalid_argument("boundary degree " + std::to_string(k) + " outside 1.." +
                                std::to_string(x.top_dimension()));
  IntMatrix d(x.cell_count(k - 1), x.cell_count(k));
  for (std::size_t i = 0; i < x.cell_count(k); ++i)
    for (const CellFace& f : x.faces(k, i)) d(f.cell, i) += f.sign;
  return d;
}

IntMatrix higher_laplacian_exact(const Complex& x, int k) {
  if (k < 0 || k > x.top_dimension())
    throw std::invalid_argument("Laplacian degree " + std::to_string(k) + " outside 0.." +
                                std::to_string(x.top_dimension()));
  const std::size_t n = x.cell_count(k);
  IntMatrix lap(n, n);
  if (k >= 1) {
    const IntMatrix d = boundary_matrix(x, k);
    lap = lap + d.transpose() * d;
  }
  if (k + 1 <= x.top_dimension()) {
    const IntMatrix d = boundary_matrix(x, k + 1);
    lap = lap + d * d.transpose();
  }
  return lap;
}

SymMatrix higher_laplacian(const Complex& x, int k) { return SymMatrix::from_int(higher_laplacian_exact(x, k)); }

std::size_t rational_rank(const IntMatrix& m) {
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> a(m.rows(), std::vector<cpp_rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][col] == 0) continue;
      const cpp_rational factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < m.cols(); ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

BettiNumber betti_number(const Complex& x, int k, double tol) {
  if (k < 0 || k > x.top_dimension())
    throw std::invalid_argument("degree " + std::to_string(k) + " outside 0.." + std::to_string(x.top_dimension()));
  BettiNumber b;
  const auto spectrum = eigen_spectrum(higher_laplacian(x, k)).eigenvalues;
  b.from_eigenvalues = static_cast<int>(std::count_if(spectrum.begin(), spectrum.end(), [&](double l) { return std::abs(l) < tol; }));

  std::size_t rank = 0;
  if (k >= 1) rank += rational_rank(boundary_matrix(x, k));
  if (k + 1 <= x.top_dimension()) rank += rational_rank(boundary_matrix(x, k + 1));
  b.from_rank = static_cast<int>(x.cell_count(k) - rank);

  if (b.from_eigenvalues != b.from_rank)
    throw std::runtime_error("Betti number disagreement in degree " + std::to_string(k) + ": eigenvalues give " +
                             std::to_string(b.from_eigenvalues) + ", ranks give " + std::to_string(b.from_rank));
  b.value = b.from_rank;
  return b;
}

namespace {

struct CellCounts {
  int down = 0;       // |dx|
  int up = 0;         // |d*x|
  int lower_nbrs = 0; // |N_-1(x)| with multiplicity
  int upper_nbrs = 0; // |N_+1(x)| with multiplicity
};

CellCounts cell_counts(const Complex& x, int k, std::size_t i) {
  CellCounts c;
  if (k >= 1) {
    for (const CellFace& f : x.faces(k, i)) {
      ++c.down;
      c.lower_nbrs += static_cast<int>(x.cofaces(k - 1, f.cell).size()) - 1;
    }
  }
  for (const CellFace& z : x.cofaces(k, i)) {
    ++c.up;
    c.upper_nbrs += static_cast<int>(x.faces(k + 1, z.cell).size()) - 1;
  }
  return c;
}

void check_degree(const Complex& x, int k) {
  if (k < 0 || k > x.top_dimension())
    throw std::invalid_argument("degree " + std::to_string(k) + " outside 0.." + std::to_string(x.top_dimension()));
}

}  // namespace

std::optional<int> valency_default(const Complex& x, int k) {
  check_degree(x, k);
  std::optional<int> ell;
  for (std::size_t i = 0; i < x.cell_count(k); ++i) {
    const CellCounts c = cell_counts(x, k, i);
    const int value = c.lower_nbrs + c.upper_nbrs - c.down - c.up;
    if (ell && *ell != value) return std::nullopt;
    ell = value;
  }
  return ell;
}

DegreeKGraph degree_k_signed_graph(const Complex& x, int k) {
  check_degree(x, k);
  const std::size_t n = x.cell_count(k);
  std::vector<Edge> edges;
  DegreeKGraph out;
  out.updeg.assign(n, 0);
  out.downdeg.assign(n, 0);

  if (k >= 1) {
    for (std::size_t f = 0; f < x.cell_count(k - 1); ++f) {
      auto incident = x.cofaces(k - 1, f);
      for (std::size_t a = 0; a < incident.size(); ++a)
        for (std::size_t b = a + 1; b < incident.size(); ++b) {
          if (incident[a].cell == incident[b].cell) continue;
          edges.push_back({static_cast<int>(incident[a].cell), static_cast<int>(incident[b].cell),
                           -incident[a].sign * incident[b].sign});
          out.labels.push_back({true, f});
        }
    }
  }
  if (k + 1 <= x.top_dimension()) {
    for (std::size_t z = 0; z < x.cell_count(k + 1); ++z) {
      auto incident = x.faces(k + 1, z);
      for (std::size_t a = 0; a < incident.size(); ++a)
        for (std::size_t b = a + 1; b < incident.size(); ++b) {
          if (incident[a].cell == incident[b].cell) continue;
          edges.push_back({static_cast<int>(incident[a].cell), static_cast<int>(incident[b].cell),
                           -incident[a].sign * incident[b].sign});
          out.labels.push_back({false, z});
        }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const CellCounts c = cell_counts(x, k, i);
    out.updeg[i] = c.up;
    out.downdeg[i] = c.down;
  }
  out.graph = SignedGraph(static_cast<int>(n), std::move(edges));
  return out;
}

CorollaryReport corollary_bounds_k(const Complex& x, int k, const BoundOptions& options) {
  const auto ell = valency_default(x, k);
  if (!ell)
    throw std::invalid_argument("no valency default in degree " + std::to_string(k) +
                                "; only the Rayleigh-quotient bound applies");
  CorollaryReport r;
  r.ell = *ell;
  const DegreeKGraph dk = degree_k_signed_graph(x, k);
  const SignedGraph& g = dk.graph;

  IntMatrix shifted = higher_laplacian_exact(x, k);
  for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) += r.ell;
  r.identity_ok = shifted == twisted_laplacian_exact(g);

  r.mu1 = eigen_spectrum(higher_laplacian(x, k), options.eigen).mu1;
  const int d_max = degree_stats(g).d_max;
  const IsoperimetricReport iso = psi_global(g, options.psi);
  const SpectralReport graph_spectrum = eigen_spectrum(twisted_laplacian(g), options.eigen);
  r.graph_chain = evaluate_chain(d_max, iso.psi, iso.psi_tilde, graph_spectrum.mu1, iso.exact, options.tol);

  r.lower_shifted = cheeger_lower_bound(d_max, iso.psi) - r.ell;
  r.upper_shifted = iso.psi_tilde - r.ell;
  r.upper_loose_shifted = iso.psi * 2 - r.ell;
  const double tol = options.tol;
  if (iso.exact) {
    r.chain_ok = r.lower_shifted <= r.mu1 + tol && r.mu1 <= to_double(r.upper_shifted) + tol &&
                 r.upper_shifted <= r.upper_loose_shifted;
  } else {
    r.chain_ok = r.mu1 <= to_double(r.upper_shifted) + tol;
  }

  r.betti = betti_number(x, k).value;
  r.homology_ok = (std::abs(r.mu1) < 1e-8) == (r.betti > 0);

  // The cell of largest valency in the degree-k graph.
  std::size_t widest = 0;
  for (std::size_t i = 1; i < x.cell_count(k); ++i)
    if (g.valency(static_cast<int>(i)) > g.valency(static_cast<int>(widest))) widest = i;
  if (x.cell_count(k) > 0)
    r.simplification_ok = d_max - r.ell == dk.downdeg[widest] + dk.updeg[widest];
  return r;
}

RayleighPsiBound rayleigh_psi_bound(const Complex& x, int k, const BoundOptions& options) {
  check_degree(x, k);
  RayleighPsiBound r;
  int big_k = 0;
  if (k >= 1)
    for (std::size_t y = 0; y < x.cell_count(k - 1); ++y)
      big_k = std::max(big_k, static_cast<int>(x.cofaces(k - 1, y).size()));
  for (std::size_t i = 0; i < x.cell_count(k); ++i)
    big_k = std::max(big_k, static_cast<int>(x.cofaces(k, i).size()));
  r.k_constant = big_k;

  r.lhs = eigen_spectrum(higher_laplacian(x, k), options.eigen).mu1;
  const SignedGraph g = degree_k_signed_graph(x, k).graph;

  PsiOptions psi_options = options.psi;
  if (g.vertex_count() > psi_options.exact_threshold) psi_options.mode = SearchMode::heuristic;
  const IsoperimetricReport iso = psi_global(g, psi_options);
  r.psi = iso.psi;
  r.psi_exact = iso.exact;
  r.rhs = 2.0 * big_k * to_double(iso.psi);
  // psi >= 0, so a vanishing lhs needs no exact psi.
  r.verified = iso.exact || r.lhs <= options.tol;
  r.ok = r.verified && r.lhs <= r.rhs + options.tol;
  return r;
}

TorusRayleigh torus_rayleigh_example(const std::vector<int>& kvec, int axis) {
  const int n = static_cast<int>(kvec.size());
  if (axis < 1 || axis > n) throw std::invalid_argument("axis must be in 1.." + std::to_string(n));
  std::int64_t others = 1;
  for (int i = 0; i < n; ++i)
    if (i != axis - 1) others *= kvec[static_cast<std::size_t>(i)];
  if (others == 1)
    throw std::invalid_argument("the product of the other torus sides is 1; the loop itself spans the kernel");

  const Complex x = cubical_torus(kvec);
  const IntMatrix lap = higher_laplacian_exact(x, 1);
  const std::size_t edges = x.cell_count(1);
  const auto dim = static_cast<std::size_t>(n);

  // Translate chains: all edges along one axis.
  std::vector<std::vector<std::int64_t>> kernel(dim, std::vector<std::int64_t>(edges, 0));
  std::vector<double> loop(edges, 0.0);
  for (std::size_t e = 0; e < edges; ++e) {
    const auto& record = x.cell(1, e);
    const auto dir = static_cast<std::size_t>(record[dim]);
    kernel[dir][e] = 1;
    bool on_axis = dir == static_cast<std::size_t>(axis - 1);
    for (std::size_t a = 0; a < dim && on_axis; ++a)
      if (a != dir && record[a] != 0) on_axis = false;
    if (on_axis) loop[e] = 1.0;
  }

  TorusRayleigh r;
  for (const auto& g : kernel) {
    for (std::size_t i = 0; i < edges && r.kernel_ok; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < edges; ++j) acc += lap(i, j) * g[j];
      if (acc != 0) r.kernel_ok = false;
    }
  }

  // Orthogonal projection of the loop off span{translate chains}.
  std::vector<double> projected = loop;
  for (const auto& g : kernel) {
    double dot = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < edges; ++i) {
      dot += loop[i] * static_cast<double>(g[i]);
      norm += static_cast<double>(g[i] * g[i]);
    }
    for (std::size_t i = 0; i < edges; ++i) projected[i] -= dot / norm * static_cast<double>(g[i]);
  }

  r.quotient = rayleigh_quotient(SymMatrix::from_int(lap), projected);
  r.expected_exact = Rational(2 * (n - 1)) / (Rational(1) - Rational(1, others));
  r.expected = to_double(r.expected_exact);
  return r;
}

}  // namespace signed_spectra
