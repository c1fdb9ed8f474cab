#include "signed_spectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace signed_spectra {

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(rows[i][j])) throw std::invalid_argument("matrix has a non-finite entry");
      if (rows[i][j] != rows[j][i])
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      m.data_[i * n + j] = rows[i][j];
    }
  }
  return m;
}

SymMatrix SymMatrix::from_int(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  SymMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
      out.data_[i * out.order_ + j] = static_cast<double>(m(i, j));
    }
  return out;
}

std::vector<double> SymMatrix::apply(std::span<const double> f) const {
  if (f.size() != order_) throw std::invalid_argument("vector length does not match matrix order");
  std::vector<double> out(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < order_; ++j) acc += data_[i * order_ + j] * f[j];
    out[i] = acc;
  }
  return out;
}

IntMatrix twisted_laplacian_exact(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix l(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    l(u, u) += 1;
    l(v, v) += 1;
    l(u, v) -= e.sign;
    l(v, u) -= e.sign;
  }
  return l;
}

SymMatrix twisted_laplacian(const SignedGraph& g) { return SymMatrix::from_int(twisted_laplacian_exact(g)); }

IntMatrix incidence(const SignedGraph& g) {
  IntMatrix d(g.edge_count(), static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    d(i, static_cast<std::size_t>(e.v)) += 1;
    d(i, static_cast<std::size_t>(e.u)) -= e.sign;
  }
  return d;
}

SymMatrix signed_adjacency(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  SymMatrix a(n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    a.set(u, v, a(u, v) + e.sign);
  }
  return a;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition eigen_decompose(const SymMatrix& m, const EigenOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("eigen tolerance must be positive");
  const std::size_t n = m.order();
  EigenDecomposition out;
  if (n == 0) return out;
  if (n == 1) {
    out.eigenvalues = {m(0, 0)};
    out.eigenvectors = {{1.0}};
    return out;
  }

  std::vector<double> a(n * n), v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    v[i * n + i] = 1.0;
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  bool converged = false;
  int sweep = 0;
  for (; sweep <= options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < options.tol) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J = [[c, s], [-s, c]] in the (p, q) plane.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged)
    throw ConvergenceError("Jacobi iteration did not converge in " + std::to_string(options.max_sweeps) + " sweeps");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });
  out.sweeps = sweep;
  for (std::size_t i : idx) {
    out.eigenvalues.push_back(at(i, i));
    std::vector<double> vec(n);
    for (std::size_t k = 0; k < n; ++k) vec[k] = v[k * n + i];
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

double max_residual(const SymMatrix& m, const EigenDecomposition& d) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
    const auto mv = m.apply(d.eigenvectors[i]);
    double sum = 0.0;
    for (std::size_t k = 0; k < mv.size(); ++k) {
      const double r = mv[k] - d.eigenvalues[i] * d.eigenvectors[i][k];
      sum += r * r;
    }
    worst = std::max(worst, std::sqrt(sum));
  }
  return worst;
}

SpectralReport eigen_spectrum(const SymMatrix& m, const EigenOptions& options) {
  EigenDecomposition d = eigen_decompose(m, options);
  SpectralReport report;
  report.residual = max_residual(m, d);
  report.eigenvalues = std::move(d.eigenvalues);
  if (!report.eigenvalues.empty()) report.mu1 = report.eigenvalues.front();
  return report;
}

double rayleigh_quotient(const SymMatrix& m, std::span<const double> f) {
  const auto mf = m.apply(f);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    num += f[i] * mf[i];
    den += f[i] * f[i];
  }
  if (den == 0.0) throw std::invalid_argument("Rayleigh quotient of the zero vector");
  return num / den;
}

}  // namespace signed_spectra
