#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace signed_spectra {

/// Dense integer matrix, row-major. Used for incidence and boundary operators
/// where exactness matters.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Dense real symmetric matrix. Symmetry is enforced on every write.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  /// Throws std::invalid_argument unless `rows` is square and symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymMatrix from_int(const IntMatrix& m);

  std::size_t order() const { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double value) {
    data_[i * order_ + j] = value;
    data_[j * order_ + i] = value;
  }

  std::vector<double> apply(std::span<const double> f) const;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

}  // namespace signed_spectra
