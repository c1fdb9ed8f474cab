#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace signed_spectra {

/// Exact ratio used for every combinatorial quantity (psi, psi-tilde, degree averages).
/// Compare only against Rational: with Boost 1.74 under C++20, `r == 0` picks
/// the reversed mixed-type overload and recurses without end.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace signed_spectra
