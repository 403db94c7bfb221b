#pragma once

#include <cstddef>
#include <vector>

#include "qtangle/rational_fn.hpp"

namespace qtangle {

/// First n Taylor coefficients of R at q = 0.
inline std::vector<Rational> series_coeffs(const RationalFn& r, std::size_t n) {
  if (!r.has_integral_q_exponents()) fail(ErrorKind::HalfIntegerExponent, to_string(r));
  if (r.den().coeff(0) == 0) fail(ErrorKind::PoleAtZero, to_string(r));
  if (!r.num().is_zero() && r.num().low() < 0) fail(ErrorKind::PoleAtZero, to_string(r));
  std::vector<Rational> a = r.num().is_zero() ? std::vector<Rational>{} : q_coeffs(r.num());
  std::vector<Rational> d = q_coeffs(r.den());
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = k < a.size() ? a[k] : Rational(0);
    for (std::size_t j = 1; j <= k && j < d.size(); ++j) s -= d[j] * c[k - j];
    c[k] = s / d[0];
  }
  return c;
}

}  // namespace qtangle
