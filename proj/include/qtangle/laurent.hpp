#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "qtangle/error.hpp"
#include "qtangle/rational.hpp"

namespace qtangle {

/*
  Laurent polynomial in one variable with coefficients in C.

  Stored densely: coefficient of x^(low + i) is coeffs[i]. The zero polynomial
  has no coefficients; otherwise the first and last stored coefficients are
  nonzero, so the support is exactly [low, high].
*/
template <class C>
class Laurent {
 public:
  using coeff_type = C;

  Laurent() = default;
  Laurent(C c) {  // NOLINT: constants convert implicitly
    if (c != C(0)) coeffs_.push_back(std::move(c));
  }

  static Laurent monomial(C c, int exponent) {
    Laurent p(std::move(c));
    p.low_ = p.coeffs_.empty() ? 0 : exponent;
    return p;
  }

  /// Coefficients given from exponent `low` upward.
  static Laurent from_coeffs(std::vector<C> coeffs, int low = 0) {
    Laurent p;
    p.coeffs_ = std::move(coeffs);
    p.low_ = low;
    p.trim();
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Width of the support; 0 for monomials. Undefined for zero.
  int span() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const C& leading() const { return coeffs_.back(); }
  const C& trailing() const { return coeffs_.front(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  C coeff(int e) const {
    if (is_zero() || e < low_ || e > high()) return C(0);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  bool is_constant() const noexcept { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }

  /// Calls f(exponent, coefficient) for every nonzero term in increasing order.
  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != C(0)) f(low_ + static_cast<int>(i), coeffs_[i]);
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return add_scaled(o, C(1)); }
  Laurent& operator-=(const Laurent& o) { return add_scaled(o, C(-1)); }

  Laurent& operator*=(const C& s) {
    if (s == C(0)) {
      coeffs_.clear();
      low_ = 0;
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const C& s) { return a *= s; }
  friend Laurent operator*(const C& s, Laurent a) { return a *= s; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_coeffs(std::move(out), a.low_ + b.low_);
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent pow(unsigned n) const {
    Laurent result(C(1)), base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  /// Multiplication by x^k.
  Laurent shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// x -> x^{-1}.
  Laurent inverted_variable() const {
    Laurent r = *this;
    std::reverse(r.coeffs_.begin(), r.coeffs_.end());
    if (!r.is_zero()) r.low_ = -high();
    return r;
  }

  /// x -> s·x for a scalar s.
  Laurent scaled_variable(const C& s) const {
    if (is_zero()) return {};
    Laurent r = *this;
    C sinv = C(1) / s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      int e = low_ + static_cast<int>(i);
      C f(1);
      for (int k = 0; k < (e < 0 ? -e : e); ++k) f *= (e < 0 ? sinv : s);
      r.coeffs_[i] *= f;
    }
    r.trim();
    return r;
  }

  /// x -> x^k for k >= 1.
  Laurent stretched(int k) const {
    if (is_zero() || k == 1) return *this;
    std::vector<C> out(static_cast<std::size_t>(span() * k + 1), C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(k)] = coeffs_[i];
    return from_coeffs(std::move(out), low_ * k);
  }

  /// Evaluation with exact powers; negative exponents need an invertible point.
  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + V(coeffs_[i]);
    if (is_zero()) return acc;
    if (low_ > 0)
      for (int k = 0; k < low_; ++k) acc = acc * x;
    else if (low_ < 0) {
      V inv = V(1) / x;
      for (int k = 0; k < -low_; ++k) acc = acc * inv;
    }
    return acc;
  }

  const std::vector<C>& dense() const noexcept { return coeffs_; }

 private:
  Laurent& add_scaled(const Laurent& o, const C& s) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      if (s != C(1)) *this *= s;
      return *this;
    }
    int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<C> out(static_cast<std::size_t>(hi - lo + 1), C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += s * o.coeffs_[i];
    coeffs_ = std::move(out);
    low_ = lo;
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == C(0)) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == C(0)) --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }

  int low_ = 0;
  std::vector<C> coeffs_;
};

/// Polynomial division with remainder after normalizing both supports to start at 0.
/// Returns (quotient, remainder) with a = t^(la-lb)·(q·b' + r) where b' = b·t^(-lb).
template <class C>
std::pair<Laurent<C>, Laurent<C>> divmod_poly(const Laurent<C>& a, const Laurent<C>& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "division by zero polynomial");
  std::vector<C> rem = a.dense();
  const std::vector<C>& d = b.dense();
  if (rem.size() < d.size()) return {Laurent<C>{}, Laurent<C>::from_coeffs(rem)};
  std::vector<C> quot(rem.size() - d.size() + 1, C(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    C c = rem[k + d.size() - 1] / d.back();
    if (c == C(0)) continue;
    quot[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  return {Laurent<C>::from_coeffs(std::move(quot)), Laurent<C>::from_coeffs(std::move(rem))};
}

/// Exact quotient a/b if b divides a in the Laurent ring, otherwise nullopt.
template <class C>
std::optional<Laurent<C>> divide_exact(const Laurent<C>& a, const Laurent<C>& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "division by zero polynomial");
  if (a.is_zero()) return Laurent<C>{};
  auto [q, r] = divmod_poly(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q.shifted(a.low() - b.low());
}

/// Monic gcd in the Laurent ring over a field (units t^k are ignored: result has low() == 0).
template <class C>
Laurent<C> gcd(Laurent<C> a, Laurent<C> b) {
  if (a.is_zero() && b.is_zero()) return {};
  a = a.shifted(-a.low());
  b = b.shifted(-b.low());
  while (!b.is_zero()) {
    auto r = divmod_poly(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.shifted(-r.low());
    if (!b.is_zero()) b *= C(1) / b.leading();
  }
  C lead = a.leading();
  return a * (C(1) / lead);
}

}  // namespace qtangle
