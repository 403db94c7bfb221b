#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qtangle/poly.hpp"

namespace qtangle {

/*
  Reduced quotient num/den of HalfLaurent values.

  Canonical representative: gcd(num, den) is a unit, den has lowest t-exponent 0
  and is monic. Two canonical values are strictly equal iff their stored
  numerators and denominators agree.
*/
class RationalFn {
 public:
  RationalFn() : den_(Rational(1)) {}
  RationalFn(HalfLaurent p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RationalFn(Rational c) : RationalFn(HalfLaurent(std::move(c))) {}    // NOLINT
  RationalFn(int c) : RationalFn(HalfLaurent(Rational(c))) {}          // NOLINT

  RationalFn(HalfLaurent num, HalfLaurent den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  const HalfLaurent& num() const noexcept { return num_; }
  const HalfLaurent& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const noexcept { return den_.is_constant(); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) fail(ErrorKind::InvalidInput, "division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFn operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  RationalFn inverse() const { return RationalFn(1) / *this; }

  /// Strict equality of canonical forms.
  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  /// Equality up to a unit ±t^k. Returns the unit when it exists.
  std::optional<HalfLaurent> unit_ratio_to(const RationalFn& o) const {
    if (is_zero() || o.is_zero()) {
      if (is_zero() && o.is_zero()) return HalfLaurent(Rational(1));
      return std::nullopt;
    }
    // den is monic with low 0 on both sides, so the unit can only live in the numerators.
    if (den_ != o.den_) return std::nullopt;
    if (num_.size() != o.num_.size()) return std::nullopt;
    for (Rational sign : {Rational(1), Rational(-1)}) {
      int shift = o.num_.low() - num_.low();
      if (num_.shifted(shift) * sign == o.num_) return t_pow(shift, sign);
    }
    return std::nullopt;
  }
  bool equal_up_to_unit(const RationalFn& o) const { return unit_ratio_to(o).has_value(); }

  RationalFn q_inverted() const { return {qtangle::q_inverted(num_), qtangle::q_inverted(den_)}; }
  RationalFn q_negated() const { return {qtangle::q_negated(num_), qtangle::q_negated(den_)}; }
  RationalFn q_stretched(int k) const { return {qtangle::q_stretched(num_, k), qtangle::q_stretched(den_, k)}; }
  RationalFn shifted(int t_exp) const {
    RationalFn r = *this;
    r.num_ = r.num_.shifted(t_exp);
    return r;
  }

  bool has_integral_q_exponents() const {
    return qtangle::has_integral_q_exponents(num_) && qtangle::has_integral_q_exponents(den_);
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) fail(ErrorKind::InvalidInput, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = HalfLaurent(Rational(1));
      return;
    }
    HalfLaurent g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
    int shift = -den_.low();
    Rational lead = den_.leading();
    num_ = num_.shifted(shift) * (Rational(1) / lead);
    den_ = den_.shifted(shift) * (Rational(1) / lead);
  }

  HalfLaurent num_;
  HalfLaurent den_;
};

inline std::string to_string(const RationalFn& r) {
  if (r.den() == HalfLaurent(Rational(1))) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

/// "(num)/(den)" or a bare polynomial.
inline RationalFn parse_rational_fn(std::string_view s) {
  auto pos = s.find(")/(");
  if (pos == std::string_view::npos) {
    std::string_view body = s;
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')' &&
        body.find('(', 1) == std::string_view::npos)
      body = body.substr(1, body.size() - 2);
    return RationalFn(parse_half_laurent(body));
  }
  std::string_view a = s.substr(0, pos), b = s.substr(pos + 3);
  while (!a.empty() && a.front() == ' ') a.remove_prefix(1);
  while (!b.empty() && b.back() == ' ') b.remove_suffix(1);
  if (a.empty() || a.front() != '(' || b.empty() || b.back() != ')')
    fail(ErrorKind::Parse, "expected '(num)/(den)' in '" + std::string(s) + "'");
  return RationalFn(parse_half_laurent(a.substr(1)), parse_half_laurent(b.substr(0, b.size() - 1)));
}

/// Value at q = 1 (t = 1); nullopt on a pole.
inline std::optional<Rational> evaluate_at_one(const RationalFn& r) {
  Rational d = evaluate_at_one(r.den());
  if (d == 0) return std::nullopt;
  return evaluate_at_one(r.num()) / d;
}

/// Value at q = -1 with q^{1/2} = i.
inline std::optional<Gaussian> evaluate_at_minus_one(const RationalFn& r) {
  Gaussian d = evaluate_at_minus_one(r.den());
  if (d.is_zero()) return std::nullopt;
  return evaluate_at_minus_one(r.num()) / d;
}

}  // namespace qtangle
