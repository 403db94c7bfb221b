#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtangle/rational_fn.hpp"
#include "qtangle/zform.hpp"

namespace qtangle {

/*
  Algebraic q-fraction of a 2-tangle: the pair (N, D) of Alexander-Conway
  polynomials of its numerator and denominator closures. Pairs are compared
  modulo a common unit ±t^k; construction fixes that unit so D (or N when
  D = 0) is centered with positive leading coefficient.
*/
class TangleFraction {
 public:
  TangleFraction() : num_(), den_(Rational(1)) {}
  TangleFraction(HalfLaurent num, HalfLaurent den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const HalfLaurent& num() const noexcept { return num_; }
  const HalfLaurent& den() const noexcept { return den_; }
  bool is_infinite() const noexcept { return den_.is_zero(); }

  RationalFn value() const {
    if (den_.is_zero()) fail(ErrorKind::DenominatorVanishes, "tangle fraction has zero denominator");
    return {num_, den_};
  }

  /// N1·D2 = u·N2·D1 for a unit u = ±t^k.
  bool equal_mod_units(const TangleFraction& o) const {
    HalfLaurent a = num_ * o.den_, b = o.num_ * den_;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.size() != b.size()) return false;
    HalfLaurent s = a.shifted(b.low() - a.low());
    return s == b || -s == b;
  }

  /// Exact equality of the represented values N/D (no unit freedom).
  bool equal_value(const TangleFraction& o) const { return num_ * o.den_ == o.num_ * den_; }

 private:
  void normalize() {
    if (num_.is_zero() && den_.is_zero()) fail(ErrorKind::InvalidInput, "tangle fraction (0, 0)");
    const HalfLaurent& key = den_.is_zero() ? num_ : den_;
    int shift = -((key.low() + key.high()) >= 0 ? (key.low() + key.high()) / 2 : -((-(key.low() + key.high()) + 1) / 2));
    Rational sign = key.leading() < 0 ? Rational(-1) : Rational(1);
    // keep the represented value N/D unchanged: only a common unit is applied
    num_ = num_.shifted(shift) * sign;
    den_ = den_.shifted(shift) * sign;
  }

  HalfLaurent num_;
  HalfLaurent den_;
};

inline std::string to_string(const TangleFraction& f) {
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

/// Conway additivity: F1 + F2 = (N1 D2 + N2 D1, D1 D2).
inline TangleFraction tangle_sum(const TangleFraction& a, const TangleFraction& b) {
  return {a.num() * b.den() + b.num() * a.den(), a.den() * b.den()};
}

/// Rotation by a quarter turn exchanges the two closures.
inline TangleFraction tangle_invert(const TangleFraction& f) { return {f.den(), f.num()}; }

/// Mirror image: z -> -z, realized as t -> t^{-1}.
inline TangleFraction tangle_mirror(const TangleFraction& f) {
  return {f.num().inverted_variable(), f.den().inverted_variable()};
}

/// c-fold tangle sum (mirror copies for c < 0); c = 0 gives the zero tangle.
inline TangleFraction tangle_multiple(const TangleFraction& f, long c) {
  TangleFraction unit = c < 0 ? tangle_mirror(f) : f;
  TangleFraction acc(HalfLaurent{}, HalfLaurent(Rational(1)));
  for (long i = 0; i < (c < 0 ? -c : c); ++i) acc = tangle_sum(acc, unit);
  return acc;
}

inline TangleFraction fraction_of(const RationalFn& r) { return {r.num(), r.den()}; }

/// Building blocks with q-fractions z·b(z^2) and 1/(z·b(z^2)); b must have integer coefficients.
inline TangleFraction make_zpoly_tangle(const std::vector<Rational>& b, bool inverted) {
  for (const auto& c : b)
    if (!is_integer(c)) fail(ErrorKind::InvalidInput, "building-block polynomial must have integer coefficients");
  ZPolyForm f{1, b, false};
  HalfLaurent body = f.body();
  if (body.is_zero()) fail(ErrorKind::InvalidInput, "building-block polynomial is zero");
  return inverted ? TangleFraction(HalfLaurent(Rational(1)), body) : TangleFraction(body, HalfLaurent(Rational(1)));
}

inline TangleFraction make_zpoly_tangle(const std::vector<long>& b, bool inverted) {
  std::vector<Rational> r;
  for (long c : b) r.emplace_back(c);
  return make_zpoly_tangle(r, inverted);
}

/// |g| when it is a rational number (one of re, im vanishes or the norm is a rational square).
inline std::optional<Rational> exact_modulus(const Gaussian& g) {
  if (g.im == 0) return g.re < 0 ? Rational(-g.re) : g.re;
  if (g.re == 0) return g.im < 0 ? Rational(-g.im) : g.im;
  Rational n = g.norm();
  Integer a = boost::multiprecision::sqrt(numerator_of(n)), b = boost::multiprecision::sqrt(denominator_of(n));
  if (a * a == numerator_of(n) && b * b == denominator_of(n)) return Rational(a, b);
  return std::nullopt;
}

/// |Δ(-1)| with q^{1/2} = i.
inline Integer determinant_of(const HalfLaurent& alexander) {
  auto m = exact_modulus(evaluate_at_minus_one(alexander));
  if (!m || !is_integer(*m)) fail(ErrorKind::InvalidInput, "Δ(-1) is not a Gaussian integer of integral modulus");
  return numerator_of(*m);
}

struct FractionDeterminant {
  Integer numerator_determinant;
  Integer denominator_determinant;
  std::optional<Gaussian> fraction;  // N(-1)/D(-1); nullopt when D(-1) = 0
};

inline FractionDeterminant determinant(const TangleFraction& f) {
  FractionDeterminant d;
  Gaussian n = evaluate_at_minus_one(f.num()), m = evaluate_at_minus_one(f.den());
  auto mn = exact_modulus(n), md = exact_modulus(m);
  d.numerator_determinant = mn ? numerator_of(*mn) / denominator_of(*mn) : Integer(-1);
  d.denominator_determinant = md ? numerator_of(*md) / denominator_of(*md) : Integer(-1);
  if (!m.is_zero()) d.fraction = n / m;
  return d;
}

}  // namespace qtangle
