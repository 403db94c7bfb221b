#pragma once

#include <string>
#include <vector>

#include "qtangle/rational_fn.hpp"

namespace qtangle {

struct Centered {
  HalfLaurent centered;
  int sign = 1;   // centered(q^{-1}) = sign * centered(q)
  int shift = 0;  // centered = t^shift * p
};

/// Shifts p so its support is symmetric about 0 and reports the q -> q^{-1} symmetry sign.
inline Centered normalize_palindromic(const HalfLaurent& p) {
  if (p.is_zero()) fail(ErrorKind::NotPalindromic, "zero polynomial");
  int shift = -(p.low() + p.high()) / 2;
  if ((p.low() + p.high()) % 2 != 0) {
    // support of odd width in t cannot be centered on an integer t-exponent
    fail(ErrorKind::NotPalindromic, to_string(p));
  }
  HalfLaurent c = p.shifted(shift);
  HalfLaurent inv = c.inverted_variable();
  if (inv == c) return {c, 1, shift};
  if (inv == -c) return {c, -1, shift};
  fail(ErrorKind::NotPalindromic, to_string(p));
}

inline bool is_palindromic_up_to_sign(const HalfLaurent& p) {
  try {
    normalize_palindromic(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/*
  z^delta * b(z^2)        when !inverted
  1 / (z^delta * b(z^2))  when inverted
  with b given by its coefficients b[0] + b[1] w + ... in w = z^2.
*/
struct ZPolyForm {
  int delta = 0;
  std::vector<Rational> b;
  bool inverted = false;

  bool integer_certified() const {
    for (const auto& c : b)
      if (!is_integer(c)) return false;
    return true;
  }

  /// z^delta * b(z^2) as a HalfLaurent.
  HalfLaurent body() const {
    HalfLaurent z2 = z_var() * z_var(), acc;
    for (std::size_t i = b.size(); i-- > 0;) acc = acc * z2 + HalfLaurent(b[i]);
    return delta ? acc * z_var() : acc;
  }

  RationalFn expand() const {
    HalfLaurent p = body();
    return inverted ? RationalFn(HalfLaurent(Rational(1)), p) : RationalFn(p);
  }

  friend bool operator==(const ZPolyForm& a, const ZPolyForm& b) {
    return a.delta == b.delta && a.b == b.b && a.inverted == b.inverted;
  }
};

/// Text form of b(w) as its argument z^2, e.g. "z^2 + 4".
inline std::string b_to_string(const std::vector<Rational>& b) {
  std::string out;
  for (std::size_t i = b.size(); i-- > 0;) {
    if (b[i] == 0) continue;
    Rational a = b[i] < 0 ? Rational(-b[i]) : b[i];
    out += out.empty() ? (b[i] < 0 ? "-" : "") : (b[i] < 0 ? " - " : " + ");
    std::string mono = i == 0 ? "" : (i == 1 ? "z^2" : "z^" + std::to_string(2 * i));
    if (mono.empty())
      out += to_string(a);
    else
      out += (a == 1 ? "" : to_string(a)) + mono;
  }
  return out.empty() ? "0" : out;
}

inline std::string to_string(const ZPolyForm& f) {
  std::string body;
  bool trivial_b = f.b.size() == 1 && f.b[0] == 1;
  if (f.delta && trivial_b)
    body = "z";
  else if (f.delta)
    body = "z(" + b_to_string(f.b) + ")";
  else
    body = f.b.size() > 1 && f.inverted ? "(" + b_to_string(f.b) + ")" : b_to_string(f.b);
  return f.inverted ? "1/" + body : body;
}

/// Writes a Laurent polynomial as z^delta * b(z^2), or fails with NotZExpressible.
inline ZPolyForm laurent_to_zpoly(const HalfLaurent& f) {
  if (f.is_zero()) fail(ErrorKind::NotZExpressible, "zero");
  int parity = ((f.low() % 2) + 2) % 2;
  bool uniform = true;
  f.for_each_term([&](int e, const Rational&) { uniform = uniform && (((e % 2) + 2) % 2 == parity); });
  if (!uniform) fail(ErrorKind::NotZExpressible, "mixed t-parity in " + to_string(f));
  HalfLaurent g = f;
  if (parity == 1) {
    auto q = divide_exact(f, z_var());
    if (!q) fail(ErrorKind::NotZExpressible, "odd part not divisible by z: " + to_string(f));
    g = *q;
  }
  ZPolyForm out;
  out.delta = parity;
  if (g.high() < 0) fail(ErrorKind::NotZExpressible, to_string(f));
  out.b.assign(static_cast<std::size_t>(g.high() / 2 + 1), Rational(0));
  const HalfLaurent z2 = z_var() * z_var();
  while (!g.is_zero()) {
    int top = g.high();
    if (top < 0 || top % 2 != 0) fail(ErrorKind::NotZExpressible, "not symmetric under q -> 1/q: " + to_string(f));
    Rational c = g.leading();
    out.b[static_cast<std::size_t>(top / 2)] = c;
    g -= z2.pow(static_cast<unsigned>(top / 2)) * c;
  }
  if (out.body() != f) fail(ErrorKind::NotZExpressible, "round trip mismatch for " + to_string(f));
  return out;
}

/// R = z^delta b(z^2) or R = 1/(z^delta b(z^2)).
inline ZPolyForm to_z_form(const RationalFn& r) {
  if (r.is_zero()) fail(ErrorKind::NotZExpressible, "zero function");
  ZPolyForm out;
  if (r.is_laurent()) {
    out = laurent_to_zpoly(r.num() * (Rational(1) / r.den().trailing()));
  } else if (r.num().is_monomial()) {
    // 1/R is Laurent
    HalfLaurent inv = r.den() * (Rational(1) / r.num().trailing());
    out = laurent_to_zpoly(inv.shifted(-r.num().low()));
    out.inverted = true;
  } else {
    fail(ErrorKind::NotZExpressible, "neither R nor 1/R is a Laurent polynomial: " + to_string(r));
  }
  if (out.expand() != r) fail(ErrorKind::NotZExpressible, "round trip mismatch for " + to_string(r));
  return out;
}

}  // namespace qtangle
