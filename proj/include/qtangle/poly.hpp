#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qtangle/laurent.hpp"
#include "qtangle/rational.hpp"

namespace qtangle {

/*
  HalfLaurent: a Laurent polynomial in t with t^2 = q, so q-exponents are
  multiples of 1/2. Exponents are stored as t-powers throughout the library;
  the text form renders them as q^{k/2}.
*/
using HalfLaurent = Laurent<Rational>;

inline HalfLaurent t_pow(int k, Rational c = 1) { return HalfLaurent::monomial(std::move(c), k); }
inline HalfLaurent q_pow(int k, Rational c = 1) { return HalfLaurent::monomial(std::move(c), 2 * k); }

/// z = q^{-1/2} - q^{1/2}.
inline HalfLaurent z_var() { return t_pow(-1) - t_pow(1); }

/// q-integer [m] = 1 + q + ... + q^{m-1}.
inline HalfLaurent q_integer(int m) {
  HalfLaurent p;
  for (int i = 0; i < m; ++i) p += q_pow(i);
  return p;
}

/// Polynomial in q from its coefficient list c[0] + c[1] q + ...
inline HalfLaurent from_q_coeffs(const std::vector<Rational>& c, int low_q = 0) {
  return HalfLaurent::from_coeffs(c, 0).stretched(2).shifted(2 * low_q);
}

inline HalfLaurent from_q_coeffs(std::initializer_list<int> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return from_q_coeffs(v);
}

inline bool has_integral_q_exponents(const HalfLaurent& p) {
  bool ok = true;
  p.for_each_term([&](int e, const Rational&) { ok = ok && (e % 2 == 0); });
  return ok;
}

inline bool has_integer_coeffs(const HalfLaurent& p) {
  bool ok = true;
  p.for_each_term([&](int, const Rational& c) { ok = ok && is_integer(c); });
  return ok;
}

/// Coefficients c[0..] of a polynomial in q (requires integral, nonnegative q-exponents).
inline std::vector<Rational> q_coeffs(const HalfLaurent& p) {
  if (!has_integral_q_exponents(p)) fail(ErrorKind::HalfIntegerExponent, "polynomial has half-integer q-exponents");
  if (p.is_zero()) return {};
  if (p.low() < 0) fail(ErrorKind::InvalidInput, "polynomial has negative q-exponents");
  std::vector<Rational> c(static_cast<std::size_t>(p.high() / 2 + 1), Rational(0));
  p.for_each_term([&](int e, const Rational& v) { c[static_cast<std::size_t>(e / 2)] = v; });
  return c;
}

/// q -> -q. Only defined for integral q-exponents.
inline HalfLaurent q_negated(const HalfLaurent& p) {
  if (!has_integral_q_exponents(p)) fail(ErrorKind::HalfIntegerExponent, "q -> -q needs integral q-exponents");
  HalfLaurent r;
  p.for_each_term([&](int e, const Rational& c) { r += t_pow(e, (e / 2) % 2 == 0 ? c : Rational(-c)); });
  return r;
}

/// q -> q^{-1}.
inline HalfLaurent q_inverted(const HalfLaurent& p) { return p.inverted_variable(); }

/// q -> q^k (k >= 1), used for regrading series.
inline HalfLaurent q_stretched(const HalfLaurent& p, int k) { return p.stretched(k); }

/// Exact Gaussian rational a + b·i, used for evaluation at t = i (q = -1).
struct Gaussian {
  Rational re, im;
  Gaussian(Rational r = 0, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) fail(ErrorKind::DenominatorVanishes, "division by zero Gaussian");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
  bool is_zero() const { return re == 0 && im == 0; }
  Rational norm() const { return re * re + im * im; }
};

inline std::string to_string(const Gaussian& g) {
  if (g.im == 0) return to_string(g.re);
  std::string im = (g.im == 1) ? "i" : (g.im == -1) ? "-i" : to_string(g.im) + "i";
  if (g.re == 0) return im;
  return to_string(g.re) + (g.im > 0 ? " + " : " - ") + (g.im == 1 || g.im == -1 ? "i" : to_string(abs(g.im)) + "i");
}

/// Evaluation at t = i, i.e. q = -1 with the branch q^{1/2} = i.
inline Gaussian evaluate_at_minus_one(const HalfLaurent& p) {
  Gaussian acc;
  p.for_each_term([&](int e, const Rational& c) {
    int r = ((e % 4) + 4) % 4;
    if (r == 0) acc.re += c;
    if (r == 1) acc.im += c;
    if (r == 2) acc.re -= c;
    if (r == 3) acc.im -= c;
  });
  return acc;
}

inline Rational evaluate_at_one(const HalfLaurent& p) {
  Rational s = 0;
  p.for_each_term([&](int, const Rational& c) { s += c; });
  return s;
}

// ---------------------------------------------------------------------------
// Text form: terms in increasing exponent, e.g. "q^{-1/2} - q^{1/2}",
// "1 + 2q + 2q^{2} + q^{3}", "(3/2)q^{1/2}".

inline std::string q_exponent_text(int t_exp) {
  if (t_exp % 2 == 0) return std::to_string(t_exp / 2);
  return std::to_string(t_exp) + "/2";
}

inline std::string to_string(const HalfLaurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  p.for_each_term([&](int e, const Rational& c) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    first = false;
    std::string mono = e == 0 ? "" : (e == 2 ? "q" : "q^{" + q_exponent_text(e) + "}");
    if (mono.empty()) {
      out += to_string(a);
    } else if (a == 1) {
      out += mono;
    } else if (is_integer(a)) {
      out += to_string(a) + mono;
    } else {
      out += "(" + to_string(a) + ")" + mono;
    }
  });
  return out;
}

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) error("expected digits");
    return std::string(s_.substr(b, pos_ - b));
  }
  /// Unsigned rational "a" or "a/b".
  Rational unsigned_rational() {
    Integer num(digits());
    std::size_t save = pos_;
    if (accept('/')) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        Integer den(digits());
        if (den == 0) error("zero denominator");
        return Rational(num, den);
      }
      pos_ = save;
    }
    return Rational(num);
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline int parse_q_exponent(PolyLexer& lx) {
  bool braced = lx.accept('{');
  bool neg = lx.accept('-');
  if (!neg) lx.accept('+');
  Integer num(lx.digits());
  int den = 1;
  if (lx.accept('/')) {
    den = std::stoi(lx.digits());
    if (den != 1 && den != 2) lx.error("q-exponent denominator must be 1 or 2");
  }
  if (braced) lx.expect('}');
  int v = static_cast<int>(num) * (2 / den);
  return neg ? -v : v;
}

inline HalfLaurent parse_term(PolyLexer& lx) {
  Rational coeff = 1;
  bool have_coeff = false;
  if (lx.accept('(')) {
    bool neg = lx.accept('-');
    coeff = lx.unsigned_rational();
    if (neg) coeff = -coeff;
    lx.expect(')');
    have_coeff = true;
  } else if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    coeff = lx.unsigned_rational();
    have_coeff = true;
  }
  if (have_coeff) lx.accept('*');
  if (lx.accept('q')) {
    int e = 2;
    if (lx.accept('^')) e = parse_q_exponent(lx);
    return t_pow(e, coeff);
  }
  if (!have_coeff) lx.error("expected a term");
  return HalfLaurent(coeff);
}

}  // namespace detail

/// Parses the text form produced by to_string(HalfLaurent).
inline HalfLaurent parse_half_laurent(std::string_view s) {
  detail::PolyLexer lx(s);
  HalfLaurent acc;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else if (!lx.accept('+') && !first)
      lx.error("expected '+' or '-'");
    first = false;
    HalfLaurent term = detail::parse_term(lx);
    acc += sign > 0 ? term : -term;
  }
  if (first) lx.error("empty polynomial");
  return acc;
}

}  // namespace qtangle
