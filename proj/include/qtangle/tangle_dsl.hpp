#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qtangle/diagram.hpp"
#include "qtangle/singularities.hpp"

namespace qtangle {

/// Closed form of twist(n): (-(n/2) z, 1) for even n, (F_|n|(z), 1) for odd n.
inline TangleFraction twist_fraction(int n) {
  if (n % 2 == 0) return {z_var() * Rational(-n / 2), HalfLaurent(Rational(1))};
  return {torus_conway(n < 0 ? -n : n), HalfLaurent(Rational(1))};
}

struct TangleValue {
  TangleFraction fraction;
  std::optional<TangleDiagram> diagram;  // present when every leaf is a twist
  bool additive = true;                  // no sum had a summand with strands NW-SE
};

/*
  Grammar (whitespace ignored):
    expr := term ('+' term)*
    term := '1/' term | atom
    atom := 'T(' int ')' | 'Z[' int (',' int)* ']' | 'R(' expr ')' | 'M(' expr ')' | '(' expr ')'
  T(n) is the n-crossing twist, Z[c0,c1,...] the building block z(c0 + c1 z^2 + ...),
  1/x and R(x) the quarter-turn rotation, M(x) the mirror image.
*/
class TangleExpression {
 public:
  explicit TangleExpression(std::string_view text, int max_crossings = kDefaultMaxCrossings)
      : max_crossings_(max_crossings) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    if (s_.empty()) fail(ErrorKind::Parse, "empty tangle expression");
  }

  TangleValue evaluate() {
    pos_ = 0;
    TangleValue v = expr();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, what + " at position " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }
  bool accept(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) error("expected '" + std::string(tok) + "'");
  }
  long integer() {
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string tok = s_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+" || tok.size() > 9) error("expected an integer");
    return std::stol(tok);
  }

  TangleValue expr() {
    TangleValue v = term();
    while (accept("+")) v = sum(v, term());
    return v;
  }

  TangleValue term() {
    if (accept("1/")) return invert(term());
    return atom();
  }

  TangleValue atom() {
    if (accept("T(")) {
      long n = integer();
      expect(")");
      if (n < -max_crossings_ || n > max_crossings_) fail(ErrorKind::BudgetExceeded, "twist T(" + std::to_string(n) + ") exceeds the crossing budget");
      return {twist_fraction(static_cast<int>(n)), make_twist(static_cast<int>(n)), true};
    }
    if (accept("Z[")) {
      std::vector<long> b{integer()};
      while (accept(",")) b.push_back(integer());
      expect("]");
      return {make_zpoly_tangle(b, false), std::nullopt, true};
    }
    if (accept("R(")) {
      TangleValue v = expr();
      expect(")");
      return invert(v);
    }
    if (accept("M(")) {
      TangleValue v = expr();
      expect(")");
      v.fraction = tangle_mirror(v.fraction);
      if (v.diagram) v.diagram = v.diagram->mirrored();
      return v;
    }
    if (accept("(")) {
      TangleValue v = expr();
      expect(")");
      return v;
    }
    error("expected T(n), Z[...], R(...), M(...), 1/... or a parenthesis");
  }

  static TangleValue invert(TangleValue v) {
    v.fraction = tangle_invert(v.fraction);
    if (v.diagram) v.diagram = v.diagram->rotated();
    return v;
  }

  TangleValue sum(const TangleValue& a, const TangleValue& b) const {
    TangleValue r;
    r.fraction = tangle_sum(a.fraction, b.fraction);
    r.additive = a.additive && b.additive;
    if (a.diagram && b.diagram) {
      r.additive = r.additive && a.diagram->orientable() && b.diagram->orientable();
      r.diagram = tangle_sum(*a.diagram, *b.diagram);
      if (r.diagram->crossing_count() > max_crossings_)
        fail(ErrorKind::BudgetExceeded, "tangle has more than " + std::to_string(max_crossings_) + " crossings");
    }
    return r;
  }

  std::string s_;
  std::size_t pos_ = 0;
  int max_crossings_;
};

inline TangleValue evaluate_tangle(std::string_view text, int max_crossings = kDefaultMaxCrossings) {
  return TangleExpression(text, max_crossings).evaluate();
}

/// Rational tangle with q-fraction F_n / F_{n+1}: closures T(2, n) and T(2, n+1).
inline TangleDiagram torus_quotient_diagram(int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "torus quotient diagram needs n >= 1");
  TangleDiagram r = make_twist(-2);
  for (int k = 1; k < n; ++k) r = tangle_sum(make_twist(-2), r.rotated());
  return r.rotated();
}

/*
  Random sum of even twists and rotated sub-sums whose summands all carry a
  consistent orientation, with at most max_crossings crossings.
*/
inline std::string random_twist_expression(std::mt19937_64& rng, int max_crossings, int depth = 0) {
  std::uniform_int_distribution<int> summands(2, 3), half(1, 3), coin(0, 3);
  auto leaf = [&] {
    int k = half(rng) * (coin(rng) % 2 ? 1 : -1);
    return "T(" + std::to_string(2 * k) + ")";
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int n = summands(rng);
    std::string e;
    for (int i = 0; i < n; ++i) {
      std::string part = depth < 2 && coin(rng) == 0 ? "R(" + random_twist_expression(rng, max_crossings / 2, depth + 1) + ")" : leaf();
      if (coin(rng) == 0) part = "R(" + part + ")";
      e += (i ? " + " : "") + part;
    }
    try {
      TangleValue v = evaluate_tangle(e, 4 * kDefaultMaxCrossings);
      if (v.additive && v.diagram && v.diagram->crossing_count() <= max_crossings) return e;
    } catch (const Error&) {
      // both closures split: (0, 0) is not a fraction
    }
  }
  return leaf();
}

}  // namespace qtangle
