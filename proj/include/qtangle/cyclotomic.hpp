#pragma once

#include <set>
#include <vector>

#include "qtangle/poly.hpp"

namespace qtangle {

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

inline int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

/// Phi_n as a polynomial in q, via Phi_n = prod_{d|n} (q^d - 1)^{mu(n/d)}.
inline HalfLaurent cyclotomic(int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "cyclotomic index must be >= 1");
  HalfLaurent num(Rational(1)), den(Rational(1));
  for (int d : divisors(n)) {
    int mu = moebius(n / d);
    HalfLaurent f = q_pow(d) - HalfLaurent(Rational(1));
    if (mu == 1) num *= f;
    if (mu == -1) den *= f;
  }
  return *divide_exact(num, den);
}

/// Indices k with Phi_k | q^d - 1.
inline std::set<int> cyclotomic_indices_minus(int d) {
  auto v = divisors(d);
  return {v.begin(), v.end()};
}

/// Indices k with Phi_k | q^d + 1, i.e. k | 2d and k does not divide d.
inline std::set<int> cyclotomic_indices_plus(int d) {
  std::set<int> out;
  for (int k : divisors(2 * d))
    if (d % k != 0) out.insert(k);
  return out;
}

inline HalfLaurent cyclotomic_product(const std::set<int>& indices) {
  HalfLaurent p(Rational(1));
  for (int k : indices) p *= cyclotomic(k);
  return p;
}

}  // namespace qtangle
