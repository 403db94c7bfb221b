#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "qtangle/error.hpp"

namespace qtangle {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::int64_t to_int64(const Integer& i) {
  if (i > Integer(INT64_MAX) || i < Integer(INT64_MIN)) fail(ErrorKind::InvalidInput, "integer out of 64-bit range");
  return static_cast<std::int64_t>(i);
}

inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Parses "7", "-3/4", "+2".
inline Rational parse_rational(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.empty()) fail(ErrorKind::Parse, "empty rational");
  auto parse_int = [](std::string_view v) {
    std::string_view digits = v;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
    if (digits.empty()) fail(ErrorKind::Parse, "bad integer '" + std::string(v) + "'");
    for (char c : digits)
      if (c < '0' || c > '9') fail(ErrorKind::Parse, "bad integer '" + std::string(v) + "'");
    std::string str(v);
    if (str.front() == '+') str.erase(0, 1);
    return Integer(str);
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Integer den = parse_int(trim(s.substr(slash + 1)));
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(s) + "'");
  return Rational(parse_int(trim(s.substr(0, slash))), den);
}

}  // namespace qtangle
