#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtangle/coxeter.hpp"

namespace qtangle {

namespace detail {

inline CoxeterMatrix from_edges(int r, const std::vector<std::pair<std::pair<int, int>, int>>& e) {
  auto m = CoxeterMatrix::uniform(r, 2).entries();
  for (auto [ij, label] : e) {
    auto [i, j] = ij;
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = label;
  }
  return CoxeterMatrix(std::move(m));
}

inline std::vector<int> parse_int_list(const std::string& s, std::string_view whole) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    std::size_t c = s.find(',', start);
    std::string tok = s.substr(start, c == std::string::npos ? std::string::npos : c - start);
    if (tok == "inf") tok = "0";
    if (tok.empty() || tok.size() > 4 || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      fail(ErrorKind::Parse, "bad number '" + tok + "' in '" + std::string(whole) + "'");
    out.push_back(std::stoi(tok));
    if (c == std::string::npos) break;
    start = c + 1;
  }
  return out;
}

}  // namespace detail

/// Block-diagonal product; generators of different factors commute.
inline CoxeterMatrix direct_product(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  int r = a.rank() + b.rank();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 2));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i < a.rank() && j < a.rank()) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
      else if (i >= a.rank() && j >= a.rank()) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b(i - a.rank(), j - a.rank());
    }
  return CoxeterMatrix(std::move(m));
}

/*
  Named Coxeter systems: A<n>, B<n>, D<n>, E6..E8, F4, H3, H4, I2(m) with
  m = inf for the infinite dihedral group, tri(a,b,c), free(r) (all m_ij
  infinite) and rac(r) (right-angled r-cycle: neighbours commute, all other
  pairs infinite). AxB is the direct product.
*/
inline CoxeterMatrix named_coxeter(std::string_view name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (auto x = s.find('x'); x != std::string::npos && x > 0 && x + 1 < s.size())
    return direct_product(named_coxeter(s.substr(0, x)), named_coxeter(s.substr(x + 1)));
  auto arg = [&](const std::string& prefix) -> std::optional<std::string> {
    if (s.rfind(prefix + "(", 0) != 0 || s.back() != ')') return std::nullopt;
    return s.substr(prefix.size() + 1, s.size() - prefix.size() - 2);
  };
  if (auto a = arg("I2")) {
    auto v = detail::parse_int_list(*a, name);
    if (v.size() != 1) fail(ErrorKind::Parse, "I2 takes one label");
    return CoxeterMatrix::dihedral(v[0]);
  }
  if (auto a = arg("tri")) {
    auto v = detail::parse_int_list(*a, name);
    if (v.size() != 3) fail(ErrorKind::Parse, "tri takes three labels");
    return CoxeterMatrix::triangle(v[0], v[1], v[2]);
  }
  if (auto a = arg("free")) {
    auto v = detail::parse_int_list(*a, name);
    if (v.size() != 1) fail(ErrorKind::Parse, "free takes the rank");
    return CoxeterMatrix::uniform(v[0], CoxeterMatrix::kInfinity);
  }
  if (auto a = arg("rac")) {
    auto v = detail::parse_int_list(*a, name);
    if (v.size() != 1 || v[0] < 4) fail(ErrorKind::Parse, "rac takes a rank >= 4");
    auto m = CoxeterMatrix::uniform(v[0], CoxeterMatrix::kInfinity).entries();
    for (int i = 0; i < v[0]; ++i) {
      int j = (i + 1) % v[0];
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 2;
    }
    return CoxeterMatrix(std::move(m));
  }
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    fail(ErrorKind::Parse, "unknown Coxeter name '" + std::string(name) + "'");
  std::string digits = s.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || digits.size() > 2)
    fail(ErrorKind::Parse, "unknown Coxeter name '" + std::string(name) + "'");
  int n = std::stoi(digits);
  if (n < 1 || n > CoxeterMatrix::kMaxRank) fail(ErrorKind::InvalidInput, "rank out of range in '" + std::string(name) + "'");
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A':
      return n == 1 ? CoxeterMatrix::uniform(1, 2) : CoxeterMatrix::linear(std::vector<int>(static_cast<std::size_t>(n - 1), 3));
    case 'B': {
      if (n < 2) break;
      std::vector<int> l(static_cast<std::size_t>(n - 1), 3);
      l[0] = 4;
      return CoxeterMatrix::linear(l);
    }
    case 'D': {
      if (n < 4) break;
      std::vector<std::pair<std::pair<int, int>, int>> e{{{0, 2}, 3}, {{1, 2}, 3}};
      for (int i = 2; i + 1 < n; ++i) e.push_back({{i, i + 1}, 3});
      return detail::from_edges(n, e);
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      std::vector<std::pair<std::pair<int, int>, int>> e{{{0, 1}, 3}, {{0, 2}, 3}, {{2, 3}, 3}, {{0, 4}, 3}};
      for (int i = 4; i + 1 < n; ++i) e.push_back({{i, i + 1}, 3});
      return detail::from_edges(n, e);
    }
    case 'F':
      if (n == 4) return CoxeterMatrix::linear({3, 4, 3});
      break;
    case 'H':
      if (n == 3) return CoxeterMatrix::linear({5, 3});
      if (n == 4) return CoxeterMatrix::linear({5, 3, 3});
      break;
    default: break;
  }
  fail(ErrorKind::Parse, "unknown Coxeter name '" + std::string(name) + "'");
}

}  // namespace qtangle
