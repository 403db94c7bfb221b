#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtangle/rational_fn.hpp"
#include "qtangle/tangle_fraction.hpp"
#include "qtangle/zform.hpp"

namespace qtangle {

class DynkinTree {
 public:
  static constexpr int kMaxVertices = 64;

  DynkinTree() = default;
  DynkinTree(int n, std::vector<std::pair<int, int>> edges, std::string name = {})
      : n_(n), edges_(std::move(edges)), name_(std::move(name)) {
    validate();
  }

  int size() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::string& name() const noexcept { return name_; }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (auto [a, b] : edges_) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
  }

  /// Center vertex 0 with arms of the given lengths.
  static DynkinTree star(const std::vector<int>& arms, std::string name = {}) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : arms) {
      int prev = 0;
      for (int i = 0; i < len; ++i) {
        e.emplace_back(prev, next);
        prev = next++;
      }
    }
    return {next, std::move(e), std::move(name)};
  }

  static DynkinTree path(int n, std::string name = {}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {n, std::move(e), std::move(name)};
  }

 private:
  void validate() const {
    if (n_ < 1 || n_ > kMaxVertices) fail(ErrorKind::NotATree, "vertex count must be in 1.." + std::to_string(kMaxVertices));
    if (static_cast<int>(edges_.size()) != n_ - 1) fail(ErrorKind::NotATree, "a tree on n vertices has n-1 edges");
    std::vector<int> parent(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (auto [a, b] : edges_) {
      if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) fail(ErrorKind::NotATree, "bad edge");
      int ra = find(a), rb = find(b);
      if (ra == rb) fail(ErrorKind::NotATree, "cycle through edge " + std::to_string(a) + "-" + std::to_string(b));
      parent[static_cast<std::size_t>(ra)] = rb;
    }
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::string name_;
};

namespace detail {

struct CoxeterPolyMemo {
  const std::vector<std::vector<int>>& adj;
  std::unordered_map<std::uint64_t, HalfLaurent> memo;

  HalfLaurent eval(std::uint64_t alive) {
    if (alive == 0) return HalfLaurent(Rational(1));
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    // any vertex of degree <= 1 in the induced forest
    int leaf = -1, nb = -1;
    for (int v = 0; v < static_cast<int>(adj.size()) && leaf < 0; ++v) {
      if (!(alive >> v & 1)) continue;
      int deg = 0, last = -1;
      for (int w : adj[static_cast<std::size_t>(v)])
        if (alive >> w & 1) ++deg, last = w;
      if (deg <= 1) leaf = v, nb = last;
    }
    const HalfLaurent q1 = q_pow(1) + HalfLaurent(Rational(1));
    HalfLaurent r;
    std::uint64_t rest = alive & ~(std::uint64_t{1} << leaf);
    if (nb < 0)
      r = q1 * eval(rest);
    else
      r = q1 * eval(rest) - q_pow(1) * eval(rest & ~(std::uint64_t{1} << nb));
    memo.emplace(alive, r);
    return r;
  }
};

}  // namespace detail

/// det(q - C) for the Coxeter transformation C of the tree, via leaf deletion.
inline HalfLaurent coxeter_polynomial(const DynkinTree& t) {
  auto adj = t.adjacency();
  detail::CoxeterPolyMemo m{adj, {}};
  std::uint64_t all = t.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << t.size()) - 1);
  return m.eval(all);
}

enum class KleinType { D, E };

struct DynkinType {
  KleinType family = KleinType::E;
  int n = 6;
  bool affine = false;
  std::string name() const {
    return std::string(affine ? "~" : "") + (family == KleinType::D ? "D" : "E") + std::to_string(n);
  }
};

inline DynkinType parse_dynkin_type(std::string_view s) {
  std::string str;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) str += c;
  DynkinType d;
  std::size_t i = 0;
  if (i < str.size() && str[i] == '~') d.affine = true, ++i;
  if (i >= str.size()) fail(ErrorKind::Parse, "empty Dynkin type");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(str[i++])));
  if (f != 'D' && f != 'E') fail(ErrorKind::Parse, "Dynkin type must be D<n> or E6/E7/E8: '" + std::string(s) + "'");
  d.family = f == 'D' ? KleinType::D : KleinType::E;
  std::string digits = str.substr(i);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 3)
    fail(ErrorKind::Parse, "bad Dynkin rank in '" + std::string(s) + "'");
  d.n = std::stoi(digits);
  if (d.family == KleinType::D && (d.n < 4 || d.n > 62)) fail(ErrorKind::InvalidInput, "D_n needs 4 <= n <= 62");
  if (d.family == KleinType::E && (d.n < 6 || d.n > 8)) fail(ErrorKind::InvalidInput, "E_n needs n in {6, 7, 8}");
  return d;
}

/// Finite trees: D_n has leaves 0, 1 on vertex 2 and the path 2..n-1; E_n is a star with arms (1, 2, n-4).
/// Affine trees add one vertex: ~D_n attaches vertex n to n-2, ~E6/~E7/~E8 have arms (2,2,2), (1,3,3), (1,2,5).
inline DynkinTree dynkin_tree(const DynkinType& d) {
  if (d.family == KleinType::E) {
    if (!d.affine) return DynkinTree::star({1, 2, d.n - 4}, d.name());
    static const std::vector<int> arms[3] = {{2, 2, 2}, {1, 3, 3}, {1, 2, 5}};
    return DynkinTree::star(arms[d.n - 6], d.name());
  }
  std::vector<std::pair<int, int>> e{{0, 2}, {1, 2}};
  for (int v = 2; v + 1 < d.n; ++v) e.emplace_back(v, v + 1);
  if (d.affine) e.emplace_back(d.n - 2, d.n);
  return {d.affine ? d.n + 1 : d.n, std::move(e), d.name()};
}

struct KleinSeries {
  RationalFn value;
  HalfLaurent finite_poly;
  HalfLaurent affine_poly;
  std::string note;
};

/*
  Poincare series of the Klein singularity of the given finite type, graded by
  half the invariant degree (the Molien series of the binary polyhedral group
  in SU2 equals this function evaluated at q^2). Orientation finite / affine
  was fixed by comparison with the Molien series of the binary tetrahedral and
  quaternion groups.
*/
inline KleinSeries klein_poincare(DynkinType d) {
  d.affine = false;
  DynkinType a = d;
  a.affine = true;
  KleinSeries s;
  s.finite_poly = coxeter_polynomial(dynkin_tree(d));
  s.affine_poly = coxeter_polynomial(dynkin_tree(a));
  s.value = RationalFn(s.finite_poly, s.affine_poly);
  s.note = "chi(" + d.name() + ")/chi(" + a.name() + "); Molien series in invariant degree is this at q^2";
  return s;
}

struct Signature {
  int g = 0;
  std::vector<int> a;

  Signature() = default;
  Signature(int genus, std::vector<int> orders) : g(genus), a(std::move(orders)) { validate(); }

  void validate() {
    if (g < 0) fail(ErrorKind::InvalidInput, "genus must be >= 0");
    for (int x : a)
      if (x < 2) fail(ErrorKind::InvalidInput, "branch orders must be >= 2");
    std::sort(a.begin(), a.end());
  }

  std::string to_text() const {
    std::string s = "g=" + std::to_string(g) + "; a=";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s;
  }
};

/// "g=0; a=2,3,7", "g=2", "g=2; a=" or the tuple form "(0; 2,3,7)".
inline Signature parse_signature(std::string_view s) {
  std::string str;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) str += c;
  auto parse_int = [&](const std::string& x) {
    if (x.empty() || x.size() > 6 || !std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(ErrorKind::Parse, "bad integer '" + x + "' in signature '" + std::string(s) + "'");
    return std::stoi(x);
  };
  auto parse_list = [&](const std::string& x) {
    std::vector<int> out;
    if (x.empty() || x == "-" || x == "\xE2\x80\x94") return out;
    std::size_t start = 0;
    while (start <= x.size()) {
      std::size_t c = x.find(',', start);
      out.push_back(parse_int(x.substr(start, c == std::string::npos ? std::string::npos : c - start)));
      if (c == std::string::npos) break;
      start = c + 1;
    }
    return out;
  };
  if (!str.empty() && str.front() == '(') {
    if (str.back() != ')') fail(ErrorKind::Parse, "unbalanced parentheses in signature");
    std::string body = str.substr(1, str.size() - 2);
    std::size_t semi = body.find(';');
    if (semi == std::string::npos) return {parse_int(body), {}};
    return {parse_int(body.substr(0, semi)), parse_list(body.substr(semi + 1))};
  }
  std::size_t semi = str.find(';');
  std::string gpart = str.substr(0, semi), apart = semi == std::string::npos ? "" : str.substr(semi + 1);
  if (gpart.rfind("g=", 0) != 0) fail(ErrorKind::Parse, "signature must start with 'g=': '" + std::string(s) + "'");
  if (!apart.empty() && apart.rfind("a=", 0) != 0) fail(ErrorKind::Parse, "expected 'a=' after ';' in signature");
  return {parse_int(gpart.substr(2)), parse_list(apart.empty() ? "" : apart.substr(2))};
}

inline RationalFn fuchsian_poincare(const Signature& s) {
  const HalfLaurent one(Rational(1)), q = q_pow(1);
  const HalfLaurent one_minus_q = one - q;
  Rational g2(s.g - 2);
  RationalFn p(one + q * g2 + q_pow(2) * g2 + q_pow(3), one_minus_q * one_minus_q);
  for (int a : s.a)
    p += RationalFn(q_pow(2) * (one - q_pow(a - 1)), one_minus_q * one_minus_q * (one - q_pow(a)));
  return p;
}

/// Conway polynomial of the (2, n) torus link in z: F_0 = 0, F_1 = 1, F_{n+1} = z F_n + F_{n-1}.
inline HalfLaurent torus_conway(int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "torus index must be >= 0");
  HalfLaurent a, b(Rational(1));
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    HalfLaurent c = z_var() * b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

/// Delta(T(2, a-1)) / Delta(T(2, a)) as a tangle fraction.
inline TangleFraction torus_quotient_term(int a) {
  if (a < 2) fail(ErrorKind::InvalidInput, "torus quotient needs a >= 2");
  return {torus_conway(a - 1), torus_conway(a)};
}

/// (q^{-(a-1)/2} - q^{(a-1)/2}) / (q^{-a/2} - q^{a/2}) taken literally.
inline RationalFn torus_display_term(int a) {
  if (a < 2) fail(ErrorKind::InvalidInput, "torus term needs a >= 2");
  return {t_pow(-(a - 1)) - t_pow(a - 1), t_pow(-a) - t_pow(a)};
}

struct Prop2Expansion {
  Signature signature;
  RationalFn target;
  ZPolyForm poly_term;
  std::vector<TangleFraction> torus_terms;
  bool verified = false;
  bool display_form_holds = false;  // same sum with torus_display_term in place of the Conway quotients
  RationalFn residual;              // target - (poly_term + sum of torus terms)
};

inline Prop2Expansion prop2_compute(const Signature& s) {
  Prop2Expansion e;
  e.signature = s;
  const HalfLaurent one(Rational(1));
  RationalFn p = fuchsian_poincare(s);
  HalfLaurent sq = (one + q_pow(1)) * (one + q_pow(1));
  e.target = RationalFn(sq) * p.q_negated() * RationalFn(one, t_pow(3));
  e.poly_term = ZPolyForm{1, {Rational(5 - s.g), Rational(1)}, false};
  RationalFn sum = e.poly_term.expand(), display = sum;
  for (int a : s.a) {
    e.torus_terms.push_back(torus_quotient_term(a));
    sum += e.torus_terms.back().value();
    display += torus_display_term(a);
  }
  e.residual = e.target - sum;
  e.verified = e.residual.is_zero();
  e.display_form_holds = display == e.target;
  return e;
}

/// As prop2_compute; throws VerificationFailed with the residual when the identity fails.
inline Prop2Expansion prop2_expand(const Signature& s) {
  Prop2Expansion e = prop2_compute(s);
  if (!e.verified) fail(ErrorKind::VerificationFailed, "Fuchsian expansion residual for " + s.to_text() + ": " + to_string(e.residual));
  return e;
}

}  // namespace qtangle
