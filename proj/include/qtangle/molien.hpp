#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "qtangle/cyclotomic.hpp"
#include "qtangle/rational_fn.hpp"
#include "qtangle/series.hpp"

namespace qtangle {

/// Element of Q(zeta_N), stored as coefficients over 1, zeta, ..., zeta^{phi(N)-1}.
class CycloField {
 public:
  explicit CycloField(int conductor) : n_(conductor) {
    if (conductor < 1 || conductor > 1000) fail(ErrorKind::InvalidInput, "conductor must be in 1..1000");
    phi_ = q_coeffs(cyclotomic(conductor));
  }

  using Elem = std::vector<Rational>;

  int conductor() const noexcept { return n_; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }

  Elem zero() const { return Elem(degree(), Rational(0)); }
  Elem scalar(const Rational& c) const {
    Elem e = zero();
    e[0] = c;
    return e;
  }
  Elem zeta_pow(long k) const {
    long m = ((k % n_) + n_) % n_;
    std::vector<Rational> p(static_cast<std::size_t>(m) + 1, Rational(0));
    p.back() = 1;
    return reduce(std::move(p));
  }

  Elem reduce(std::vector<Rational> p) const {
    const std::size_t d = degree();
    for (std::size_t k = p.size(); k-- > d;) {
      Rational c = p[k];
      if (c == 0) continue;
      // zeta^k = -sum_{j<d} phi_j zeta^{k-d+j}  (phi monic)
      for (std::size_t j = 0; j < d; ++j) p[k - d + j] -= c * phi_[j];
      p[k] = 0;
    }
    p.resize(d, Rational(0));
    return p;
  }

  Elem from_coeffs(std::vector<Rational> c) const { return reduce(std::move(c)); }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<Rational> p(a.size() + b.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    }
    return reduce(std::move(p));
  }
  Elem scale(const Elem& a, const Rational& s) const {
    Elem r = a;
    for (auto& x : r) x *= s;
    return r;
  }

  static bool is_rational(const Elem& a) {
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] != 0) return false;
    return true;
  }
  static bool is_zero(const Elem& a) {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

 private:
  int n_;
  std::vector<Rational> phi_;
};

/// n x n matrix over Q(zeta_N), row-major.
struct CycloMatrix {
  int n = 0;
  std::vector<CycloField::Elem> entries;

  const CycloField::Elem& at(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
  CycloField::Elem& at(int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; }

  std::string key() const {
    std::string k;
    for (const auto& e : entries)
      for (const auto& c : e) k += to_string(c) + ",";
    return k;
  }
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) { return a.entries == b.entries; }
};

inline CycloMatrix identity_matrix(const CycloField& f, int n) {
  CycloMatrix m{n, std::vector<CycloField::Elem>(static_cast<std::size_t>(n * n), f.zero())};
  for (int i = 0; i < n; ++i) m.at(i, i) = f.scalar(1);
  return m;
}

inline CycloMatrix multiply(const CycloField& f, const CycloMatrix& a, const CycloMatrix& b) {
  CycloMatrix c{a.n, std::vector<CycloField::Elem>(a.entries.size(), f.zero())};
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      if (CycloField::is_zero(a.at(i, k))) continue;
      for (int j = 0; j < a.n; ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

inline CycloField::Elem trace(const CycloField& f, const CycloMatrix& a) {
  CycloField::Elem t = f.zero();
  for (int i = 0; i < a.n; ++i) t = f.add(t, a.at(i, i));
  return t;
}

/// Coefficients c_0..c_n of det(1 - q g) = sum c_k q^k (Faddeev-LeVerrier), each in the field.
inline std::vector<CycloField::Elem> charpoly_rev_field(const CycloField& f, const CycloMatrix& g) {
  const int n = g.n;
  std::vector<CycloField::Elem> c{f.scalar(1)};
  CycloMatrix m{n, std::vector<CycloField::Elem>(g.entries.size(), f.zero())};
  for (int k = 1; k <= n; ++k) {
    CycloMatrix mk = multiply(f, g, m);
    for (int i = 0; i < n; ++i) mk.at(i, i) = f.add(mk.at(i, i), c.back());
    m = std::move(mk);
    c.push_back(f.scale(trace(f, multiply(f, g, m)), Rational(-1, k)));
  }
  return c;
}

/// Every element of the group generated by gens; BoundExceeded past bound elements.
inline std::vector<CycloMatrix> close_group(const CycloField& f, const std::vector<CycloMatrix>& gens, std::size_t bound = 2000) {
  if (gens.empty()) fail(ErrorKind::InvalidInput, "close_group needs at least one generator");
  const int n = gens.front().n;
  for (const auto& g : gens)
    if (g.n != n || g.entries.size() != static_cast<std::size_t>(n * n))
      fail(ErrorKind::InvalidInput, "generators must be square of equal size");
  for (const auto& g : gens) {
    auto c = charpoly_rev_field(f, g);
    if (CycloField::is_zero(c.back())) fail(ErrorKind::InvalidInput, "generator is singular");
  }
  std::vector<CycloMatrix> elems{identity_matrix(f, n)};
  std::unordered_map<std::string, std::size_t> seen{{elems[0].key(), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      CycloMatrix p = multiply(f, elems[i], g);
      std::string k = p.key();
      if (seen.count(k)) continue;
      if (elems.size() >= bound) fail(ErrorKind::BoundExceeded, "group closure exceeds " + std::to_string(bound) + " elements");
      seen.emplace(std::move(k), elems.size());
      elems.push_back(std::move(p));
    }
  }
  return elems;
}

struct ClassData {
  std::string label;
  long size = 1;
  Rational chi = 1;
  std::vector<Rational> charpoly;  // det(1 - q g), ascending in q
  int order = 0;                   // element order, 0 when unknown

  HalfLaurent charpoly_poly() const { return from_q_coeffs(charpoly, 0); }
};

enum class Character { Trivial, Natural };

inline std::vector<Rational> rational_charpoly(const CycloField& f, const CycloMatrix& g) {
  std::vector<Rational> out;
  for (const auto& c : charpoly_rev_field(f, g)) {
    if (!CycloField::is_rational(c)) fail(ErrorKind::NonIntegerCharPoly, "det(1 - qg) has irrational coefficients");
    out.push_back(c[0]);
  }
  return out;
}

inline Rational character_value(const CycloField& f, const CycloMatrix& g, Character chi) {
  if (chi == Character::Trivial) return 1;
  auto t = trace(f, g);
  if (!CycloField::is_rational(t)) fail(ErrorKind::NonIntegerCharPoly, "character value is not rational");
  return t[0];
}

/// Conjugacy classes in order of first appearance; each charpoly must be rational, and integer when require_integer.
inline std::vector<ClassData> conjugacy_classes(const CycloField& f, const std::vector<CycloMatrix>& elems,
                                                Character chi = Character::Trivial, bool require_integer = true) {
  const std::size_t n = elems.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i].key(), i);
  auto idx = [&](const CycloMatrix& m) {
    auto it = index.find(m.key());
    if (it == index.end()) fail(ErrorKind::InvalidInput, "element set is not closed under products");
    return it->second;
  };
  std::vector<std::size_t> inv(n), order(n);
  const std::size_t id = idx(identity_matrix(f, elems.front().n));
  for (std::size_t i = 0; i < n; ++i) {
    CycloMatrix p = elems[i], prev = identity_matrix(f, elems[i].n);
    std::size_t k = 1;
    while (idx(p) != id) {
      prev = p;
      p = multiply(f, p, elems[i]);
      if (++k > n) fail(ErrorKind::InvalidInput, "element order exceeds group size");
    }
    order[i] = k;
    inv[i] = idx(prev);
  }
  std::vector<int> cls(n, -1);
  std::vector<ClassData> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int c = static_cast<int>(out.size());
    long size = 0;
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t j = idx(multiply(f, multiply(f, elems[h], elems[i]), elems[inv[h]]));
      if (cls[j] < 0) cls[j] = c, ++size;
    }
    ClassData d;
    d.label = "C" + std::to_string(c + 1);
    d.size = size;
    d.order = static_cast<int>(order[i]);
    d.chi = character_value(f, elems[i], chi);
    d.charpoly = rational_charpoly(f, elems[i]);
    if (require_integer)
      for (const auto& x : d.charpoly)
        if (!is_integer(x)) fail(ErrorKind::NonIntegerCharPoly, "class " + d.label + " has non-integer det(1 - qg)");
    out.push_back(std::move(d));
  }
  return out;
}

struct Weighting {
  enum Kind { ByElements, ByClasses, Custom } kind = ByElements;
  std::vector<Rational> custom;

  std::string name() const {
    switch (kind) {
      case ByElements: return "by-elements";
      case ByClasses: return "by-classes";
      case Custom: return "custom";
    }
    return "?";
  }
};

/// "by-elements", "by-classes" or "custom=1,1,2/3,...".
inline Weighting parse_weighting(const std::string& s) {
  Weighting w;
  if (s == "by-elements") return w;
  if (s == "by-classes") {
    w.kind = Weighting::ByClasses;
    return w;
  }
  if (s.rfind("custom=", 0) == 0) {
    w.kind = Weighting::Custom;
    std::string body = s.substr(7);
    std::size_t start = 0;
    while (start <= body.size() && !body.empty()) {
      std::size_t c = body.find(',', start);
      w.custom.push_back(parse_rational(body.substr(start, c == std::string::npos ? std::string::npos : c - start)));
      if (c == std::string::npos) break;
      start = c + 1;
    }
    if (w.custom.empty()) fail(ErrorKind::Parse, "custom weighting needs at least one weight");
    return w;
  }
  fail(ErrorKind::Parse, "weighting must be by-elements, by-classes or custom=w1,w2,...");
}

inline std::vector<Rational> class_weights(const std::vector<ClassData>& classes, const Weighting& w) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    switch (w.kind) {
      case Weighting::ByElements: out.emplace_back(classes[i].size); break;
      case Weighting::ByClasses: out.emplace_back(1); break;
      case Weighting::Custom: break;
    }
  }
  if (w.kind == Weighting::Custom) {
    if (w.custom.size() != classes.size())
      fail(ErrorKind::InvalidInput, "custom weighting has " + std::to_string(w.custom.size()) + " weights for " +
                                        std::to_string(classes.size()) + " classes");
    out = w.custom;
  }
  return out;
}

inline RationalFn molien_sum(const std::vector<ClassData>& classes, const Weighting& w) {
  auto wt = class_weights(classes, w);
  RationalFn s;
  for (std::size_t i = 0; i < classes.size(); ++i)
    s += RationalFn(HalfLaurent(wt[i] * classes[i].chi), classes[i].charpoly_poly());
  return s;
}

/// (1/|G|) sum over elements of chi(g)/det(1 - qg).
inline RationalFn molien_average(const CycloField& f, const std::vector<CycloMatrix>& elems, Character chi = Character::Trivial) {
  std::map<std::vector<Rational>, Rational> grouped;
  for (const auto& g : elems) grouped[rational_charpoly(f, g)] += character_value(f, g, chi);
  RationalFn s;
  for (const auto& [cp, c] : grouped) s += RationalFn(HalfLaurent(c), from_q_coeffs(cp, 0));
  return s * RationalFn(Rational(1, static_cast<long>(elems.size())));
}

inline RationalFn molien_average(const std::vector<ClassData>& classes) {
  long total = 0;
  for (const auto& c : classes) total += c.size;
  return molien_sum(classes, Weighting{}) * RationalFn(Rational(1, total));
}

struct GroupInput {
  int dimension = 0;
  int conductor = 1;
  std::vector<CycloMatrix> generators;
  std::vector<ClassData> classes;  // filled directly for class-list input
  bool from_classes = false;
};

namespace detail {

inline Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::Parse, "expected an integer or a \"p/q\" string, got " + j.dump());
}

}  // namespace detail

/*
  {"n": 2, "conductor": 4, "generators": [[[e00, e01], [e10, e11]], ...]}
  where each entry e is a coefficient list over 1, zeta_N, zeta_N^2, ...;
  or {"classes": [{"size": 1, "chi": 1, "charpoly": [1, -2, 1]}, ...]}.
*/
inline GroupInput parse_group_json(const nlohmann::json& j) {
  GroupInput g;
  if (!j.is_object()) fail(ErrorKind::Parse, "group file must be a JSON object");
  if (j.contains("classes")) {
    g.from_classes = true;
    int idx = 0;
    for (const auto& c : j.at("classes")) {
      ClassData d;
      d.label = c.contains("label") ? c.at("label").get<std::string>() : "C" + std::to_string(++idx);
      d.size = c.value("size", 1L);
      if (d.size < 1) fail(ErrorKind::InvalidInput, "class size must be positive");
      d.chi = c.contains("chi") ? detail::json_rational(c.at("chi")) : Rational(1);
      for (const auto& x : c.at("charpoly")) d.charpoly.push_back(detail::json_rational(x));
      if (d.charpoly.empty() || d.charpoly[0] != 1) fail(ErrorKind::InvalidInput, "charpoly must have constant term 1");
      g.dimension = std::max(g.dimension, static_cast<int>(d.charpoly.size()) - 1);
      g.classes.push_back(std::move(d));
    }
    if (g.classes.empty()) fail(ErrorKind::InvalidInput, "empty class list");
    return g;
  }
  g.dimension = j.at("n").get<int>();
  g.conductor = j.value("conductor", 1);
  if (g.dimension < 1 || g.dimension > 8) fail(ErrorKind::InvalidInput, "dimension must be in 1..8");
  CycloField f(g.conductor);
  for (const auto& m : j.at("generators")) {
    CycloMatrix cm{g.dimension, {}};
    if (!m.is_array() || m.size() != static_cast<std::size_t>(g.dimension)) fail(ErrorKind::Parse, "generator must have n rows");
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(g.dimension)) fail(ErrorKind::Parse, "generator row must have n entries");
      for (const auto& e : row) {
        std::vector<Rational> c;
        if (e.is_array())
          for (const auto& x : e) c.push_back(detail::json_rational(x));
        else
          c.push_back(detail::json_rational(e));
        cm.entries.push_back(f.from_coeffs(std::move(c)));
      }
    }
    g.generators.push_back(std::move(cm));
  }
  if (g.generators.empty()) fail(ErrorKind::InvalidInput, "no generators");
  return g;
}

struct MaterializedGroup {
  GroupInput input;
  std::vector<CycloMatrix> elements;  // empty for class-list input
  std::vector<ClassData> classes;
  long order = 0;
};

inline MaterializedGroup materialize(const GroupInput& in, Character chi = Character::Trivial, std::size_t bound = 2000) {
  MaterializedGroup m;
  m.input = in;
  if (in.from_classes) {
    m.classes = in.classes;
  } else {
    CycloField f(in.conductor);
    m.elements = close_group(f, in.generators, bound);
    m.classes = conjugacy_classes(f, m.elements, chi, false);
  }
  for (const auto& c : m.classes) m.order += c.size;
  return m;
}

}  // namespace qtangle
