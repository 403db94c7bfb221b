#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qtangle/poly.hpp"
#include "qtangle/rational_fn.hpp"

namespace qtangle {

/// Symmetric Coxeter matrix; entry 0 encodes m_ij = infinity.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;
  static constexpr int kMaxRank = 20;

  CoxeterMatrix() = default;
  explicit CoxeterMatrix(std::vector<std::vector<int>> m) : m_(std::move(m)) { validate(); }

  int rank() const noexcept { return static_cast<int>(m_.size()); }
  int operator()(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  bool is_infinite(int i, int j) const { return (*this)(i, j) == kInfinity; }
  /// Generators i != j are joined in the Coxeter graph when m_ij != 2.
  bool joined(int i, int j) const { return i != j && (*this)(i, j) != 2; }
  const std::vector<std::vector<int>>& entries() const noexcept { return m_; }

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) { return a.m_ == b.m_; }

  /// All off-diagonal entries equal to `m` (0 for infinity).
  static CoxeterMatrix uniform(int r, int m) {
    std::vector<std::vector<int>> e(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), m));
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return CoxeterMatrix(std::move(e));
  }

  /// Triangle group with m_12 = a, m_13 = b, m_23 = c.
  static CoxeterMatrix triangle(int a, int b, int c) { return CoxeterMatrix({{1, a, b}, {a, 1, c}, {b, c, 1}}); }

  static CoxeterMatrix dihedral(int m) { return CoxeterMatrix({{1, m}, {m, 1}}); }

  /// Linear diagram with the given consecutive labels; all other pairs commute.
  static CoxeterMatrix linear(const std::vector<int>& labels) {
    int r = static_cast<int>(labels.size()) + 1;
    auto m = uniform(r, 2).m_;
    for (int i = 0; i + 1 < r; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] =
          m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(i)];
    return CoxeterMatrix(std::move(m));
  }

 private:
  void validate() const {
    int r = rank();
    if (r < 1) fail(ErrorKind::InvalidInput, "Coxeter matrix must have rank >= 1");
    if (r > kMaxRank) fail(ErrorKind::InvalidInput, "Coxeter rank above " + std::to_string(kMaxRank) + " unsupported");
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(m_[static_cast<std::size_t>(i)].size()) != r)
        fail(ErrorKind::InvalidInput, "Coxeter matrix must be square");
      if ((*this)(i, i) != 1) fail(ErrorKind::InvalidInput, "diagonal entries must be 1");
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        int v = (*this)(i, j);
        if (v != (*this)(j, i)) fail(ErrorKind::InvalidInput, "Coxeter matrix must be symmetric");
        if (v != kInfinity && v < 2) fail(ErrorKind::InvalidInput, "off-diagonal entries must be >= 2 or 0 (infinity)");
      }
    }
  }

  std::vector<std::vector<int>> m_;
};

/// Compact text form "3: 1 3 2 / 3 1 7 / 2 7 1" (0 = infinity). The "r:" prefix is optional.
inline CoxeterMatrix parse_coxeter_text(std::string_view text) {
  std::string s(text);
  int declared = -1;
  if (auto c = s.find(':'); c != std::string::npos) {
    try {
      declared = std::stoi(s.substr(0, c));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad rank prefix in '" + std::string(text) + "'");
    }
    s = s.substr(c + 1);
  }
  std::vector<std::vector<int>> rows(1);
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "/") {
      rows.emplace_back();
      continue;
    }
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      rows.back().push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad Coxeter entry '" + tok + "'");
    }
  }
  if (declared >= 0 && static_cast<int>(rows.size()) != declared)
    fail(ErrorKind::Parse, "declared rank " + std::to_string(declared) + " but found " + std::to_string(rows.size()) + " rows");
  return CoxeterMatrix(std::move(rows));
}

inline std::string to_text(const CoxeterMatrix& m) {
  std::string out = std::to_string(m.rank()) + ":";
  for (int i = 0; i < m.rank(); ++i) {
    if (i) out += " /";
    for (int j = 0; j < m.rank(); ++j) out += " " + std::to_string(m(i, j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite-type catalog. Degrees of basic invariants follow the standard tables
// (Humphreys, "Reflection Groups and Coxeter Groups", Table 3.1).

enum class Family { A, B, D, E, F, H, I };

struct FiniteComponent {
  Family family = Family::A;
  int rank = 1;
  int label = 0;  // m for I2(m)
  /// Generators in diagram order; see classify_component for the conventions per family.
  std::vector<int> vertices;

  std::string name() const {
    switch (family) {
      case Family::A: return "A" + std::to_string(rank);
      case Family::B: return "B" + std::to_string(rank);
      case Family::D: return "D" + std::to_string(rank);
      case Family::E: return "E" + std::to_string(rank);
      case Family::F: return "F4";
      case Family::H: return "H" + std::to_string(rank);
      case Family::I: return "I2(" + std::to_string(label) + ")";
    }
    return "?";
  }

  std::vector<int> degrees() const {
    std::vector<int> d;
    switch (family) {
      case Family::A:
        for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
        break;
      case Family::B:
        for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
        break;
      case Family::D:
        for (int i = 1; i < rank; ++i) d.push_back(2 * i);
        d.push_back(rank);
        break;
      case Family::E:
        if (rank == 6) d = {2, 5, 6, 8, 9, 12};
        if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
        if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
      case Family::F: d = {2, 6, 8, 12}; break;
      case Family::H:
        if (rank == 3) d = {2, 6, 10};
        if (rank == 4) d = {2, 12, 20, 30};
        break;
      case Family::I: d = {2, label}; break;
    }
    std::sort(d.begin(), d.end());
    return d;
  }
};

struct ParabolicType {
  std::vector<FiniteComponent> components;
  int num_generators = 0;

  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& c : components) {
      auto cd = c.degrees();
      d.insert(d.end(), cd.begin(), cd.end());
    }
    std::sort(d.begin(), d.end());
    return d;
  }

  /// deg W_P(q), the number of reflections.
  int growth_degree() const {
    int s = 0;
    for (int m : degrees()) s += m - 1;
    return s;
  }

  Integer order() const {
    Integer o = 1;
    for (int m : degrees()) o *= m;
    return o;
  }

  std::string name() const {
    if (components.empty()) return "trivial";
    std::string s;
    for (const auto& c : components) s += (s.empty() ? "" : "x") + c.name();
    return s;
  }
};

namespace detail {

inline std::optional<FiniteComponent> finite_path(const CoxeterMatrix& m, std::vector<int> path) {
  int n = static_cast<int>(path.size());
  std::vector<int> labels;
  for (int i = 0; i + 1 < n; ++i) labels.push_back(m(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)]));
  FiniteComponent c;
  c.rank = n;
  int big = 0;
  for (int l : labels) big += (l != 3);
  if (big == 0) {
    c.family = Family::A;
    c.vertices = path;
    return c;
  }
  if (n == 2) {
    c.family = labels[0] == 4 ? Family::B : Family::I;
    c.label = labels[0];
    c.vertices = path;
    return c;
  }
  if (big > 1) return std::nullopt;
  auto it = std::find_if(labels.begin(), labels.end(), [](int l) { return l != 3; });
  int pos = static_cast<int>(it - labels.begin());
  int label = *it;
  bool at_end = pos == 0 || pos == n - 2;
  if (at_end && pos != 0) std::reverse(path.begin(), path.end());
  if (label == 4 && at_end) {
    c.family = Family::B;
  } else if (label == 4 && n == 4 && pos == 1) {
    c.family = Family::F;
  } else if (label == 5 && at_end && (n == 3 || n == 4)) {
    c.family = Family::H;
  } else {
    return std::nullopt;
  }
  c.vertices = path;
  return c;
}

}  // namespace detail

/*
  Classifies the connected subdiagram on `verts` (nonempty). Vertex order
  conventions of the result:
    A_n, H_n, F4 : along the path (H: the 5-edge first)
    B_n          : path with the 4-edge first (vertices[0] is the short end)
    D_n          : two short leaves, branch vertex, long arm outward
    E_n          : short leaf, branch vertex, then the other arms
    I2(m)        : the two generators
*/
inline std::optional<FiniteComponent> classify_component(const CoxeterMatrix& m, const std::vector<int>& verts) {
  int n = static_cast<int>(verts.size());
  if (n == 1) return FiniteComponent{Family::A, 1, 0, verts};
  std::map<int, std::vector<int>> adj;
  int edges = 0;
  for (int a : verts)
    for (int b : verts)
      if (a < b && m.joined(a, b)) {
        if (m.is_infinite(a, b)) return std::nullopt;
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
      }
  if (edges != n - 1) return std::nullopt;  // contains a cycle
  std::vector<int> branch;
  for (int v : verts) {
    int deg = static_cast<int>(adj[v].size());
    if (deg > 3) return std::nullopt;
    if (deg == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return std::nullopt;
  if (branch.empty()) {
    int start = verts[0];
    for (int v : verts)
      if (adj[v].size() == 1) {
        start = v;
        break;
      }
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return detail::finite_path(m, path);
  }
  int center = branch[0];
  std::vector<std::vector<int>> arms;
  for (int w : adj[center]) {
    std::vector<int> arm{w};
    int prev = center, cur = w;
    while (true) {
      int next = -1;
      for (int x : adj[cur])
        if (x != prev) next = x;
      if (next < 0) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  for (int a : verts)
    for (int b : verts)
      if (a < b && m.joined(a, b) && m(a, b) != 3) return std::nullopt;
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
  FiniteComponent c;
  c.rank = n;
  if (p == 1 && q == 1) {
    c.family = Family::D;
    c.vertices = {arms[0][0], arms[1][0], center};
    c.vertices.insert(c.vertices.end(), arms[2].begin(), arms[2].end());
    return c;
  }
  if (p == 1 && q == 2 && r >= 2 && r <= 4) {
    c.family = Family::E;
    c.vertices = {arms[0][0], center};
    c.vertices.insert(c.vertices.end(), arms[1].begin(), arms[1].end());
    c.vertices.insert(c.vertices.end(), arms[2].begin(), arms[2].end());
    return c;
  }
  return std::nullopt;
}

inline std::vector<std::vector<int>> connected_components(const CoxeterMatrix& m, std::uint32_t subset) {
  std::vector<std::vector<int>> comps;
  std::uint32_t seen = 0;
  for (int v = 0; v < m.rank(); ++v) {
    if (!(subset >> v & 1u) || (seen >> v & 1u)) continue;
    std::vector<int> comp, stack{v};
    seen |= 1u << v;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y = 0; y < m.rank(); ++y)
        if ((subset >> y & 1u) && !(seen >> y & 1u) && m.joined(x, y)) {
          seen |= 1u << y;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

inline std::uint32_t subset_mask(const std::vector<int>& subset) {
  std::uint32_t mask = 0;
  for (int v : subset) mask |= 1u << v;
  return mask;
}

inline std::uint32_t full_mask(const CoxeterMatrix& m) {
  return m.rank() == 32 ? ~0u : ((1u << m.rank()) - 1u);
}

/// Finite type of the parabolic subgroup W_P, or nullopt when W_P is infinite.
inline std::optional<ParabolicType> classify_parabolic(const CoxeterMatrix& m, std::uint32_t subset) {
  ParabolicType t;
  for (int v = 0; v < m.rank(); ++v) t.num_generators += (subset >> v & 1u);
  for (const auto& comp : connected_components(m, subset)) {
    auto c = classify_component(m, comp);
    if (!c) return std::nullopt;
    t.components.push_back(*c);
  }
  return t;
}

inline std::optional<ParabolicType> classify_parabolic(const CoxeterMatrix& m, const std::vector<int>& subset) {
  for (int v : subset)
    if (v < 0 || v >= m.rank()) fail(ErrorKind::InvalidInput, "generator index out of range");
  return classify_parabolic(m, subset_mask(subset));
}

/// W_P(q) = prod [m_i].
inline HalfLaurent finite_growth(const ParabolicType& t) {
  HalfLaurent p(Rational(1));
  for (int d : t.degrees()) p *= q_integer(d);
  return p;
}

struct FiniteParabolic {
  std::uint32_t subset = 0;
  ParabolicType type;
};

/// Every P (including the empty set) with W_P finite.
inline std::vector<FiniteParabolic> finite_parabolics(const CoxeterMatrix& m) {
  std::map<std::uint32_t, std::optional<FiniteComponent>> memo;
  std::vector<FiniteParabolic> out;
  for (std::uint32_t s = 0; s <= full_mask(m); ++s) {
    ParabolicType t;
    bool finite = true;
    for (const auto& comp : connected_components(m, s)) {
      std::uint32_t key = subset_mask(comp);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, classify_component(m, comp)).first;
      if (!it->second) {
        finite = false;
        break;
      }
      t.components.push_back(*it->second);
      t.num_generators += static_cast<int>(comp.size());
    }
    if (finite) out.push_back({s, std::move(t)});
    if (s == full_mask(m)) break;
  }
  return out;
}

inline int popcount(std::uint32_t s) {
  int c = 0;
  for (; s; s &= s - 1) ++c;
  return c;
}

struct GrowthFn {
  RationalFn value;
  std::optional<int> reciprocity;
};

/// W(q^{-1}) = s·W(q) for s = ±1, or nullopt.
inline std::optional<int> reciprocity_check(const RationalFn& w) {
  RationalFn inv = w.q_inverted();
  if (inv == w) return 1;
  if (inv == -w) return -1;
  return std::nullopt;
}

/// sum_{P finite} (-1)^{|P|} / W_P(q), which equals 1/W_S(q^{-1}).
inline RationalFn steinberg_sum(const CoxeterMatrix& m) {
  std::map<std::vector<int>, Integer> grouped;
  for (const auto& fp : finite_parabolics(m)) grouped[fp.type.degrees()] += (popcount(fp.subset) % 2 ? -1 : 1);
  RationalFn acc(0);
  for (const auto& [degs, coeff] : grouped) {
    if (coeff == 0) continue;
    HalfLaurent w(Rational(1));
    for (int d : degs) w *= q_integer(d);
    acc += RationalFn(HalfLaurent(Rational(coeff)), w);
  }
  return acc;
}

inline GrowthFn steinberg_growth(const CoxeterMatrix& m) {
  RationalFn s = steinberg_sum(m);
  GrowthFn g;
  g.value = s.q_inverted().inverse();
  g.reciprocity = reciprocity_check(g.value);
  return g;
}

/// chi(W) = sum_{P finite} (-1)^{|P|} / |W_P|.
inline Rational euler_characteristic(const CoxeterMatrix& m) {
  Rational chi = 0;
  for (const auto& fp : finite_parabolics(m))
    chi += Rational(popcount(fp.subset) % 2 ? -1 : 1) / Rational(fp.type.order());
  return chi;
}

/// 1/W(1) as a limit of the rational function: 0 at a pole of W.
inline Rational inverse_value_at_one(const RationalFn& w) {
  auto inv = evaluate_at_one(w.inverse());
  if (!inv) fail(ErrorKind::DenominatorVanishes, "growth function vanishes at q = 1");
  return *inv;
}

}  // namespace qtangle
