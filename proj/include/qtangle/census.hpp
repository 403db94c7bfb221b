#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qtangle/coxeter.hpp"

namespace qtangle {

/*
  Length census of a Coxeter group from an explicit model, independent of the
  Steinberg/product formulas. Supported models:
    Permutation        A_n acting on n+1 letters
    SignedPermutation  B_n and D_n acting on ±1..±n
    Dihedral           I2(m) acting on the vertices of an m-gon
    FreeProduct        all m_ij = infinity (reduced words have no repeated letter)
    CosetEnumeration   any finite group, regular action from Todd-Coxeter
  Reducible finite groups act on the disjoint union of their components' models.
*/
enum class Realization { Auto, Permutation, SignedPermutation, Dihedral, FreeProduct, CosetEnumeration };

inline std::string to_string(Realization r) {
  switch (r) {
    case Realization::Auto: return "auto";
    case Realization::Permutation: return "permutation";
    case Realization::SignedPermutation: return "signed-permutation";
    case Realization::Dihedral: return "dihedral";
    case Realization::FreeProduct: return "free-product";
    case Realization::CosetEnumeration: return "coset-enumeration";
  }
  return "?";
}

using Permutation = std::vector<int>;

namespace detail {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

inline Permutation compose(const Permutation& a, const Permutation& b) {  // apply a then b
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
  return c;
}

inline int perm_order(const Permutation& p, int cap) {
  Permutation id(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) id[i] = static_cast<int>(i);
  Permutation x = p;
  for (int k = 1; k <= cap; ++k) {
    if (x == id) return k;
    x = compose(x, p);
  }
  return 0;
}

inline void check_relations(const CoxeterMatrix& m, const std::vector<Permutation>& gens) {
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.rank(); ++j) {
      int expect = i == j ? 1 : m(i, j);
      int got = perm_order(detail::compose(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)]), 1000);
      if (got != expect)
        fail(ErrorKind::UnsupportedRealization, "model violates (s" + std::to_string(i) + " s" + std::to_string(j) +
                                                    ")^m relation: order " + std::to_string(got) + " vs " + std::to_string(expect));
    }
}

inline std::vector<Integer> census_from_permutations(const std::vector<Permutation>& gens, int max_len,
                                                     std::size_t bound) {
  std::size_t n = gens.empty() ? 0 : gens[0].size();
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::unordered_map<Permutation, int, PermHash> seen{{id, 0}};
  std::vector<Permutation> frontier{id};
  std::vector<Integer> counts{1};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation x = compose(p, g);
        if (seen.emplace(x, len).second) next.push_back(std::move(x));
      }
    if (seen.size() > bound) fail(ErrorKind::BoundExceeded, "census exceeded " + std::to_string(bound) + " elements");
    if (next.empty()) break;
    counts.push_back(static_cast<Integer>(next.size()));
    frontier = std::move(next);
  }
  while (static_cast<int>(counts.size()) <= max_len) counts.push_back(0);
  return counts;
}

/// Todd-Coxeter (HLT) for the trivial subgroup; generators are involutions.
class CosetTable {
 public:
  CosetTable(const CoxeterMatrix& m, std::size_t bound) : r_(m.rank()), bound_(bound) {
    for (int i = 0; i < r_; ++i)
      for (int j = i + 1; j < r_; ++j) {
        if (m.is_infinite(i, j)) fail(ErrorKind::UnsupportedRealization, "coset enumeration needs a finite group");
        std::vector<int> w;
        for (int k = 0; k < m(i, j); ++k) {
          w.push_back(i);
          w.push_back(j);
        }
        relators_.push_back(std::move(w));
      }
    new_coset();
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& w : relators_) {
        if (!live(c)) break;
        scan_and_fill(static_cast<int>(c), w);
      }
      if (!live(c)) continue;
      for (int x = 0; x < r_; ++x)
        if (entry(static_cast<int>(c), x) < 0) define(static_cast<int>(c), x);
    }
  }

  /// Generator actions on the live cosets, renumbered from 0 (coset 0 = identity).
  std::vector<Permutation> permutations() const {
    std::vector<int> index(table_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) index[c] = n++;
    std::vector<Permutation> gens(static_cast<std::size_t>(r_), Permutation(static_cast<std::size_t>(n)));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < r_; ++x)
        gens[static_cast<std::size_t>(x)][static_cast<std::size_t>(index[c])] =
            index[static_cast<std::size_t>(rep(entry(static_cast<int>(c), x)))];
    }
    return gens;
  }

 private:
  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }
  int entry(int c, int x) const { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }
  void set(int c, int x, int d) { table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d; }

  int new_coset() {
    if (table_.size() >= bound_) fail(ErrorKind::BoundExceeded, "coset enumeration exceeded " + std::to_string(bound_));
    table_.emplace_back(static_cast<std::size_t>(r_), -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int x) {
    int d = new_coset();
    set(c, x, d);
    set(d, x, c);
  }

  int rep(int c) const {
    while (parent_[static_cast<std::size_t>(c)] != c) c = parent_[static_cast<std::size_t>(c)];
    return c;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < r_; ++x) {
        int f = entry(e, x);
        if (f < 0) continue;
        set(f, x, -1);
        set(e, x, -1);
        int e1 = rep(e), f1 = rep(f);
        if (entry(e1, x) >= 0)
          merge(f1, entry(e1, x), queue);
        else if (entry(f1, x) >= 0)
          merge(e1, entry(f1, x), queue);
        else {
          set(e1, x, f1);
          set(f1, x, e1);
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) f = entry(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)]) >= 0) b = entry(b, w[static_cast<std::size_t>(j--)]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[static_cast<std::size_t>(i)], b);
        set(b, w[static_cast<std::size_t>(i)], f);
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  int r_;
  std::size_t bound_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

inline Permutation transposition(int n, int a, int b) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return p;
}

/// Generator images for one finite component, as permutations of `points` letters.
inline std::vector<Permutation> component_model(const CoxeterMatrix& m, const FiniteComponent& c, Realization want,
                                                int& points, std::size_t bound) {
  int n = c.rank;
  std::vector<Permutation> gens(static_cast<std::size_t>(n));
  auto pick = [&](Realization natural) {
    if (want == Realization::Auto || want == natural) return natural;
    if (want == Realization::CosetEnumeration) return want;
    fail(ErrorKind::UnsupportedRealization, to_string(want) + " model unavailable for " + c.name());
  };
  Realization use = Realization::CosetEnumeration;
  if (c.family == Family::A) use = pick(Realization::Permutation);
  else if (c.family == Family::B || c.family == Family::D) use = pick(Realization::SignedPermutation);
  else if (c.family == Family::I) use = pick(Realization::Dihedral);
  else use = pick(Realization::CosetEnumeration);

  if (use == Realization::Permutation) {
    points = n + 1;
    for (int k = 0; k < n; ++k) gens[static_cast<std::size_t>(k)] = transposition(points, k, k + 1);
  } else if (use == Realization::SignedPermutation) {
    // letter i in [0,n) is +(i+1), letter n+i is -(i+1)
    points = 2 * n;
    auto swap_pm = [&](int a, int b) {  // transposition of coordinates a, b
      Permutation p = transposition(points, a, b);
      std::swap(p[static_cast<std::size_t>(n + a)], p[static_cast<std::size_t>(n + b)]);
      return p;
    };
    if (c.family == Family::B) {
      gens[0] = transposition(points, 0, n);
      for (int k = 1; k < n; ++k) gens[static_cast<std::size_t>(k)] = swap_pm(k - 1, k);
    } else {
      Permutation s(static_cast<std::size_t>(points));  // (x1, x2) -> (-x2, -x1)
      for (int i = 0; i < points; ++i) s[static_cast<std::size_t>(i)] = i;
      s[0] = n + 1;
      s[static_cast<std::size_t>(n + 1)] = 0;
      s[1] = n;
      s[static_cast<std::size_t>(n)] = 1;
      gens[0] = s;
      gens[1] = swap_pm(0, 1);
      for (int k = 2; k < n; ++k) gens[static_cast<std::size_t>(k)] = swap_pm(k - 1, k);
    }
  } else if (use == Realization::Dihedral) {
    int mm = c.label ? c.label : (c.family == Family::A ? 3 : 4);
    points = mm;
    Permutation a(static_cast<std::size_t>(mm)), b(static_cast<std::size_t>(mm));
    for (int i = 0; i < mm; ++i) {
      a[static_cast<std::size_t>(i)] = (mm - i) % mm;
      b[static_cast<std::size_t>(i)] = ((1 - i) % mm + mm) % mm;
    }
    gens = {a, b};
  } else {
    // enumerate the component alone, generators relabelled 0..n-1
    std::vector<std::vector<int>> sub(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            m(c.vertices[static_cast<std::size_t>(i)], c.vertices[static_cast<std::size_t>(j)]);
    gens = CosetTable(CoxeterMatrix(sub), bound).permutations();
    points = static_cast<int>(gens[0].size());
  }
  return gens;
}

}  // namespace detail

/// Number of elements of each length 0..max_len, computed in an explicit model.
inline std::vector<Integer> bfs_length_census(const CoxeterMatrix& m, Realization realization, int max_len,
                                              std::size_t bound = 2'000'000) {
  bool free_product = true;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.rank(); ++j)
      if (i != j && !m.is_infinite(i, j)) free_product = false;

  if (realization == Realization::FreeProduct || (realization == Realization::Auto && free_product && m.rank() > 1)) {
    if (!free_product) fail(ErrorKind::UnsupportedRealization, "free-product model needs all m_ij = infinity");
    // count reduced words by their last letter
    int r = m.rank();
    std::vector<Integer> counts{1};
    std::vector<Integer> ending(static_cast<std::size_t>(r), 1);
    for (int len = 1; len <= max_len; ++len) {
      Integer total = 0;
      for (auto& e : ending) total += e;
      counts.push_back(total);
      std::vector<Integer> next(static_cast<std::size_t>(r));
      for (int a = 0; a < r; ++a) next[static_cast<std::size_t>(a)] = total - ending[static_cast<std::size_t>(a)];
      ending = std::move(next);
    }
    return counts;
  }

  auto type = classify_parabolic(m, full_mask(m));
  if (!type) fail(ErrorKind::UnsupportedRealization, "no model for infinite group " + to_text(m));

  // disjoint union of component models
  std::vector<Permutation> gens(static_cast<std::size_t>(m.rank()));
  std::vector<std::pair<FiniteComponent, std::vector<Permutation>>> parts;
  int total_points = 0;
  for (const auto& c : type->components) {
    int pts = 0;
    auto g = detail::component_model(m, c, realization, pts, bound);
    parts.emplace_back(c, std::move(g));
    total_points += pts;
  }
  int offset = 0;
  for (const auto& [c, g] : parts) {
    int pts = static_cast<int>(g[0].size());
    for (std::size_t k = 0; k < c.vertices.size(); ++k) {
      Permutation p(static_cast<std::size_t>(total_points));
      for (int i = 0; i < total_points; ++i) p[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < pts; ++i) p[static_cast<std::size_t>(offset + i)] = offset + g[k][static_cast<std::size_t>(i)];
      gens[static_cast<std::size_t>(c.vertices[k])] = std::move(p);
    }
    offset += pts;
  }
  detail::check_relations(m, gens);
  return detail::census_from_permutations(gens, max_len, bound);
}

}  // namespace qtangle
