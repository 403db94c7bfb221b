#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "qtangle/tangle_fraction.hpp"

namespace qtangle {

/// Conway polynomial in the skein variable (nonnegative exponents).
using ConwayPoly = Laurent<Integer>;

inline constexpr int kDefaultMaxCrossings = 24;

struct OrientedCrossing {
  int ui, uo, oi, oo;  // under in/out, over in/out edge ids
  int sign;            // +1 or -1
};

struct OrientedLink {
  std::vector<OrientedCrossing> xs;
  int free_loops = 0;
};

/*
  Closed diagram in planar-diagram form: each crossing lists its four edge
  labels counterclockwise starting from the incoming under-edge. sign[c] is
  +1 when the over-strand enters at slot 3.
*/
class LinkDiagram {
 public:
  LinkDiagram() = default;

  static LinkDiagram unknot() {
    LinkDiagram d;
    d.free_loops_ = 1;
    return d;
  }

  /// PD code with orientation of over-strands derived from the under-strands along each component.
  static LinkDiagram from_pd(std::vector<std::array<int, 4>> pd, int free_loops = 0) {
    LinkDiagram d;
    d.pd_ = std::move(pd);
    d.free_loops_ = free_loops;
    d.derive_signs();
    return d;
  }

  /// PD code with explicit signs (used for closures whose orientation is already known).
  static LinkDiagram from_oriented_pd(std::vector<std::array<int, 4>> pd, std::vector<int> sign, int free_loops) {
    LinkDiagram d;
    d.pd_ = std::move(pd);
    d.sign_ = std::move(sign);
    d.free_loops_ = free_loops;
    d.check_labels();
    return d;
  }

  const std::vector<std::array<int, 4>>& pd() const noexcept { return pd_; }
  const std::vector<int>& signs() const noexcept { return sign_; }
  int free_loops() const noexcept { return free_loops_; }
  int crossing_count() const noexcept { return static_cast<int>(pd_.size()); }

  OrientedLink oriented() const {
    OrientedLink l;
    l.free_loops = free_loops_;
    for (std::size_t c = 0; c < pd_.size(); ++c) {
      const auto& x = pd_[c];
      bool pos = sign_[c] > 0;
      l.xs.push_back({x[0], x[2], pos ? x[3] : x[1], pos ? x[1] : x[3], sign_[c]});
    }
    return l;
  }

  int component_count() const {
    OrientedLink l = oriented();
    std::map<int, std::pair<int, int>> head;  // edge -> (crossing, is_under)
    for (std::size_t c = 0; c < l.xs.size(); ++c) {
      head[l.xs[c].ui] = {static_cast<int>(c), 1};
      head[l.xs[c].oi] = {static_cast<int>(c), 0};
    }
    std::map<int, bool> seen;
    int comps = free_loops_;
    for (auto& [e, h] : head) {
      if (seen[e]) continue;
      ++comps;
      int cur = e;
      while (!seen[cur]) {
        seen[cur] = true;
        auto [c, u] = head[cur];
        cur = u ? l.xs[static_cast<std::size_t>(c)].uo : l.xs[static_cast<std::size_t>(c)].oo;
      }
    }
    return comps;
  }

  int writhe() const { return std::accumulate(sign_.begin(), sign_.end(), 0); }

 private:
  void check_labels() const {
    std::map<int, int> count;
    for (const auto& x : pd_)
      for (int e : x) ++count[e];
    for (auto [e, n] : count)
      if (n != 2) fail(ErrorKind::Parse, "edge label " + std::to_string(e) + " appears " + std::to_string(n) + " times");
  }

  void derive_signs() {
    check_labels();
    const std::size_t n = pd_.size();
    std::map<int, std::vector<std::pair<int, int>>> occ;  // label -> (crossing, slot)
    for (std::size_t c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s) occ[pd_[c][static_cast<std::size_t>(s)]].push_back({static_cast<int>(c), s});
    // in_slot[c][s]: edge at slot s enters crossing c
    std::vector<std::array<int, 4>> in_slot(n, {-1, -1, -1, -1});
    auto traverse = [&](int c, int s) {
      // the edge at (c, s) enters c there; walk forward along the strand
      while (in_slot[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] < 0) {
        in_slot[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = 1;
        int out = (s + 2) % 4;
        in_slot[static_cast<std::size_t>(c)][static_cast<std::size_t>(out)] = 0;
        int e = pd_[static_cast<std::size_t>(c)][static_cast<std::size_t>(out)];
        const auto& o = occ[e];
        auto next = (o[0].first == c && o[0].second == out) ? o[1] : o[0];
        c = next.first;
        s = next.second;
      }
    };
    for (std::size_t c = 0; c < n; ++c)
      if (in_slot[c][0] < 0) traverse(static_cast<int>(c), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (in_slot[c][1] >= 0) continue;
      // component that is over at every crossing: orient by consecutive labels
      const auto& x = pd_[c];
      bool from3 = x[1] - x[3] == 1 || x[3] - x[1] > 1;
      traverse(static_cast<int>(c), from3 ? 3 : 1);
    }
    sign_.assign(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (in_slot[c][0] != 1) fail(ErrorKind::Parse, "PD crossing " + std::to_string(c + 1) + " does not start at an incoming under-edge");
      sign_[c] = in_slot[c][3] == 1 ? 1 : -1;
    }
  }

  std::vector<std::array<int, 4>> pd_;
  std::vector<int> sign_;
  int free_loops_ = 0;
};

/// "X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]"; "unknot" or "O" for the trivial diagram.
inline LinkDiagram parse_pd(std::string_view s) {
  std::string str(s);
  std::string trimmed;
  for (char c : str)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed == "unknot" || trimmed == "O") return LinkDiagram::unknot();
  std::vector<std::array<int, 4>> pd;
  std::size_t pos = 0;
  while ((pos = trimmed.find("X[", pos)) != std::string::npos) {
    std::size_t end = trimmed.find(']', pos);
    if (end == std::string::npos) fail(ErrorKind::Parse, "unterminated X[ in PD code");
    std::string body = trimmed.substr(pos + 2, end - pos - 2);
    std::array<int, 4> x{};
    std::size_t k = 0, start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; }))
        fail(ErrorKind::Parse, "bad label '" + tok + "' in PD code");
      if (k >= 4) fail(ErrorKind::Parse, "PD crossing with more than four labels");
      x[k++] = std::stoi(tok);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (k != 4) fail(ErrorKind::Parse, "PD crossing with fewer than four labels");
    pd.push_back(x);
    pos = end + 1;
  }
  if (pd.empty()) fail(ErrorKind::Parse, "no crossings found in PD code '" + std::string(s) + "'");
  return LinkDiagram::from_pd(std::move(pd));
}

inline std::string to_pd_string(const LinkDiagram& d) {
  if (d.pd().empty()) return "unknot";
  std::string out;
  for (const auto& x : d.pd()) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
  }
  return out;
}

namespace detail {

class SkeinEngine {
 public:
  explicit SkeinEngine(std::uint64_t max_nodes) : max_nodes_(max_nodes) {}

  ConwayPoly eval(OrientedLink l) {
    if (++nodes_ > max_nodes_) fail(ErrorKind::BudgetExceeded, "skein recursion exceeded " + std::to_string(max_nodes_) + " nodes");
    remove_kinks(l);
    if (l.xs.empty()) return l.free_loops <= 1 ? ConwayPoly(Integer(1)) : ConwayPoly();
    if (l.free_loops > 0 || is_split(l)) return {};
    int comps = 0;
    int bad = find_bad(l, comps);
    if (bad < 0) return comps == 1 ? ConwayPoly(Integer(1)) : ConwayPoly();
    OrientedLink sw = l, sm = l;
    auto& x = sw.xs[static_cast<std::size_t>(bad)];
    std::swap(x.ui, x.oi);
    std::swap(x.uo, x.oo);
    x.sign = -x.sign;
    smooth(sm, bad);
    ConwayPoly zs = eval(std::move(sm)) * ConwayPoly::monomial(Integer(1), 1);
    int sign = l.xs[static_cast<std::size_t>(bad)].sign;
    ConwayPoly r = eval(std::move(sw));
    return sign > 0 ? r + zs : r - zs;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  static void rename(OrientedLink& l, int from, int to) {
    for (auto& x : l.xs) {
      if (x.ui == from) x.ui = to;
      if (x.uo == from) x.uo = to;
      if (x.oi == from) x.oi = to;
      if (x.oo == from) x.oo = to;
    }
  }

  /// Remove crossing c, joining under-in to over-out and over-in to under-out.
  static void smooth(OrientedLink& l, int c) {
    OrientedCrossing x = l.xs[static_cast<std::size_t>(c)];
    l.xs.erase(l.xs.begin() + c);
    join(l, x.ui, x.oo, x);
    join(l, x.oi, x.uo, x);
  }

 private:
  // edge `in` entered the removed crossing and now continues as `out`
  static void join(OrientedLink& l, int in, int out, OrientedCrossing& pending) {
    if (in == out) {
      ++l.free_loops;
      return;
    }
    rename(l, out, in);
    for (int* p : {&pending.ui, &pending.uo, &pending.oi, &pending.oo})
      if (*p == out) *p = in;
  }

  static void remove_kinks(OrientedLink& l) {
    for (bool again = true; again;) {
      again = false;
      for (std::size_t c = 0; c < l.xs.size(); ++c) {
        const OrientedCrossing x = l.xs[c];
        if (x.uo == x.oi) {
          l.xs.erase(l.xs.begin() + static_cast<long>(c));
          if (x.ui == x.oo) ++l.free_loops; else rename(l, x.oo, x.ui);
          again = true;
          break;
        }
        if (x.oo == x.ui) {
          l.xs.erase(l.xs.begin() + static_cast<long>(c));
          if (x.oi == x.uo) ++l.free_loops; else rename(l, x.uo, x.oi);
          again = true;
          break;
        }
      }
    }
  }

  static bool is_split(const OrientedLink& l) {
    const std::size_t n = l.xs.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      return a;
    };
    std::map<int, int> first;
    for (std::size_t c = 0; c < n; ++c)
      for (int e : {l.xs[c].ui, l.xs[c].uo, l.xs[c].oi, l.xs[c].oo}) {
        auto [it, fresh] = first.emplace(e, static_cast<int>(c));
        if (!fresh) parent[static_cast<std::size_t>(find(it->second))] = find(static_cast<int>(c));
      }
    int root = find(0);
    for (std::size_t c = 1; c < n; ++c)
      if (find(static_cast<int>(c)) != root) return true;
    return false;
  }

  // Components in order of their smallest edge id, each walked from that edge.
  // Returns the first crossing met first as an under-crossing, or -1 for a descending diagram.
  static int find_bad(const OrientedLink& l, int& comps) {
    std::map<int, std::pair<int, bool>> head;
    for (std::size_t c = 0; c < l.xs.size(); ++c) {
      head[l.xs[c].ui] = {static_cast<int>(c), true};
      head[l.xs[c].oi] = {static_cast<int>(c), false};
    }
    std::vector<char> met(l.xs.size(), 0);
    std::map<int, bool> seen;
    int bad = -1;
    comps = 0;
    for (const auto& [e0, unused] : head) {
      (void)unused;
      if (seen[e0]) continue;
      ++comps;
      for (int e = e0; !seen[e];) {
        seen[e] = true;
        auto [c, under] = head[e];
        if (!met[static_cast<std::size_t>(c)]) {
          met[static_cast<std::size_t>(c)] = 1;
          if (under && bad < 0) bad = c;
        }
        const auto& x = l.xs[static_cast<std::size_t>(c)];
        e = under ? x.uo : x.oo;
      }
    }
    return bad;
  }

  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline ConwayPoly conway_polynomial(const LinkDiagram& d, int max_crossings = kDefaultMaxCrossings,
                                    std::uint64_t max_nodes = 50'000'000) {
  if (d.crossing_count() > max_crossings)
    fail(ErrorKind::BudgetExceeded, std::to_string(d.crossing_count()) + " crossings exceed the budget of " + std::to_string(max_crossings));
  detail::SkeinEngine e(max_nodes);
  return e.eval(d.oriented());
}

/// Conway polynomial with the skein variable set to z = q^{-1/2} - q^{1/2}.
inline HalfLaurent conway_to_alexander(const ConwayPoly& c) {
  HalfLaurent acc;
  if (c.is_zero()) return acc;
  for (int e = c.high(); e >= 0; --e) acc = acc * z_var() + HalfLaurent(Rational(c.coeff(e)));
  return acc;
}

inline HalfLaurent alexander(const LinkDiagram& d, int max_crossings = kDefaultMaxCrossings) {
  return conway_to_alexander(conway_polynomial(d, max_crossings));
}

inline Integer determinant(const LinkDiagram& d, int max_crossings = kDefaultMaxCrossings) {
  return determinant_of(alexander(d, max_crossings));
}

inline std::string conway_to_string(const ConwayPoly& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (int e = c.high(); e >= c.low(); --e) {
    Integer k = c.coeff(e);
    if (k == 0) continue;
    Integer a = k < 0 ? Integer(-k) : k;
    out += out.empty() ? (k < 0 ? "-" : "") : (k < 0 ? " - " : " + ");
    std::string mono = e == 0 ? "" : (e == 1 ? "z" : "z^" + std::to_string(e));
    out += mono.empty() ? a.str() : (a == 1 ? "" : a.str()) + mono;
  }
  return out;
}

/*
  Two-string tangle diagram. Crossing slots are listed counterclockwise with
  the under-strand on slots 0 and 2. Boundary points are NW=0, NE=1, SW=2,
  SE=3. Every edge carries a native orientation (tail, head); `consistent`
  records whether that orientation runs straight through every crossing and
  junction.
*/
class TangleDiagram {
 public:
  enum Boundary { NW = 0, NE = 1, SW = 2, SE = 3 };

  struct End {
    int crossing;  // -1 for a boundary point
    int slot;      // slot index, or boundary index when crossing == -1
    friend bool operator==(const End& a, const End& b) { return a.crossing == b.crossing && a.slot == b.slot; }
  };
  struct Edge {
    End tail, head;
  };

  int crossing_count() const noexcept { return static_cast<int>(xs_.size()); }
  int loops() const noexcept { return loops_; }
  bool consistent() const noexcept { return consistent_; }
  const std::vector<std::array<int, 4>>& crossings() const noexcept { return xs_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// n signed crossings in a row; odd n carries the braid orientation, even n the antiparallel one.
  static TangleDiagram twist(int n) {
    if (n < -kDefaultMaxCrossings || n > kDefaultMaxCrossings) fail(ErrorKind::BudgetExceeded, "twist length exceeds 24");
    const int m = n < 0 ? -n : n;
    enum { LL = 0, LR = 1, UR = 2, UL = 3 };  // geometric corner positions, counterclockwise
    TangleDiagram t;
    t.boundary_.assign(4, -1);
    t.xs_.assign(static_cast<std::size_t>(m), {-1, -1, -1, -1});
    // slot index of each corner: positive twists put the under-strand on LL-UR
    auto slot_of = [&](int corner) { return n > 0 ? corner : (corner + 1) % 4; };
    std::vector<std::pair<End, End>> raw;
    for (int row = 0; row < 2; ++row) {
      for (int k = 0; k <= m; ++k) {
        End left = k == 0 ? End{-1, row == 0 ? NW : SW} : End{k - 1, slot_of(row == 0 ? UR : LR)};
        End right = k == m ? End{-1, row == 0 ? NE : SE} : End{k, slot_of(row == 0 ? UL : LL)};
        raw.emplace_back(left, right);
      }
    }
    for (auto& [a, b] : raw) t.add_edge(a, b);
    if (m % 2 == 1) {
      t.orient_from(NW);
      t.orient_from(SW);
    } else {
      t.orient_from(NW);
      t.orient_from(SE);
    }
    return t;
  }

  /// Quarter turn clockwise: NW -> NE -> SE -> SW -> NW.
  TangleDiagram rotated() const {
    static constexpr int to[4] = {NE, SE, NW, SW};
    TangleDiagram r = *this;
    for (int b = 0; b < 4; ++b) r.boundary_[static_cast<std::size_t>(to[b])] = boundary_[static_cast<std::size_t>(b)];
    for (auto& e : r.edges_)
      for (End* p : {&e.tail, &e.head})
        if (p->crossing < 0) p->slot = to[p->slot];
    return r;
  }

  /// Every crossing switched.
  TangleDiagram mirrored() const {
    TangleDiagram r = *this;
    for (auto& x : r.xs_) x = {x[1], x[2], x[3], x[0]};
    for (auto& e : r.edges_)
      for (End* p : {&e.tail, &e.head})
        if (p->crossing >= 0) p->slot = (p->slot + 3) % 4;
    return r;
  }

  /// Strand partner of NW: NE (parity 0), SW (parity infinity) or SE (parity 1).
  Boundary partner_of_nw() const {
    End cur{-1, NW};
    int e = boundary_[NW];
    while (true) {
      const Edge& ed = edges_[static_cast<std::size_t>(e)];
      End other = ed.tail == cur ? ed.head : ed.tail;
      if (other.crossing < 0) return static_cast<Boundary>(other.slot);
      int s = (other.slot + 2) % 4;
      cur = End{other.crossing, s};
      e = xs_[static_cast<std::size_t>(other.crossing)][static_cast<std::size_t>(s)];
    }
  }

  bool orientable() const { return partner_of_nw() != SE; }

  friend TangleDiagram tangle_sum(const TangleDiagram& a, const TangleDiagram& b) {
    TangleDiagram s = a;
    const int xoff = a.crossing_count(), eoff = static_cast<int>(a.edges_.size());
    TangleDiagram bb = b;
    // B's native orientation is reversed wholesale if it disagrees with A at the upper junction
    bool a_out = a.edge_at(NE).head == End{-1, NE};
    bool b_in = bb.edge_at(NW).tail == End{-1, NW};
    if (a_out != b_in)
      for (auto& e : bb.edges_) std::swap(e.tail, e.head);
    for (auto x : bb.xs_) {
      for (int& id : x) id += eoff;
      s.xs_.push_back(x);
    }
    for (auto e : bb.edges_) {
      for (End* p : {&e.tail, &e.head}) {
        if (p->crossing >= 0)
          p->crossing += xoff;
        else
          p->slot += 4;
      }
      s.edges_.push_back(e);
      s.alive_.push_back(true);
    }
    for (int id : bb.boundary_) s.boundary_.push_back(id + eoff);
    s.loops_ += bb.loops_;
    s.consistent_ = a.consistent_ && bb.consistent_;
    s.glue(NE, 4 + NW);
    s.glue(SE, 4 + SW);
    s.reindex_boundary({NW, 4 + NE, SW, 4 + SE});
    s.compact();
    return s;
  }

  LinkDiagram numerator_closure() const { return close(NW, NE, SW, SE); }
  LinkDiagram denominator_closure() const { return close(NW, SW, NE, SE); }

 private:
  const Edge& edge_at(int b) const { return edges_[static_cast<std::size_t>(boundary_[static_cast<std::size_t>(b)])]; }

  void add_edge(End a, End b) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({a, b});
    alive_.push_back(true);
    for (End e : {a, b}) {
      if (e.crossing < 0)
        boundary_[static_cast<std::size_t>(e.slot)] = id;
      else
        xs_[static_cast<std::size_t>(e.crossing)][static_cast<std::size_t>(e.slot)] = id;
    }
  }

  // Walk the strand starting at boundary point b, orienting its edges away from b.
  void orient_from(int b) {
    End cur{-1, b};
    int e = boundary_[static_cast<std::size_t>(b)];
    while (true) {
      Edge& ed = edges_[static_cast<std::size_t>(e)];
      End other = ed.tail == cur ? ed.head : ed.tail;
      ed.tail = cur;
      ed.head = other;
      if (other.crossing < 0) return;
      int s = (other.slot + 2) % 4;
      cur = End{other.crossing, s};
      e = xs_[static_cast<std::size_t>(other.crossing)][static_cast<std::size_t>(s)];
    }
  }

  void set_ref(const End& at, int id) {
    if (at.crossing < 0)
      boundary_[static_cast<std::size_t>(at.slot)] = id;
    else
      xs_[static_cast<std::size_t>(at.crossing)][static_cast<std::size_t>(at.slot)] = id;
  }

  // Join boundary points bi and bj by an arc outside the tangle.
  void glue(int bi, int bj) {
    int e1 = boundary_[static_cast<std::size_t>(bi)], e2 = boundary_[static_cast<std::size_t>(bj)];
    const End pi{-1, bi}, pj{-1, bj};
    boundary_[static_cast<std::size_t>(bi)] = boundary_[static_cast<std::size_t>(bj)] = -1;
    if (e1 == e2) {
      ++loops_;
      alive_[static_cast<std::size_t>(e1)] = false;
      return;
    }
    Edge& a = edges_[static_cast<std::size_t>(e1)];
    const Edge b = edges_[static_cast<std::size_t>(e2)];
    End far = b.tail == pj ? b.head : b.tail;
    bool a_tail_here = a.tail == pi, b_head_here = b.head == pj;
    if (a_tail_here != b_head_here) consistent_ = false;
    if (a_tail_here)
      a.tail = far;
    else
      a.head = far;
    set_ref(far, e1);
    alive_[static_cast<std::size_t>(e2)] = false;
  }

  void reindex_boundary(const std::vector<int>& keep) {
    std::vector<int> nb;
    std::vector<int> newidx(boundary_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      newidx[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
      nb.push_back(boundary_[static_cast<std::size_t>(keep[i])]);
    }
    boundary_ = nb;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!alive_[i]) continue;
      for (End* p : {&edges_[i].tail, &edges_[i].head})
        if (p->crossing < 0) p->slot = newidx[static_cast<std::size_t>(p->slot)];
    }
  }

  void compact() {
    std::vector<int> id(edges_.size(), -1);
    std::vector<Edge> ne;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (alive_[i]) {
        id[i] = static_cast<int>(ne.size());
        ne.push_back(edges_[i]);
      }
    for (auto& x : xs_)
      for (int& e : x) e = id[static_cast<std::size_t>(e)];
    for (int& e : boundary_)
      if (e >= 0) e = id[static_cast<std::size_t>(e)];
    edges_ = std::move(ne);
    alive_.assign(edges_.size(), true);
  }

  // Closure joining (a1, a2) and (b1, b2); inconsistent orientations are redone per component
  // from its smallest edge in that edge's native direction.
  LinkDiagram close(int a1, int a2, int b1, int b2) const {
    TangleDiagram c = *this;
    c.glue(a1, a2);
    c.glue(b1, b2);
    c.compact();
    if (!c.consistent_) c.reorient();
    const std::size_t n = c.xs_.size();
    std::vector<std::array<int, 4>> pd;
    std::vector<int> sign;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = c.xs_[k];
      auto enters = [&](int s) { return c.edges_[static_cast<std::size_t>(x[static_cast<std::size_t>(s)])].head == End{static_cast<int>(k), s}; };
      bool under0 = enters(0);
      std::array<int, 4> p = under0 ? x : std::array<int, 4>{x[2], x[3], x[0], x[1]};
      bool over_from3 = under0 ? enters(3) : enters(1);
      pd.push_back(p);
      sign.push_back(over_from3 ? 1 : -1);
    }
    return LinkDiagram::from_oriented_pd(std::move(pd), std::move(sign), c.loops_);
  }

  void reorient() {
    std::vector<char> done(edges_.size(), 0);
    for (std::size_t e0 = 0; e0 < edges_.size(); ++e0) {
      if (done[e0]) continue;
      std::size_t e = e0;
      End cur = edges_[e].tail;
      while (!done[e]) {
        done[e] = 1;
        Edge& ed = edges_[e];
        End other = ed.tail == cur ? ed.head : ed.tail;
        ed.tail = cur;
        ed.head = other;
        int s = (other.slot + 2) % 4;
        cur = End{other.crossing, s};
        e = static_cast<std::size_t>(xs_[static_cast<std::size_t>(other.crossing)][static_cast<std::size_t>(s)]);
      }
    }
    consistent_ = true;
  }

  std::vector<std::array<int, 4>> xs_;
  std::vector<Edge> edges_;
  std::vector<bool> alive_;
  std::vector<int> boundary_;
  int loops_ = 0;
  bool consistent_ = true;
};

inline TangleDiagram make_twist(int n) { return TangleDiagram::twist(n); }

inline TangleFraction qfraction_of_diagram(const TangleDiagram& t, int max_crossings = kDefaultMaxCrossings) {
  return {alexander(t.numerator_closure(), max_crossings), alexander(t.denominator_closure(), max_crossings)};
}

}  // namespace qtangle
