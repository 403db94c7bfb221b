#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "qtangle/diagram.hpp"
#include "qtangle/tangle_dsl.hpp"

using namespace qtangle;

namespace {

const HalfLaurent kOne(Rational(1));

struct Knot {
  const char* name;
  const char* pd;
  std::string conway;
  long det;
};

const std::vector<Knot>& knots() {
  static const std::vector<Knot> k = {
      {"3_1", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "z^2 + 1", 3},
      {"4_1", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", "-z^2 + 1", 5},
      {"5_1", "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]", "z^4 + 3z^2 + 1", 5},
      {"5_2", "X[1,5,2,4] X[3,9,4,8] X[5,1,6,10] X[7,3,8,2] X[9,7,10,6]", "2z^2 + 1", 7},
      {"6_1", "X[1,7,2,6] X[3,10,4,11] X[5,3,6,2] X[7,1,8,12] X[9,4,10,5] X[11,9,12,8]", "-2z^2 + 1", 9},
      {"7_1", "X[1,8,2,9] X[3,10,4,11] X[5,12,6,13] X[7,14,8,1] X[9,2,10,3] X[11,4,12,5] X[13,6,14,7]",
       "z^6 + 5z^4 + 6z^2 + 1", 7},
  };
  return k;
}

bool same_mod_units(const HalfLaurent& a, const HalfLaurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  HalfLaurent s = a.shifted(b.low() - a.low());
  return s == b || -s == b;
}

HalfLaurent det(std::vector<std::vector<HalfLaurent>> m) {
  std::size_t n = m.size();
  if (n == 0) return kOne;
  if (n == 1) return m[0][0];
  HalfLaurent acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<HalfLaurent>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<HalfLaurent> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    HalfLaurent term = m[0][c] * det(minor);
    acc = c % 2 ? acc - term : acc + term;
  }
  return acc;
}

// Wirtinger presentation and Fox calculus for a knot PD whose labels run 1..2n along the knot.
HalfLaurent fox_alexander(const std::vector<std::array<int, 4>>& pd) {
  int edges = static_cast<int>(2 * pd.size());
  std::vector<int> parent(static_cast<std::size_t>(edges + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& x : pd) parent[static_cast<std::size_t>(find(x[1]))] = find(x[3]);
  std::map<int, std::size_t> arc;
  for (int e = 1; e <= edges; ++e) arc.emplace(find(e), arc.size());
  std::size_t n = arc.size();
  EXPECT_EQ(n, pd.size());
  HalfLaurent t = q_pow(1);
  std::vector<std::vector<HalfLaurent>> m(pd.size(), std::vector<HalfLaurent>(n));
  for (std::size_t r = 0; r < pd.size(); ++r) {
    const auto& x = pd[r];
    bool enters_at_d = x[1] == x[3] % edges + 1;
    std::size_t k = arc[find(x[1])], i = arc[find(x[0])], j = arc[find(x[2])];
    if (enters_at_d) {
      m[r][k] += kOne - t;
      m[r][i] += t;
      m[r][j] -= kOne;
    } else {
      m[r][k] += t - kOne;
      m[r][i] += kOne;
      m[r][j] -= t;
    }
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  return det(m);
}

// Closure of the two-strand braid sigma^m, both strands oriented upward.
LinkDiagram braid_closure(int m) {
  auto id = [m](int p, int i) { return 2 * (i % m) + p + 1; };
  std::vector<std::array<int, 4>> pd;
  for (int i = 0; i < m; ++i) pd.push_back({id(0, i), id(1, i), id(1, i + 1), id(0, i + 1)});
  return LinkDiagram::from_pd(pd);
}

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(QT_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(TangleFraction, SumExamples) {
  HalfLaurent z = z_var();
  TangleFraction zero(HalfLaurent{}, kOne), inf(kOne, HalfLaurent{});
  TangleFraction a(z, kOne), b(kOne, z);
  EXPECT_TRUE(tangle_sum(zero, a).equal_mod_units(a));
  EXPECT_TRUE(tangle_sum(a, a).equal_mod_units(TangleFraction(z * Rational(2), kOne)));
  EXPECT_TRUE(tangle_sum(a, b).equal_mod_units(TangleFraction(z * z + kOne, z)));
  EXPECT_TRUE(tangle_sum(inf, a).equal_mod_units(inf));
  EXPECT_TRUE(tangle_invert(a).equal_mod_units(b));
  EXPECT_TRUE(tangle_mirror(a).equal_mod_units(TangleFraction(-z, kOne)));
  EXPECT_TRUE(tangle_multiple(a, -3).equal_mod_units(TangleFraction(z * Rational(-3), kOne)));
  EXPECT_THROW(TangleFraction(HalfLaurent{}, HalfLaurent{}), Error);
  EXPECT_THROW(inf.value(), Error);
}

TEST(TangleFraction, ZPolyBlocks) {
  HalfLaurent z = z_var();
  EXPECT_TRUE(make_zpoly_tangle(std::vector<long>{4, 1}, false).equal_value(TangleFraction(z * (z * z + HalfLaurent(Rational(4))), kOne)));
  EXPECT_TRUE(make_zpoly_tangle(std::vector<long>{1}, true).equal_value(TangleFraction(kOne, z)));
  EXPECT_THROW(make_zpoly_tangle(std::vector<Rational>{Rational(1, 2)}, false), Error);
  EXPECT_THROW(make_zpoly_tangle(std::vector<long>{0, 0}, false), Error);
}

TEST(TangleFraction, Determinants) {
  FractionDeterminant d = determinant(twist_fraction(3));
  EXPECT_EQ(d.numerator_determinant, 3);
  EXPECT_EQ(d.denominator_determinant, 1);
  ASSERT_TRUE(d.fraction.has_value());
  EXPECT_EQ(d.fraction->norm(), 9);
}

TEST(Diagram, TwistClosures) {
  TangleFraction zero = qfraction_of_diagram(make_twist(0));
  EXPECT_TRUE(zero.num().is_zero());
  EXPECT_EQ(zero.den(), kOne);
  LinkDiagram hopf = make_twist(2).numerator_closure();
  EXPECT_EQ(hopf.component_count(), 2);
  EXPECT_EQ(determinant(hopf), 2);
  EXPECT_TRUE(same_mod_units(alexander(hopf), z_var()));
  LinkDiagram trefoil = make_twist(3).numerator_closure();
  EXPECT_EQ(trefoil.component_count(), 1);
  EXPECT_EQ(conway_to_string(conway_polynomial(trefoil)), "z^2 + 1");
  for (int n = -7; n <= 7; ++n) {
    TangleDiagram t = make_twist(n);
    EXPECT_EQ(t.crossing_count(), n < 0 ? -n : n);
    EXPECT_TRUE(qfraction_of_diagram(t).equal_mod_units(twist_fraction(n))) << n;
    EXPECT_TRUE(same_mod_units(alexander(t.denominator_closure()), kOne)) << n;
  }
}

TEST(Diagram, ConwayPolynomials) {
  EXPECT_EQ(conway_to_string(conway_polynomial(parse_pd("unknot"))), "1");
  for (const auto& k : knots()) {
    LinkDiagram d = parse_pd(k.pd);
    EXPECT_EQ(d.component_count(), 1) << k.name;
    EXPECT_EQ(conway_to_string(conway_polynomial(d)), k.conway) << k.name;
    EXPECT_EQ(determinant(d), k.det) << k.name;
  }
  HalfLaurent t25 = from_q_coeffs({1, -1, 1, -1, 1}, -2);
  EXPECT_EQ(alexander(parse_pd(read_file("torus_2_5.pd"))), t25);
}

TEST(Diagram, MatchesFoxCalculus) {
  for (const auto& k : knots()) {
    LinkDiagram d = parse_pd(k.pd);
    EXPECT_TRUE(same_mod_units(alexander(d), fox_alexander(d.pd()))) << k.name;
  }
}

TEST(Diagram, AlexanderIsPalindromic) {
  for (const auto& k : knots()) {
    HalfLaurent a = alexander(parse_pd(k.pd));
    EXPECT_EQ(a, a.inverted_variable()) << k.name;
    EXPECT_EQ(evaluate_at_one(a), 1) << k.name;
  }
}

TEST(Diagram, RelabelingAndReordering) {
  std::mt19937_64 rng(11);
  for (const auto& k : knots()) {
    LinkDiagram d = parse_pd(k.pd);
    HalfLaurent ref = alexander(d);
    for (int trial = 0; trial < 5; ++trial) {
      auto pd = d.pd();
      std::shuffle(pd.begin(), pd.end(), rng);
      int edges = static_cast<int>(2 * pd.size());
      std::vector<int> relabel(static_cast<std::size_t>(edges));
      std::iota(relabel.begin(), relabel.end(), 100);
      std::shuffle(relabel.begin(), relabel.end(), rng);
      for (auto& x : pd)
        for (int& l : x) l = relabel[static_cast<std::size_t>(l - 1)];
      EXPECT_TRUE(same_mod_units(alexander(LinkDiagram::from_pd(pd)), ref)) << k.name;
    }
  }
}

TEST(Diagram, ParseErrors) {
  EXPECT_THROW(parse_pd(""), Error);
  EXPECT_THROW(parse_pd("X[1,2,3]"), Error);
  EXPECT_THROW(parse_pd("X[1,2,3,4,5]"), Error);
  EXPECT_THROW(parse_pd("X[1,a,2,3]"), Error);
  EXPECT_THROW(parse_pd("X[1,1,1,1]"), Error);
  EXPECT_EQ(to_pd_string(parse_pd(to_pd_string(parse_pd(knots()[0].pd)))), knots()[0].pd);
}

TEST(Diagram, CrossingBudget) {
  LinkDiagram d = parse_pd(knots()[0].pd);
  try {
    conway_polynomial(d, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Diagram, TorusQuotient) {
  for (int n = 1; n <= 8; ++n) {
    TangleDiagram t = torus_quotient_diagram(n);
    EXPECT_EQ(t.crossing_count(), 2 * n);
    TangleFraction expect(alexander(braid_closure(n)), alexander(braid_closure(n + 1)));
    EXPECT_TRUE(qfraction_of_diagram(t).equal_mod_units(expect)) << n;
    EXPECT_TRUE(expect.equal_mod_units(TangleFraction(torus_conway(n), torus_conway(n + 1)))) << n;
  }
}

TEST(Dsl, Evaluation) {
  HalfLaurent z = z_var();
  TangleValue v = evaluate_tangle("T(3) + Z[4,1] + 1/Z[1,0,1]");
  EXPECT_FALSE(v.diagram.has_value());
  TangleFraction expect = tangle_sum(tangle_sum(twist_fraction(3), make_zpoly_tangle(std::vector<long>{4, 1}, false)),
                                     make_zpoly_tangle(std::vector<long>{1, 0, 1}, true));
  EXPECT_TRUE(v.fraction.equal_value(expect));
  EXPECT_TRUE(evaluate_tangle("R(T(2))").fraction.equal_mod_units(evaluate_tangle("1/T(2)").fraction));
  EXPECT_TRUE(evaluate_tangle("M(T(4))").fraction.equal_mod_units(twist_fraction(-4)));
  EXPECT_TRUE(evaluate_tangle(" ( T(2) + T(2) ) ").fraction.equal_mod_units(twist_fraction(4)));
}

TEST(Dsl, DiagramsAgreeForOrientableSums) {
  for (const char* e : {"T(2) + T(-4)", "R(T(2) + T(2)) + T(2)", "R(T(-2)) + R(T(4)) + T(2)", "M(R(T(2)) + T(2))"}) {
    TangleValue v = evaluate_tangle(e);
    ASSERT_TRUE(v.diagram.has_value()) << e;
    EXPECT_TRUE(v.additive) << e;
    EXPECT_TRUE(qfraction_of_diagram(*v.diagram).equal_mod_units(v.fraction)) << e;
  }
}

TEST(Dsl, OddTwistSums) {
  TangleValue v = evaluate_tangle("T(1) + T(1)");
  EXPECT_FALSE(v.additive);
  ASSERT_TRUE(v.diagram.has_value());
  EXPECT_TRUE(qfraction_of_diagram(*v.diagram).equal_mod_units(qfraction_of_diagram(make_twist(2))));
  EXPECT_FALSE(v.fraction.equal_mod_units(twist_fraction(2)));
}

TEST(Dsl, RandomSums) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    std::string e = random_twist_expression(rng, 12);
    TangleValue v = evaluate_tangle(e);
    ASSERT_TRUE(v.diagram.has_value()) << e;
    EXPECT_LE(v.diagram->crossing_count(), 12) << e;
    EXPECT_TRUE(qfraction_of_diagram(*v.diagram).equal_mod_units(v.fraction)) << e;
  }
}

TEST(Dsl, Errors) {
  for (const char* e : {"", "T(", "T(2", "T(x)", "Z[]", "T(2) +", "Q(1)", "T(2))", "1/"}) EXPECT_THROW(evaluate_tangle(e), Error) << e;
  try {
    evaluate_tangle("T(30)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  try {
    evaluate_tangle("T(4) + T(4)", 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  try {
    evaluate_tangle("T(2) + (");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}
