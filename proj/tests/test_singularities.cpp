#include <gtest/gtest.h>

#include "qtangle/series.hpp"
#include "qtangle/singularities.hpp"

using namespace qtangle;

namespace {

HalfLaurent Q(std::initializer_list<int> c) { return from_q_coeffs(c); }
const HalfLaurent kOne(Rational(1));

using Matrix = std::vector<std::vector<Rational>>;

Matrix mul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// det(q I - C) for the product of simple reflections s_0 s_1 ... s_{n-1}
// acting on the root lattice of the tree's Cartan matrix.
HalfLaurent coxeter_matrix_charpoly(const DynkinTree& t) {
  std::size_t n = static_cast<std::size_t>(t.size());
  Matrix cartan(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) cartan[i][i] = 2;
  for (auto [a, b] : t.edges()) cartan[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = cartan[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -1;
  Matrix c(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix s(n, std::vector<Rational>(n, 0));
    for (std::size_t j = 0; j < n; ++j) s[j][j] = 1;
    for (std::size_t j = 0; j < n; ++j) s[i][j] -= cartan[i][j];  // s_i(v) = v - <alpha_i^vee, v> alpha_i
    c = mul(c, s);
  }
  // Faddeev-LeVerrier
  std::vector<Rational> coeff(n + 1, 0);
  coeff[n] = 1;
  Matrix m(n, std::vector<Rational>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix cm = mul(c, m);
    for (std::size_t i = 0; i < n; ++i) cm[i][i] += coeff[n - k + 1];
    m = cm;
    Matrix am = mul(c, m);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    coeff[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return from_q_coeffs(coeff, 0);
}

// Hilbert series of the invariant ring of the binary polyhedral group, in invariant degree.
RationalFn invariant_hilbert(int a, int b, int c) {
  return RationalFn(kOne + q_pow(c), (kOne - q_pow(a)) * (kOne - q_pow(b)));
}

}  // namespace

TEST(DynkinTree, Validation) {
  EXPECT_THROW(DynkinTree(3, {{0, 1}, {1, 2}, {2, 0}}), Error);
  EXPECT_THROW(DynkinTree(4, {{0, 1}, {2, 3}}), Error);
  EXPECT_THROW(DynkinTree(3, {{0, 1}, {1, 1}}), Error);
  try {
    DynkinTree(4, {{0, 1}, {1, 2}, {2, 0}});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotATree);
  }
}

TEST(CoxeterPolynomial, Examples) {
  EXPECT_EQ(coxeter_polynomial(DynkinTree::path(1)), Q({1, 1}));
  EXPECT_EQ(coxeter_polynomial(DynkinTree::path(2)), Q({1, 1, 1}));
  EXPECT_EQ(coxeter_polynomial(DynkinTree::path(3)), Q({1, 1}) * Q({1, 0, 1}));
}

TEST(CoxeterPolynomial, Paths) {
  for (int n = 1; n <= 20; ++n) {
    std::vector<Rational> ones(static_cast<std::size_t>(n + 1), 1);
    EXPECT_EQ(coxeter_polynomial(DynkinTree::path(n)), from_q_coeffs(ones, 0)) << n;
  }
}

TEST(CoxeterPolynomial, MatchesCoxeterTransformation) {
  std::vector<DynkinType> types;
  for (const char* s : {"E6", "E7", "E8", "~E6", "~E7", "~E8", "D4", "D5", "D9", "~D4", "~D5", "~D8"}) types.push_back(parse_dynkin_type(s));
  for (const auto& d : types) {
    DynkinTree t = dynkin_tree(d);
    EXPECT_EQ(coxeter_polynomial(t), coxeter_matrix_charpoly(t)) << d.name();
  }
  DynkinTree odd(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
  EXPECT_EQ(coxeter_polynomial(odd), coxeter_matrix_charpoly(odd));
}

TEST(CoxeterPolynomial, Shape) {
  for (const char* s : {"E6", "E7", "E8", "~E6", "~E7", "~E8", "D4", "D7", "~D6"}) {
    DynkinTree t = dynkin_tree(parse_dynkin_type(s));
    HalfLaurent p = coxeter_polynomial(t);
    EXPECT_EQ(p.high(), 2 * t.size()) << s;
    EXPECT_EQ(p.low(), 0) << s;
    EXPECT_EQ(p.coeff(0), 1) << s;
    EXPECT_EQ(normalize_palindromic(p).sign, 1) << s;
  }
}

TEST(DynkinType, Parsing) {
  EXPECT_EQ(parse_dynkin_type("~E6").name(), "~E6");
  EXPECT_EQ(parse_dynkin_type("D4").name(), "D4");
  EXPECT_THROW(parse_dynkin_type("D3"), Error);
  EXPECT_THROW(parse_dynkin_type("E9"), Error);
  EXPECT_THROW(parse_dynkin_type("A4"), Error);
  EXPECT_THROW(parse_dynkin_type(""), Error);
}

TEST(Klein, DegreeDifference) {
  for (const char* s : {"E6", "E7", "E8", "D4", "D5", "D10"}) {
    KleinSeries k = klein_poincare(parse_dynkin_type(s));
    EXPECT_EQ(k.affine_poly.high() - k.finite_poly.high(), 2) << s;  // one q-degree
  }
}

TEST(Klein, InvariantRingsOfBinaryPolyhedralGroups) {
  EXPECT_EQ(klein_poincare(parse_dynkin_type("E6")).value.q_stretched(2), invariant_hilbert(6, 8, 12));
  EXPECT_EQ(klein_poincare(parse_dynkin_type("E7")).value.q_stretched(2), invariant_hilbert(8, 12, 18));
  EXPECT_EQ(klein_poincare(parse_dynkin_type("E8")).value.q_stretched(2), invariant_hilbert(12, 20, 30));
  for (int n = 4; n <= 12; ++n) {
    DynkinType d = parse_dynkin_type("D" + std::to_string(n));
    EXPECT_EQ(klein_poincare(d).value.q_stretched(2), invariant_hilbert(4, 2 * (n - 2), 2 * (n - 1))) << n;
  }
}

TEST(Fuchsian, Examples) {
  EXPECT_EQ(fuchsian_poincare(parse_signature("g=2")), RationalFn(Q({1, 0, 0, 1}), Q({1, -2, 1})));
  RationalFn g1 = RationalFn(Q({1, -1, -1, 1}), Q({1, -2, 1})) + RationalFn(Q({0, 0, 1, -1}), Q({1, -2, 1}) * Q({1, 0, -1}));
  EXPECT_EQ(fuchsian_poincare(parse_signature("g=1; a=2")), g1);
  auto c = series_coeffs(fuchsian_poincare(parse_signature("g=0; a=2,3,7")), 13);
  // the ring of the (2,3,7) singularity has generators in degrees 6, 14, 21
  EXPECT_EQ(c, (std::vector<Rational>{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1}));
}

TEST(Fuchsian, IntegerSeries) {
  for (const char* s : {"g=0; a=2,3,7", "g=0; a=2,4,5", "g=1; a=2", "g=3", "g=2; a=3,3", "g=0; a=3,3,4", "g=5; a=2,12,7,4"}) {
    for (const auto& x : series_coeffs(fuchsian_poincare(parse_signature(s)), 40)) EXPECT_TRUE(is_integer(x)) << s;
  }
}

TEST(Signature, Parsing) {
  EXPECT_EQ(parse_signature("g=0; a=7,2,3").a, (std::vector<int>{2, 3, 7}));
  EXPECT_EQ(parse_signature("(1; 2,2)").g, 1);
  EXPECT_EQ(parse_signature("(2;-)").a.size(), 0u);
  EXPECT_EQ(parse_signature("g=2; a=").a.size(), 0u);
  EXPECT_THROW(parse_signature("g=0; a=1"), Error);
  EXPECT_THROW(parse_signature("h=0"), Error);
  EXPECT_THROW(parse_signature("g=x"), Error);
  EXPECT_EQ(parse_signature(parse_signature("g=4; a=9,2").to_text()).to_text(), "g=4; a=2,9");
}

TEST(Prop2, GenusTwo) {
  Prop2Expansion e = prop2_expand(parse_signature("g=2"));
  EXPECT_TRUE(e.verified);
  EXPECT_TRUE(e.torus_terms.empty());
  EXPECT_EQ(e.poly_term.b, (std::vector<Rational>{3, 1}));
  HalfLaurent z = z_var();
  EXPECT_EQ(e.target, RationalFn(z * (z * z + HalfLaurent(Rational(3)))));
}

TEST(Prop2, Signatures) {
  for (const char* s : {"g=0; a=2,3,7", "g=1; a=2,2", "g=4; a=5", "g=0; a=2,2,2,3"}) {
    Prop2Expansion e = prop2_expand(parse_signature(s));
    EXPECT_TRUE(e.verified) << s;
    EXPECT_EQ(e.torus_terms.size(), parse_signature(s).a.size()) << s;
    EXPECT_TRUE(e.residual.is_zero()) << s;
  }
}

TEST(Prop2, TorusTerms) {
  // literal display for a = 2: z / (q^{-1} - q) = 1/(q^{-1/2} + q^{1/2})
  EXPECT_EQ(torus_display_term(2), RationalFn(kOne, t_pow(-1) + t_pow(1)));
  // the terms that make the identity hold: Conway polynomials of T(2,a-1) over T(2,a)
  EXPECT_EQ(torus_quotient_term(2).value(), RationalFn(kOne, z_var()));
  EXPECT_EQ(torus_conway(3), z_var() * z_var() + kOne);
  EXPECT_EQ(torus_conway(4), z_var() * z_var() * z_var() + z_var() * Rational(2));
  EXPECT_FALSE(prop2_compute(parse_signature("g=0; a=2,3,7")).display_form_holds);
  EXPECT_TRUE(prop2_compute(parse_signature("g=3")).display_form_holds);
}
