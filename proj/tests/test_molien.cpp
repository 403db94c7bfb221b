#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>

#include "qtangle/molien.hpp"
#include "qtangle/series.hpp"

using namespace qtangle;

namespace {

HalfLaurent Q(std::initializer_list<int> c) { return from_q_coeffs(c); }
const HalfLaurent kOne(Rational(1));

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(QT_DATA_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

MaterializedGroup group(const std::string& name, Character chi = Character::Trivial) {
  return materialize(parse_group_json(load(name)), chi);
}

std::multiset<std::vector<Rational>> charpoly_multiset(const std::vector<ClassData>& cs) {
  std::multiset<std::vector<Rational>> s;
  for (const auto& c : cs) s.insert(c.charpoly);
  return s;
}

CycloMatrix diag(const CycloField& f, long a, long b) {
  return {2, {f.zeta_pow(a), f.zero(), f.zero(), f.zeta_pow(b)}};
}

}  // namespace

TEST(CycloField, Arithmetic) {
  CycloField f(12);
  EXPECT_EQ(f.degree(), 4u);
  auto z = f.zeta_pow(1);
  EXPECT_EQ(f.mul(f.zeta_pow(5), f.zeta_pow(7)), f.scalar(1));
  EXPECT_EQ(f.zeta_pow(6), f.scalar(-1));
  EXPECT_EQ(f.zeta_pow(-1), f.zeta_pow(11));
  // zeta_12^2 is a primitive sixth root: x^2 - x + 1 = 0
  auto w = f.mul(z, z);
  EXPECT_TRUE(CycloField::is_zero(f.add(f.sub(f.mul(w, w), w), f.scalar(1))));
}

TEST(CloseGroup, Examples) {
  CycloField f1(1);
  EXPECT_EQ(close_group(f1, {identity_matrix(f1, 2)}).size(), 1u);
  CycloField f3(3);
  EXPECT_EQ(close_group(f3, {diag(f3, 1, -1)}).size(), 3u);
  EXPECT_EQ(group("binary_tetrahedral.json").order, 24);
  EXPECT_EQ(group("quaternion.json").order, 8);
}

TEST(CloseGroup, ClosedUnderProductsAndInverses) {
  CycloField f(4);
  auto g = group("binary_tetrahedral.json");
  std::set<std::string> keys;
  for (const auto& e : g.elements) keys.insert(e.key());
  std::string id = identity_matrix(f, 2).key();
  for (const auto& a : g.elements) {
    bool has_inverse = false;
    for (const auto& b : g.elements) {
      auto p = multiply(f, a, b);
      EXPECT_TRUE(keys.count(p.key()));
      has_inverse = has_inverse || p.key() == id;
    }
    EXPECT_TRUE(has_inverse);
  }
}

TEST(CloseGroup, Bound) {
  CycloField f(1);
  CycloMatrix shear{2, {f.scalar(1), f.scalar(1), f.zero(), f.scalar(1)}};
  try {
    close_group(f, {shear}, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Classes, Examples) {
  CycloField f(1);
  auto triv = conjugacy_classes(f, close_group(f, {identity_matrix(f, 2)}));
  ASSERT_EQ(triv.size(), 1u);
  EXPECT_EQ(triv[0].charpoly_poly(), Q({1, -2, 1}));

  CycloMatrix minus{2, {f.scalar(-1), f.zero(), f.zero(), f.scalar(-1)}};
  auto pm = conjugacy_classes(f, close_group(f, {minus}));
  EXPECT_EQ(charpoly_multiset(pm), (std::multiset<std::vector<Rational>>{{1, -2, 1}, {1, 2, 1}}));

  auto bt = group("binary_tetrahedral.json");
  EXPECT_EQ(bt.classes.size(), 7u);
  EXPECT_EQ(charpoly_multiset(bt.classes), (std::multiset<std::vector<Rational>>{
                                               {1, -2, 1}, {1, 2, 1}, {1, 0, 1}, {1, -1, 1}, {1, -1, 1}, {1, 1, 1}, {1, 1, 1}}));
  long total = 0;
  std::multiset<long> sizes;
  for (const auto& c : bt.classes) {
    total += c.size;
    sizes.insert(c.size);
    EXPECT_EQ(c.charpoly[0], 1);
    // SU2 with integer trace: 1 - tr q + q^2
    EXPECT_EQ(c.charpoly.size(), 3u);
    EXPECT_EQ(c.charpoly[2], 1);
  }
  EXPECT_EQ(total, 24);
  EXPECT_EQ(sizes, (std::multiset<long>{1, 1, 4, 4, 4, 4, 6}));
}

TEST(Classes, OrdersAndNaturalCharacter) {
  auto bt = group("binary_tetrahedral.json", Character::Natural);
  std::map<int, long> by_order;
  for (const auto& c : bt.classes) {
    by_order[c.order] += c.size;
    EXPECT_EQ(c.chi, -c.charpoly[1]);  // trace
  }
  EXPECT_EQ(by_order, (std::map<int, long>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}));
}

TEST(MolienSum, BinaryTetrahedralByClasses) {
  auto bt = group("binary_tetrahedral.json");
  RationalFn expect = RationalFn(kOne, Q({1, -2, 1})) + RationalFn(kOne, Q({1, 2, 1})) + RationalFn(kOne, Q({1, 0, 1})) +
                      RationalFn(HalfLaurent(Rational(2)), Q({1, -1, 1})) + RationalFn(HalfLaurent(Rational(2)), Q({1, 1, 1}));
  EXPECT_EQ(molien_sum(bt.classes, parse_weighting("by-classes")), expect);
  EXPECT_EQ(series_coeffs(molien_sum(bt.classes, parse_weighting("by-classes")), 1), (std::vector<Rational>{7}));
}

TEST(MolienSum, SmallGroups) {
  auto triv = materialize(parse_group_json(load("trivial_su2.json")));
  EXPECT_EQ(molien_sum(triv.classes, Weighting{}), RationalFn(kOne, Q({1, -2, 1})));
  auto pm = materialize(parse_group_json(load("plus_minus_identity.json")));
  EXPECT_EQ(molien_sum(pm.classes, Weighting{}), RationalFn(kOne, Q({1, -2, 1})) + RationalFn(kOne, Q({1, 2, 1})));
  // dimension 3 trivial group
  auto t3 = parse_group_json(nlohmann::json::parse(R"({"classes": [{"size": 1, "charpoly": [1, -3, 3, -1]}]})"));
  EXPECT_EQ(molien_sum(t3.classes, Weighting{}), RationalFn(kOne, Q({1, -3, 3, -1})));
}

TEST(MolienAverage, Examples) {
  auto pm = materialize(parse_group_json(load("plus_minus_identity.json")));
  RationalFn avg = molien_average(pm.classes);
  EXPECT_EQ(avg, RationalFn(Q({1, 0, 1}), Q({1, 0, -1}) * Q({1, 0, -1})));
  EXPECT_EQ(series_coeffs(avg, 5), (std::vector<Rational>{1, 0, 3, 0, 5}));
  auto bt = group("binary_tetrahedral.json");
  auto c = series_coeffs(molien_average(bt.classes), 40);
  for (const auto& x : c) EXPECT_TRUE(is_integer(x) && x >= 0);
  for (int d = 1; d < 6; ++d) EXPECT_EQ(c[static_cast<std::size_t>(d)], 0);
  EXPECT_EQ(c[6], 1);
  CycloField f(4);
  EXPECT_EQ(molien_average(f, bt.elements), molien_average(bt.classes));
}

TEST(MolienAverage, InvariantCountOracle) {
  // {+-I}: degree-d invariants are all monomials of even degree d, so d + 1 of them
  auto pm = materialize(parse_group_json(load("plus_minus_identity.json")));
  auto c = series_coeffs(molien_average(pm.classes), 30);
  for (int d = 0; d < 30; ++d) EXPECT_EQ(c[static_cast<std::size_t>(d)], d % 2 ? 0 : d + 1);
  // Q8: invariants x^2 y^2 and x^4 + y^4 in degree 4, x y (x^4 - y^4) in degree 6
  auto q8 = group("quaternion.json");
  auto m = series_coeffs(molien_average(q8.classes), 25);
  EXPECT_EQ(m[0], 1);
  EXPECT_EQ(m[4], 2);
  EXPECT_EQ(m[6], 1);
  for (std::size_t d : {1, 2, 3, 5, 7}) EXPECT_EQ(m[d], 0);
}

TEST(Weighting, Parsing) {
  EXPECT_EQ(parse_weighting("by-elements").kind, Weighting::ByElements);
  EXPECT_EQ(parse_weighting("by-classes").kind, Weighting::ByClasses);
  Weighting w = parse_weighting("custom=1,2/3,-1");
  EXPECT_EQ(w.custom, (std::vector<Rational>{1, Rational(2, 3), -1}));
  EXPECT_THROW(parse_weighting("custom="), Error);
  EXPECT_THROW(parse_weighting("by-size"), Error);
  auto pm = materialize(parse_group_json(load("plus_minus_identity.json")));
  EXPECT_THROW(molien_sum(pm.classes, w), Error);
  EXPECT_EQ(molien_sum(pm.classes, parse_weighting("custom=2,0")), RationalFn(HalfLaurent(Rational(2)), Q({1, -2, 1})));
}

TEST(GroupJson, Errors) {
  using nlohmann::json;
  EXPECT_THROW(parse_group_json(json::parse("[]")), Error);
  EXPECT_THROW(parse_group_json(json::parse(R"({"classes": [{"size": 1, "charpoly": [2, 1]}]})")), Error);
  EXPECT_THROW(parse_group_json(json::parse(R"({"classes": [{"size": 0, "charpoly": [1, 1]}]})")), Error);
  EXPECT_THROW(parse_group_json(json::parse(R"({"n": 2, "generators": [[[1, 0]]]})")), Error);
  EXPECT_THROW(parse_group_json(json::parse(R"({"n": 2, "generators": [[[1, 0], [0, "x"]]]})")), Error);
  EXPECT_THROW(materialize(parse_group_json(json::parse(R"({"n": 1, "generators": [[[2]]]})")), Character::Trivial, 100), Error);
}
