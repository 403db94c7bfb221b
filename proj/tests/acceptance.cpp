// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qtangle/cli.hpp"
#include "qtangle/qtangle.hpp"

using namespace qtangle;

namespace {

const HalfLaurent kOne(Rational(1));

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool c, const std::string& what) {
    if (!c && ok) detail = what;
    ok = ok && c;
  }
};

std::string data(const std::string& name) { return std::string(QT_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rational> series_of(const RationalFn& r, std::size_t n) { return series_coeffs(r, n); }

std::vector<Rational> as_rationals(const std::vector<Integer>& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// Breadth-first enumeration of a free product of involutions on normal-form words.
std::vector<Rational> word_bfs(int rank, int max_len) {
  std::vector<Rational> counts{1};
  std::vector<std::string> frontier{""};
  std::set<std::string> seen{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier)
      for (int s = 0; s < rank; ++s) {
        std::string v = w;
        char c = static_cast<char>('a' + s);
        if (!v.empty() && v.back() == c) v.pop_back();
        else v.push_back(c);
        if (seen.insert(v).second) next.push_back(v);
      }
    counts.emplace_back(static_cast<long>(next.size()));
    frontier = std::move(next);
  }
  return counts;
}

Outcome criterion1() {
  Outcome o;
  RationalFn dinf = steinberg_growth(named_coxeter("I2(inf)")).value;
  o.require(dinf == RationalFn(kOne + q_pow(1), kOne - q_pow(1)), "W(I2(inf)) = (1+q)/(1-q)");
  o.require(series_of(dinf, 40) == word_bfs(2, 39), "infinite dihedral against word BFS");
  RationalFn f3 = steinberg_growth(named_coxeter("free(3)")).value;
  o.require(f3 == RationalFn(kOne + q_pow(1), kOne - q_pow(1, 2)), "W(free(3)) = (1+q)/(1-2q)");
  auto c = series_of(f3, 40);
  auto bfs = word_bfs(3, 14);
  o.require(std::equal(bfs.begin(), bfs.end(), c.begin()), "free(3) against word BFS up to length 14");
  for (std::size_t n = 1; n < 40; ++n) o.require(c[n] == Rational(3) * Rational(Integer(1) << (n - 1)), "free(3) coefficient 3*2^(n-1)");
  o.require(as_rationals(bfs_length_census(named_coxeter("free(3)"), Realization::FreeProduct, 39)) == c, "free(3) census");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3", "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}) {
    CoxeterMatrix m = named_coxeter(name);
    auto type = classify_parabolic(m, full_mask(m));
    o.require(type.has_value(), std::string(name) + " classified finite");
    if (!type) continue;
    HalfLaurent fg = finite_growth(*type);
    RationalFn st = steinberg_growth(m).value;
    o.require(st == RationalFn(fg), std::string(name) + ": Steinberg = product formula");
    auto census = as_rationals(bfs_length_census(m, Realization::Auto, fg.high() / 2));
    std::vector<Rational> pc;
    for (int e = 0; e <= fg.high() / 2; ++e) pc.push_back(fg.coeff(2 * e));
    o.require(census == pc, std::string(name) + ": census = product formula");
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::ifstream in(data("binary_tetrahedral.json"));
  auto classes = materialize(parse_group_json(nlohmann::json::parse(in))).classes;
  auto Q = [](std::initializer_list<int> c) { return from_q_coeffs(c); };
  RationalFn displayed = RationalFn(kOne, Q({1, -2, 1})) + RationalFn(kOne, Q({1, 2, 1})) + RationalFn(kOne, Q({1, 0, 1})) +
                         RationalFn(HalfLaurent(Rational(2)), Q({1, -1, 1})) + RationalFn(HalfLaurent(Rational(2)), Q({1, 1, 1}));
  o.require(molien_sum(classes, parse_weighting("by-classes")) == displayed, "class-weighted Molien sum");
  auto c = build_prop4(classes, 2, parse_weighting("by-classes"));
  o.require(c.verified, "prop4 certificate verified");
  std::multiset<std::pair<long, std::vector<Rational>>> got, want{{1, {4, 1}}, {1, {0, 1}}, {1, {2, 1}}, {2, {3, 1}}, {2, {1, 1}}};
  for (const auto& t : c.terms) {
    o.require(t.z.inverted && t.z.delta == 1, "terms of the form 1/(z b(z^2))");
    got.insert({static_cast<long>(t.coeff), t.z.b});
  }
  o.require(got == want, "five terms 1/z(z^2+4), 1/z(z^2), 1/z(z^2+2), 2/z(z^2+3), 2/z(z^2+1)");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const char* s : {"g=2", "g=0; a=2,3,7", "g=1; a=2,2"}) {
    try {
      o.require(prop2_expand(parse_signature(s)).verified, s);
    } catch (const Error& e) {
      o.require(false, std::string(s) + ": " + e.what());
    }
  }
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    Signature s;
    s.g = std::uniform_int_distribution<int>(0, 5)(rng);
    int r = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int k = 0; k < r; ++k) s.a.push_back(std::uniform_int_distribution<int>(2, 12)(rng));
    std::sort(s.a.begin(), s.a.end());
    o.require(prop2_compute(s).verified, "fuzz " + s.to_text());
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& name : cli::prop3_catalog())
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      std::string tag = name + " " + to_string(s);
      try {
        auto c = build_prop3(named_coxeter(name), s);
        o.require(c.verified, tag);
        for (const auto& t : c.terms)
          for (const auto& b : t.z.b) o.require(is_integer(b), tag + " integer b");
      } catch (const Error& e) {
        o.require(false, tag + ": " + e.what());
      }
    }
  std::vector<std::string> args{"qtangle", "certify", "catalog"};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  o.require(cli::run(static_cast<int>(argv.size()), argv.data(), out, err) == 0, "catalog exit code");
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::string> found;
  for (const auto& [type, file] : {std::pair{"E6", "binary_tetrahedral.json"}, std::pair{"D4", "quaternion.json"}}) {
    std::ifstream in(data(file));
    auto classes = materialize(parse_group_json(nlohmann::json::parse(in))).classes;
    bool any = false;
    for (const auto& m : match_klein_molien(parse_dynkin_type(type), classes, 40))
      if (m.matches) {
        any = true;
        found.push_back(std::string(type) + ": " + m.convention + " at " + m.grading);
      }
    o.require(any, std::string(type) + " matches no Molien normalization");
  }
  if (o.ok)
    for (std::size_t i = 0; i < found.size(); ++i) o.detail += (i ? "; " : "") + found[i];
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    std::string e = random_twist_expression(rng, 16);
    TangleValue v = evaluate_tangle(e);
    o.require(v.diagram && v.diagram->crossing_count() <= 16, e + " within 16 crossings");
    if (v.diagram) o.require(qfraction_of_diagram(*v.diagram).equal_mod_units(v.fraction), e);
  }
  for (const auto& [file, det] : {std::pair{"trefoil.pd", 3}, std::pair{"figure_eight.pd", 5}, std::pair{"torus_2_5.pd", 5}, std::pair{"torus_2_7.pd", 7}})
    o.require(determinant(parse_pd(slurp(data(file)))) == det, std::string(file) + " determinant");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int i = 0; i < 500; ++i) {
    int d = std::uniform_int_distribution<int>(0, 40)(rng), sign = d % 2 ? -1 : 1;
    std::vector<Rational> c(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d / 2; ++k) {
      int v = coef(rng);
      c[static_cast<std::size_t>(k)] = v;
      c[static_cast<std::size_t>(d - k)] = sign * v;
    }
    c[0] = 1;
    c[static_cast<std::size_t>(d)] = sign;
    HalfLaurent p = from_q_coeffs(c, std::uniform_int_distribution<int>(-5, 5)(rng));
    Centered n = normalize_palindromic(p);
    o.require(q_inverted(n.centered) == n.centered * Rational(n.sign) && n.sign == sign, "sign of " + to_string(p));
    ZPolyForm z = to_z_form(RationalFn(n.centered));
    o.require(z.expand() == RationalFn(n.centered), "round trip of " + to_string(p));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto names = cli::prop3_catalog();
  for (const char* extra : {"A4", "D4", "E6", "E7", "E8", "F4", "H4", "free(4)", "rac(5)"}) names.push_back(extra);
  for (const auto& name : names) {
    CoxeterMatrix m = named_coxeter(name);
    RationalFn w = steinberg_growth(m).value;
    Rational chi = euler_characteristic(m);
    Rational num1 = evaluate_at_one(w.num()), den1 = evaluate_at_one(w.den());
    if (den1 == 0) {
      o.require(chi == 0, name + ": chi = 0 at a pole of W");
    } else {
      o.require(num1 != 0 && chi == den1 / num1, name + ": chi = 1/W(1)");
    }
  }
  o.require(euler_characteristic(named_coxeter("tri(2,3,7)")) == Rational(-1, 84), "chi(2,3,7) = -1/84");
  o.require(euler_characteristic(named_coxeter("free(3)")) == Rational(-1, 2), "chi(free(3)) = -1/2");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit_ms;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "Steinberg growth against word enumeration", 5000, criterion1},
      {2, "finite types: Steinberg, product formula and census agree", 10000, criterion2},
      {3, "binary tetrahedral Molien sum and its five building blocks", 0, criterion3},
      {4, "Fuchsian expansion: fixed signatures and 50-case fuzz", 10000, criterion4},
      {5, "Coxeter certificates for the catalog, both signs", 0, criterion5},
      {6, "Klein series against Molien normalizations", 0, criterion6},
      {7, "tangle diagrams against fraction sums; knot determinants", 60000, criterion7},
      {8, "z-form round trip and symmetry sign", 0, criterion8},
      {9, "Euler characteristic against 1/W(1)", 0, criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_ms > 0 && ms > c.limit_ms) o.require(false, "time limit " + std::to_string(static_cast<int>(c.limit_ms)) + " ms exceeded");
    failed += !o.ok;
    std::cout << "criterion " << c.id << " " << (o.ok ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(1) << ms << " ms) "
              << c.what << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
  }
  return failed ? 1 : 0;
}
