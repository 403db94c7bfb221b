#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtangle/coxeter.hpp"
#include "qtangle/cyclotomic.hpp"
#include "qtangle/molien.hpp"
#include "qtangle/series.hpp"
#include "qtangle/singularities.hpp"
#include "qtangle/tangle_fraction.hpp"
#include "qtangle/zform.hpp"

namespace qtangle {

enum class Sign { Plus, Minus };

inline Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  fail(ErrorKind::Parse, "sign must be + or -");
}
inline const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

struct CertificateTerm {
  enum class Kind { ZForm, Torus, Fraction } kind = Kind::ZForm;
  Integer coeff = 1;
  ZPolyForm z;                            // Kind::ZForm
  int torus_a = 0;                        // Kind::Torus
  std::optional<TangleFraction> fraction; // Kind::Fraction
  std::string note;

  std::string form() const {
    switch (kind) {
      case Kind::Torus: return "torus";
      case Kind::Fraction: return "fraction";
      case Kind::ZForm: break;
    }
    if (z.delta) return z.inverted ? "1/zB" : "zB";
    return z.inverted ? "1/B" : "B";
  }

  bool building_block() const { return kind != Kind::ZForm || (z.delta == 1 && z.integer_certified()); }

  RationalFn value() const {
    switch (kind) {
      case Kind::ZForm: return z.expand();
      case Kind::Torus: return torus_quotient_term(torus_a).value();
      case Kind::Fraction: return fraction->value();
    }
    return {};
  }

  /// The term as a tangle fraction, built only from tangle-level constructions.
  TangleFraction tangle() const {
    switch (kind) {
      case Kind::Torus: return torus_quotient_term(torus_a);
      case Kind::Fraction: return *fraction;
      case Kind::ZForm: break;
    }
    if (z.delta == 1 && z.integer_certified()) return make_zpoly_tangle(z.b, z.inverted);
    HalfLaurent body = z.body();
    return z.inverted ? TangleFraction(HalfLaurent(Rational(1)), body) : TangleFraction(body, HalfLaurent(Rational(1)));
  }
};

struct TangleSumCertificate {
  std::string kind;
  RationalFn target;
  std::vector<CertificateTerm> terms;
  bool modulo_units = false;   // single-fraction certificates compare up to ±t^k
  bool arithmetic_ok = false;  // sum of term values equals the target
  bool tangle_ok = false;      // same sum recomputed by tangle_sum over building blocks
  bool integral_ok = false;    // every z-form term has integer b and odd z-degree
  bool verified = false;
  RationalFn residual;
  std::vector<std::string> notes;
};

/// Fills the verification fields of c.
inline void verify(TangleSumCertificate& c) {
  RationalFn sum;
  c.integral_ok = true;
  for (const auto& t : c.terms) {
    sum += t.value() * RationalFn(Rational(t.coeff));
    c.integral_ok = c.integral_ok && t.building_block();
  }
  c.residual = c.target - sum;
  c.arithmetic_ok = c.modulo_units ? sum.equal_up_to_unit(c.target) : c.residual.is_zero();
  if (c.modulo_units) c.residual = RationalFn();
  TangleFraction acc(HalfLaurent{}, HalfLaurent(Rational(1)));
  for (const auto& t : c.terms) acc = tangle_sum(acc, tangle_multiple(t.tangle(), static_cast<long>(t.coeff)));
  TangleFraction want = fraction_of(c.target);
  c.tangle_ok = c.modulo_units ? acc.equal_mod_units(want) : acc.equal_value(want);
  c.verified = c.arithmetic_ok && c.tangle_ok && c.integral_ok;
}

inline TangleSumCertificate require_verified(TangleSumCertificate c) {
  if (!c.verified)
    fail(ErrorKind::VerificationFailed, c.kind + " certificate failed: residual " + to_string(c.residual) +
                                            (c.integral_ok ? "" : "; some term is not an integer building block"));
  return c;
}

/// Adds coeff * form, merging with an equal earlier term; b is normalized to a positive leading coefficient.
inline void add_zform_term(std::vector<CertificateTerm>& terms, Integer coeff, ZPolyForm z, const std::string& note) {
  if (!z.b.empty() && z.b.back() < 0) {
    for (auto& x : z.b) x = -x;
    coeff = -coeff;
  }
  for (auto& t : terms)
    if (t.kind == CertificateTerm::Kind::ZForm && t.z == z) {
      t.coeff += coeff;
      if (!note.empty()) t.note += (t.note.empty() ? "" : "; ") + note;
      return;
    }
  CertificateTerm t;
  t.coeff = coeff;
  t.z = std::move(z);
  t.note = note;
  terms.push_back(std::move(t));
}

inline void drop_zero_terms(std::vector<CertificateTerm>& terms) {
  std::vector<CertificateTerm> keep;
  for (auto& t : terms)
    if (t.coeff != 0) keep.push_back(std::move(t));
  terms = std::move(keep);
}

// ---------------------------------------------------------------------------
// Coxeter groups

struct FPolynomial {
  Sign sign = Sign::Plus;
  HalfLaurent value;
  std::vector<int> degree_set;  // deg W_P over finite P with |W_P| > 1, with multiplicity
  int epsilon = 0;
  int degree() const { return value.high() / 2; }
};

inline std::vector<int> parabolic_degree_set(const CoxeterMatrix& m) {
  std::vector<int> d;
  for (const auto& fp : finite_parabolics(m))
    if (fp.subset != 0) d.push_back(fp.type.growth_degree());
  std::sort(d.begin(), d.end());
  return d;
}

inline HalfLaurent q_power_pm(int d, Sign s) {
  return q_pow(d) + HalfLaurent(Rational(s == Sign::Plus ? 1 : -1));
}

/// Divisibility by every q^d ± 1 and palindromic quotients; fills epsilon from the degree parity.
inline FPolynomial validate_F(const CoxeterMatrix& m, Sign s, HalfLaurent value) {
  FPolynomial f;
  f.sign = s;
  f.value = std::move(value);
  f.degree_set = parabolic_degree_set(m);
  if (f.degree_set.empty()) fail(ErrorKind::InvalidInput, "no finite parabolic subgroup with |W_P| > 1");
  if (f.value.is_zero() || !has_integer_coeffs(f.value) || !has_integral_q_exponents(f.value) || f.value.low() < 0)
    fail(ErrorKind::InvalidInput, "F must be a nonzero integer polynomial in q");
  for (int d : f.degree_set) {
    auto qt = divide_exact(f.value, q_power_pm(d, s));
    if (!qt) fail(ErrorKind::InvalidInput, "F is not divisible by q^" + std::to_string(d) + (s == Sign::Plus ? " + 1" : " - 1"));
    if (!is_palindromic_up_to_sign(*qt)) fail(ErrorKind::NotPalindromic, "quotient F/(q^" + std::to_string(d) + " ± 1) is not palindromic");
  }
  // the parity rule: 0 for odd degree, 1 for even degree
  f.epsilon = f.degree() % 2 == 0 ? 1 : 0;
  return f;
}

/// Minimal F: product of the cyclotomic factors of all q^d ± 1.
inline FPolynomial build_F(const CoxeterMatrix& m, Sign s) {
  std::set<int> idx;
  for (int d : parabolic_degree_set(m)) {
    auto k = s == Sign::Plus ? cyclotomic_indices_plus(d) : cyclotomic_indices_minus(d);
    idx.insert(k.begin(), k.end());
  }
  if (idx.empty()) fail(ErrorKind::InvalidInput, "no finite parabolic subgroup with |W_P| > 1");
  return validate_F(m, s, cyclotomic_product(idx));
}

enum class EpsilonPlacement { Denominator, Numerator };

inline RationalFn z_power_factor(int epsilon, EpsilonPlacement p) {
  if (epsilon == 0) return RationalFn(1);
  return p == EpsilonPlacement::Numerator ? RationalFn(z_var()) : RationalFn(HalfLaurent(Rational(1)), z_var());
}

/// W(-q^{-1}) for a rational function of q.
inline RationalFn negated_inverse(const RationalFn& w) { return w.q_negated().q_inverted(); }

inline RationalFn prop3_target(const RationalFn& growth, const FPolynomial& f, EpsilonPlacement p) {
  RationalFn a = negated_inverse(growth).inverse(), b = growth.q_negated().inverse();
  RationalFn bracket = f.sign == Sign::Plus ? a + b : a - b;
  return z_power_factor(f.epsilon, p) * RationalFn(t_pow(f.degree()), q_negated(f.value)) * bracket;
}

inline TangleSumCertificate build_prop3(const CoxeterMatrix& m, Sign s, EpsilonPlacement placement = EpsilonPlacement::Denominator,
                                        std::optional<HalfLaurent> user_F = std::nullopt) {
  FPolynomial f = user_F ? validate_F(m, s, *user_F) : build_F(m, s);
  TangleSumCertificate c;
  c.kind = std::string("prop3") + to_string(s);
  RationalFn growth = steinberg_growth(m).value;
  c.target = prop3_target(growth, f, placement);
  c.notes.push_back("F = " + to_string(f.value) + ", deg F = " + std::to_string(f.degree()) + ", epsilon = " +
                    std::to_string(f.epsilon) + (placement == EpsilonPlacement::Denominator ? " (z^epsilon divides)" : " (z^epsilon multiplies)"));
  c.notes.push_back("W(q) = " + to_string(growth));
  const RationalFn zf = z_power_factor(f.epsilon, placement);
  const HalfLaurent t_deg = t_pow(f.degree());
  bool all_converted = true;
  for (const auto& fp : finite_parabolics(m)) {
    int d = fp.type.growth_degree();
    Integer coeff;
    RationalFn value;
    if (fp.subset == 0) {
      if (s == Sign::Minus) continue;
      coeff = 2;
      value = zf * RationalFn(t_deg, q_negated(f.value));
    } else {
      HalfLaurent quotient = *divide_exact(f.value, q_power_pm(d, s));
      HalfLaurent wp = finite_growth(fp.type);
      coeff = (popcount(fp.subset) % 2 ? -1 : 1) * (s == Sign::Plus ? 1 : -1);
      value = zf * RationalFn(t_deg, q_negated(quotient * wp));
    }
    std::string label = fp.subset == 0 ? "P = {}" : "P = " + fp.type.name() + " (mask " + std::to_string(fp.subset) + ")";
    try {
      ZPolyForm z = to_z_form(value);
      if (!z.integer_certified() || z.delta != 1 || !z.inverted) {
        all_converted = false;
        c.notes.push_back(label + ": term " + to_string(z) + " is not of the form 1/(z b(z^2)) with integer b");
      }
      add_zform_term(c.terms, coeff, z, "");
    } catch (const Error& e) {
      all_converted = false;
      c.notes.push_back(label + ": " + e.what());
      CertificateTerm t;
      t.kind = CertificateTerm::Kind::Fraction;
      t.coeff = coeff;
      t.fraction = fraction_of(value);
      t.note = label + " (not z-expressible)";
      c.terms.push_back(std::move(t));
    }
  }
  drop_zero_terms(c.terms);
  verify(c);
  if (!all_converted) {
    c.integral_ok = false;
    c.verified = false;
  }
  if (auto one = evaluate_at_one(growth.inverse())) c.notes.push_back("1/W(1) = " + to_string(*one));
  if (auto g = evaluate_at_minus_one(c.target)) c.notes.push_back("target at q = -1: " + to_string(*g));
  return c;
}

inline TangleSumCertificate prop3_certificate(const CoxeterMatrix& m, Sign s) { return require_verified(build_prop3(m, s)); }

// ---------------------------------------------------------------------------
// Klein singularities

inline TangleSumCertificate build_prop1(const DynkinType& d) {
  KleinSeries k = klein_poincare(d);
  TangleSumCertificate c;
  c.kind = "prop1";
  c.target = k.value;
  c.modulo_units = true;
  Centered nf = normalize_palindromic(k.finite_poly), na = normalize_palindromic(k.affine_poly);
  CertificateTerm t;
  t.kind = CertificateTerm::Kind::Fraction;
  t.fraction = TangleFraction(nf.centered, na.centered);
  t.note = k.note;
  c.terms.push_back(std::move(t));
  c.notes.push_back(k.note);
  // Coxeter polynomials evaluated at -q are the Alexander polynomials of the corresponding slalom links
  for (const auto& [name, poly] : {std::pair{"finite", k.finite_poly}, std::pair{"affine", k.affine_poly}}) {
    try {
      ZPolyForm z = laurent_to_zpoly(normalize_palindromic(q_negated(poly)).centered);
      c.notes.push_back(std::string(name) + " chi(-q) centered = " + to_string(z) + (z.integer_certified() ? "" : " (non-integer)"));
    } catch (const Error& e) {
      c.notes.push_back(std::string(name) + " chi(-q): " + e.what());
    }
  }
  verify(c);
  return c;
}

inline TangleSumCertificate prop1_certificate(const DynkinType& d) { return require_verified(build_prop1(d)); }

// ---------------------------------------------------------------------------
// Fuchsian singularities

inline TangleSumCertificate build_prop2(const Signature& s) {
  Prop2Expansion e = prop2_compute(s);
  TangleSumCertificate c;
  c.kind = "prop2";
  c.target = e.target;
  add_zform_term(c.terms, 1, e.poly_term, "z(z^2 - g + 5)");
  for (int a : s.a) {
    CertificateTerm t;
    t.kind = CertificateTerm::Kind::Torus;
    t.torus_a = a;
    t.note = "Delta T(2," + std::to_string(a - 1) + ") / Delta T(2," + std::to_string(a) + ")";
    c.terms.push_back(std::move(t));
  }
  c.notes.push_back("P(q) = " + to_string(fuchsian_poincare(s)));
  c.notes.push_back(std::string("sum with the Coxeter-polynomial quotients [a-1]/[a] in place of the torus quotients ") +
                    (e.display_form_holds ? "also matches" : "does not match"));
  verify(c);
  return c;
}

// ---------------------------------------------------------------------------
// Molien series

/// q^{n/2} G(-q)/z for even n, q^{(n-1)/2}(1+q) G(-q)/z for odd n.
inline RationalFn prop4_multiplier(int n) {
  HalfLaurent m = n % 2 == 0 ? t_pow(n) : t_pow(n - 1) * (HalfLaurent(Rational(1)) + q_pow(1));
  return RationalFn(m, z_var());
}

inline TangleSumCertificate build_prop4(const std::vector<ClassData>& classes, int n, const Weighting& w) {
  TangleSumCertificate c;
  c.kind = "prop4";
  for (const auto& cl : classes) {
    if (!is_integer(cl.chi)) fail(ErrorKind::NonIntegerCharPoly, "character value of class " + cl.label + " is not an integer");
    for (const auto& x : cl.charpoly)
      if (!is_integer(x)) fail(ErrorKind::NonIntegerCharPoly, "class " + cl.label + " has non-integer det(1 - qg)");
  }
  RationalFn g = molien_sum(classes, w);
  RationalFn mult = prop4_multiplier(n);
  c.target = mult * g.q_negated();
  c.notes.push_back("G(q) = " + to_string(g) + " (" + w.name() + ")");
  auto wt = class_weights(classes, w);
  bool all_converted = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Rational k = wt[i] * classes[i].chi;
    if (k == 0) continue;
    RationalFn value = mult * RationalFn(HalfLaurent(Rational(1)), q_negated(classes[i].charpoly_poly()));
    std::string label = classes[i].label;
    if (!is_integer(k)) {
      all_converted = false;
      c.notes.push_back(label + ": weight times character " + to_string(k) + " is not an integer");
    }
    try {
      ZPolyForm z = to_z_form(value);
      if (!z.integer_certified() || z.delta != 1 || !z.inverted) {
        all_converted = false;
        c.notes.push_back(label + ": term " + to_string(z) + " is not of the form 1/(z b(z^2)) with integer b");
      }
      if (is_integer(k))
        add_zform_term(c.terms, numerator_of(k), z, label);
    } catch (const Error& e) {
      all_converted = false;
      c.notes.push_back(label + ": " + e.what());
    }
  }
  drop_zero_terms(c.terms);
  verify(c);
  if (!all_converted) {
    c.integral_ok = false;
    c.verified = false;
  }
  return c;
}

inline TangleSumCertificate prop4_certificate(const std::vector<ClassData>& classes, int n, const Weighting& w) {
  return require_verified(build_prop4(classes, n, w));
}

// ---------------------------------------------------------------------------
// Klein series against Molien series

struct ConventionMatch {
  std::string convention;  // class-sum, element-sum or averaged
  std::string grading;     // "q" or "q^2" (Klein series stretched to invariant degree)
  bool matches = false;
};

/// Compares the first `order` coefficients of every normalization with the Klein series.
inline std::vector<ConventionMatch> match_klein_molien(const DynkinType& d, const std::vector<ClassData>& classes, std::size_t order) {
  RationalFn k = klein_poincare(d).value;
  std::vector<std::pair<std::string, RationalFn>> forms{{"class-sum", molien_sum(classes, Weighting{Weighting::ByClasses, {}})},
                                                        {"element-sum", molien_sum(classes, Weighting{})},
                                                        {"averaged", molien_average(classes)}};
  std::vector<std::pair<std::string, std::vector<Rational>>> klein{{"q", series_coeffs(k, order)}, {"q^2", series_coeffs(k.q_stretched(2), order)}};
  std::vector<ConventionMatch> out;
  for (const auto& [name, m] : forms) {
    auto mc = series_coeffs(m, order);
    for (const auto& [grading, kc] : klein) out.push_back({name, grading, mc == kc});
  }
  return out;
}

}  // namespace qtangle
