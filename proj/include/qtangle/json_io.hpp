#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtangle/certify.hpp"
#include "qtangle/coxeter.hpp"
#include "qtangle/rational_fn.hpp"

namespace qtangle {

using nlohmann::json;

/// Integers beyond 64 bits are written as strings.
inline json integer_to_json(const Integer& i) {
  if (i >= Integer(INT64_MIN) && i <= Integer(INT64_MAX)) return json(static_cast<long long>(i));
  return json(i.str());
}

/// [[exp_num, exp_den, coeff_num, coeff_den], ...] with exponents in q.
inline json poly_to_json(const HalfLaurent& p) {
  json out = json::array();
  p.for_each_term([&](int k, const Rational& c) {
    int num = k % 2 == 0 ? k / 2 : k, den = k % 2 == 0 ? 1 : 2;
    out.push_back({num, den, integer_to_json(numerator_of(c)), integer_to_json(denominator_of(c))});
  });
  return out;
}

inline Integer json_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (is_integer(r)) return numerator_of(r);
  }
  fail(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

inline HalfLaurent poly_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "polynomial must be a JSON array");
  HalfLaurent p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 4) fail(ErrorKind::Parse, "polynomial term must be [exp_num, exp_den, coeff_num, coeff_den]");
    Integer en = json_integer(term[0]), ed = json_integer(term[1]), cn = json_integer(term[2]), cd = json_integer(term[3]);
    if (ed != 1 && ed != 2) fail(ErrorKind::Parse, "exponent denominator must be 1 or 2");
    if (cd == 0) fail(ErrorKind::Parse, "zero coefficient denominator");
    int k = static_cast<int>(to_int64(ed == 1 ? Integer(en * 2) : en));
    p += t_pow(k, Rational(cn) / Rational(cd));
  }
  return p;
}

inline json rational_fn_to_json(const RationalFn& r) {
  return {{"text", to_string(r)}, {"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

inline RationalFn rational_fn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num")) fail(ErrorKind::Parse, "rational function needs \"num\"");
  HalfLaurent den = j.contains("den") ? poly_from_json(j.at("den")) : HalfLaurent(Rational(1));
  return RationalFn(poly_from_json(j.at("num")), den);
}

inline json coeffs_to_json(const std::vector<Rational>& c) {
  json out = json::array();
  for (const auto& x : c) {
    if (is_integer(x)) out.push_back(integer_to_json(numerator_of(x)));
    else out.push_back(to_string(x));
  }
  return out;
}

inline json coxeter_to_json(const CoxeterMatrix& m) { return {{"size", m.rank()}, {"m", m.entries()}}; }

inline CoxeterMatrix coxeter_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m")) fail(ErrorKind::Parse, "Coxeter file needs \"m\"");
  std::vector<std::vector<int>> m;
  try {
    m = j.at("m").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad Coxeter matrix: ") + e.what());
  }
  if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(m.size()))
    fail(ErrorKind::Parse, "\"size\" does not match the matrix");
  return CoxeterMatrix(std::move(m));
}

inline json fraction_to_json(const TangleFraction& f) {
  return {{"text", to_string(f)}, {"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline json term_to_json(const CertificateTerm& t) {
  json j{{"coeff", integer_to_json(t.coeff)}, {"form", t.form()}};
  switch (t.kind) {
    case CertificateTerm::Kind::ZForm: j["b"] = coeffs_to_json(t.z.b); break;
    case CertificateTerm::Kind::Torus: j["a"] = t.torus_a; break;
    case CertificateTerm::Kind::Fraction: j["fraction"] = fraction_to_json(*t.fraction); break;
  }
  j["value"] = to_string(t.value());
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

inline json certificate_to_json(const TangleSumCertificate& c) {
  json terms = json::array();
  for (const auto& t : c.terms) terms.push_back(term_to_json(t));
  return {{"kind", c.kind},
          {"target", to_string(c.target)},
          {"target_fn", rational_fn_to_json(c.target)},
          {"terms", terms},
          {"modulo_units", c.modulo_units},
          {"arithmetic_ok", c.arithmetic_ok},
          {"tangle_ok", c.tangle_ok},
          {"integral_ok", c.integral_ok},
          {"verified", c.verified},
          {"residual", to_string(c.residual)},
          {"notes", c.notes}};
}

/// Reads back the certificate schema; the verification fields are recomputed.
inline TangleSumCertificate certificate_from_json(const json& j) {
  TangleSumCertificate c;
  c.kind = j.value("kind", std::string("certificate"));
  c.target = j.contains("target_fn") ? rational_fn_from_json(j.at("target_fn")) : parse_rational_fn(j.at("target").get<std::string>());
  c.modulo_units = j.value("modulo_units", false);
  for (const auto& tj : j.at("terms")) {
    CertificateTerm t;
    t.coeff = json_integer(tj.at("coeff"));
    std::string form = tj.at("form").get<std::string>();
    if (form == "torus") {
      t.kind = CertificateTerm::Kind::Torus;
      t.torus_a = tj.at("a").get<int>();
    } else if (form == "fraction") {
      t.kind = CertificateTerm::Kind::Fraction;
      const auto& fj = tj.at("fraction");
      t.fraction = TangleFraction(poly_from_json(fj.at("num")), poly_from_json(fj.at("den")));
    } else if (form == "1/zB" || form == "zB" || form == "B" || form == "1/B") {
      t.z.delta = form.find('z') != std::string::npos ? 1 : 0;
      t.z.inverted = form[0] == '1';
      for (const auto& b : tj.at("b")) t.z.b.push_back(b.is_string() ? parse_rational(b.get<std::string>()) : Rational(json_integer(b)));
    } else {
      fail(ErrorKind::Parse, "unknown term form '" + form + "'");
    }
    t.note = tj.value("note", std::string());
    c.terms.push_back(std::move(t));
  }
  if (j.contains("notes")) c.notes = j.at("notes").get<std::vector<std::string>>();
  verify(c);
  return c;
}

}  // namespace qtangle
