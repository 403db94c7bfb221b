#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtangle/catalog.hpp"
#include "qtangle/census.hpp"
#include "qtangle/certify.hpp"
#include "qtangle/diagram.hpp"
#include "qtangle/json_io.hpp"
#include "qtangle/series.hpp"
#include "qtangle/tangle_dsl.hpp"

namespace qtangle::cli {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::optional<bool> verified;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, what + ": " + e.what());
  }
}

inline std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << h;
  return o.str();
}

/// A file holding JSON or the compact text form, or the text form itself.
inline CoxeterMatrix load_coxeter(const std::string& spec) {
  std::string text = std::filesystem::exists(spec) ? read_file(spec) : spec;
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) fail(ErrorKind::InvalidInput, "empty Coxeter input '" + spec + "'");
  if (text[i] == '{') return coxeter_from_json(parse_json_text(text, spec));
  if (text.find(':') == std::string::npos) fail(ErrorKind::InvalidInput, "cannot read Coxeter matrix '" + spec + "'");
  return parse_coxeter_text(text);
}

inline json series_json(const RationalFn& r, int n) {
  return coeffs_to_json(series_coeffs(r, static_cast<std::size_t>(n)));
}

inline void render(const json& j, std::ostream& out, int indent);

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline bool all_scalars(const json& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

inline void render(const json& j, std::ostream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    if (!v.is_structured()) {
      out << pad << key << ": " << scalar_text(v) << "\n";
    } else if (v.is_array() && all_scalars(v)) {
      out << pad << key << ":";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : " ") << scalar_text(v[i]);
      out << "\n";
    } else if (v.is_array()) {
      out << pad << key << ":\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render(item, out, indent + 4);
        } else {
          out << pad << "  - " << (item.is_array() ? item.dump() : scalar_text(item)) << "\n";
        }
      }
    } else {
      out << pad << key << ":\n";
      render(v, out, indent + 2);
    }
  }
}

inline void emit(const Report& r, bool as_json, double ms, std::ostream& out) {
  json j{{"command", r.command}, {"inputs", r.inputs}, {"inputs_digest", digest(r.inputs.dump())}, {"results", r.results}};
  if (r.verified) j["verified"] = *r.verified;
  j["timing_ms"] = ms;
  if (as_json) {
    out << j.dump(2) << "\n";
    return;
  }
  out << r.command << "\n";
  render(j["results"], out, 2);
  if (r.verified) out << "verified: " << (*r.verified ? "true" : "false") << "\n";
}

// ---------------------------------------------------------------------------
// subcommand bodies

struct CoxeterArgs {
  std::string coxeter, name;
  CoxeterMatrix load(Report& r) const {
    if (coxeter.empty() == name.empty()) fail(ErrorKind::InvalidInput, "give exactly one of --coxeter FILE and --name NAME");
    CoxeterMatrix m = name.empty() ? load_coxeter(coxeter) : named_coxeter(name);
    r.inputs["coxeter"] = to_text(m);
    if (!name.empty()) r.inputs["name"] = name;
    return m;
  }
};

inline json reciprocity_json(const std::optional<int>& s) {
  if (!s) return "none";
  return *s > 0 ? "W(1/q) = W(q)" : "W(1/q) = -W(q)";
}

inline void do_growth(Report& r, const CoxeterArgs& a, int series, bool census) {
  CoxeterMatrix m = a.load(r);
  r.inputs["series"] = series;
  GrowthFn g = steinberg_growth(m);
  r.results["growth"] = to_string(g.value);
  r.results["growth_fn"] = rational_fn_to_json(g.value);
  r.results["reciprocity"] = reciprocity_json(g.reciprocity);
  auto coeffs = series_coeffs(g.value, static_cast<std::size_t>(series));
  r.results["coefficients"] = coeffs_to_json(coeffs);
  if (auto t = classify_parabolic(m, full_mask(m))) {
    r.results["finite_type"] = t->name();
    r.results["order"] = integer_to_json(t->order());
    r.results["finite_growth"] = to_string(finite_growth(*t));
  }
  if (census) {
    auto c = bfs_length_census(m, Realization::Auto, series - 1);
    std::vector<Rational> cr(c.begin(), c.end());
    r.results["census"] = coeffs_to_json(cr);
    r.verified = cr == coeffs;
  }
}

inline void do_euler(Report& r, const CoxeterArgs& a) {
  CoxeterMatrix m = a.load(r);
  GrowthFn g = steinberg_growth(m);
  Rational chi = euler_characteristic(m), inv = inverse_value_at_one(g.value);
  r.results["euler_characteristic"] = to_string(chi);
  r.results["inverse_growth_at_1"] = to_string(inv);
  r.results["pole_at_1"] = !evaluate_at_one(g.value).has_value();
  r.verified = chi == inv;
}

inline void do_reciprocity(Report& r, const CoxeterArgs& a) {
  CoxeterMatrix m = a.load(r);
  GrowthFn g = steinberg_growth(m);
  r.results["growth"] = to_string(g.value);
  r.results["reciprocity"] = reciprocity_json(g.reciprocity);
  bool finite = classify_parabolic(m, full_mask(m)).has_value();
  r.results["finite"] = finite;
  if (finite) {
    // finite groups: W(1/q) = q^{-N} W(q) with N the longest length
    r.results["palindromic_polynomial"] = is_palindromic_up_to_sign(g.value.num());
  }
}

inline std::vector<ClassData> load_classes(Report& r, const std::string& path, Character chi, MaterializedGroup* keep = nullptr) {
  GroupInput in = parse_group_json(parse_json_text(read_file(path), path));
  MaterializedGroup g = materialize(in, chi);
  r.inputs["group"] = path;
  r.results["group_order"] = g.order;
  r.results["dimension"] = in.dimension;
  json cls = json::array();
  for (const auto& c : g.classes)
    cls.push_back({{"label", c.label}, {"size", c.size}, {"chi", to_string(c.chi)}, {"charpoly", to_string(c.charpoly_poly())}});
  r.results["classes"] = cls;
  if (keep) *keep = g;
  return g.classes;
}

inline Character parse_character(const std::string& s) {
  if (s == "trivial") return Character::Trivial;
  if (s == "natural") return Character::Natural;
  fail(ErrorKind::Parse, "character must be trivial or natural");
}

inline void do_klein(Report& r, const std::string& type, int series, const std::string& group) {
  DynkinType d = parse_dynkin_type(type);
  if (d.affine) fail(ErrorKind::InvalidInput, "klein takes a finite type such as E6 or D4");
  r.inputs["type"] = d.name();
  r.inputs["series"] = series;
  KleinSeries k = klein_poincare(d);
  r.results["poincare"] = to_string(k.value);
  r.results["finite_coxeter_polynomial"] = to_string(k.finite_poly);
  r.results["affine_coxeter_polynomial"] = to_string(k.affine_poly);
  r.results["coefficients"] = series_json(k.value, series);
  r.results["note"] = k.note;
  if (!group.empty()) {
    auto classes = load_classes(r, group, Character::Trivial);
    json matches = json::array(), conventions = json::array();
    for (const auto& m : match_klein_molien(d, classes, static_cast<std::size_t>(series))) {
      conventions.push_back({{"convention", m.convention}, {"grading", m.grading}, {"matches", m.matches}});
      if (m.matches) matches.push_back(m.convention + " at " + m.grading);
    }
    r.results["molien_conventions"] = conventions;
    r.results["matching_conventions"] = matches;
    r.verified = !matches.empty();
  }
}

inline void do_fuchsian(Report& r, const std::string& sig, int series) {
  Signature s = parse_signature(sig);
  r.inputs["signature"] = s.to_text();
  RationalFn p = fuchsian_poincare(s);
  r.results["poincare"] = to_string(p);
  r.results["coefficients"] = series_json(p, series);
  Prop2Expansion e = prop2_compute(s);
  r.results["z_target"] = to_string(e.target);
  json terms = json::array({to_string(e.poly_term)});
  for (const auto& t : e.torus_terms) terms.push_back(to_string(t));
  r.results["expansion"] = terms;
  r.results["display_form_holds"] = e.display_form_holds;
  if (!e.verified) r.results["residual"] = to_string(e.residual);
  r.verified = e.verified;
}

inline void do_molien(Report& r, const std::string& group, const std::string& weighting, const std::string& chi, int series) {
  Weighting w = parse_weighting(weighting);
  Character c = parse_character(chi);
  r.inputs["weighting"] = weighting;
  r.inputs["character"] = chi;
  auto classes = load_classes(r, group, c);
  RationalFn g = molien_sum(classes, w);
  r.results["molien_sum"] = to_string(g);
  r.results["coefficients"] = series_json(g, series);
  RationalFn avg = molien_average(classes);
  r.results["average"] = to_string(avg);
  r.results["average_coefficients"] = series_json(avg, series);
}

inline void do_tangle_eval(Report& r, const std::string& expr, int max_crossings) {
  r.inputs["expression"] = expr;
  r.inputs["max_crossings"] = max_crossings;
  TangleValue v = evaluate_tangle(expr, max_crossings);
  r.results["fraction"] = to_string(v.fraction);
  r.results["fraction_json"] = fraction_to_json(v.fraction);
  auto det = determinant(v.fraction);
  r.results["determinant"] = integer_to_json(det.numerator_determinant);
  r.results["denominator_determinant"] = integer_to_json(det.denominator_determinant);
  if (det.fraction) r.results["value_at_minus_1"] = to_string(*det.fraction);
  else r.results["value_at_minus_1"] = "infinity";
  if (v.diagram) {
    TangleFraction dq = qfraction_of_diagram(*v.diagram, max_crossings);
    r.results["crossings"] = v.diagram->crossing_count();
    r.results["diagram_fraction"] = to_string(dq);
    r.results["additive"] = v.additive;
    if (v.additive) r.verified = dq.equal_mod_units(v.fraction);
    else r.results["diagram_matches"] = dq.equal_mod_units(v.fraction);
  }
}

inline void do_tangle_random(Report& r, int count, std::uint64_t seed, int max_crossings) {
  r.inputs["count"] = count;
  r.inputs["seed"] = seed;
  r.inputs["max_crossings"] = max_crossings;
  std::mt19937_64 rng(seed);
  int ok = 0;
  json failures = json::array();
  for (int i = 0; i < count; ++i) {
    std::string e = random_twist_expression(rng, max_crossings);
    TangleValue v = evaluate_tangle(e, max_crossings);
    if (qfraction_of_diagram(*v.diagram, max_crossings).equal_mod_units(v.fraction)) ++ok;
    else failures.push_back(e);
  }
  r.results["checked"] = count;
  r.results["matching"] = ok;
  r.results["failures"] = failures;
  r.verified = ok == count;
}

inline void do_alexander(Report& r, const std::string& input, int max_crossings) {
  std::string text = std::filesystem::exists(input) ? read_file(input) : input;
  LinkDiagram d = parse_pd(text);
  r.inputs["pd"] = to_pd_string(d);
  r.inputs["max_crossings"] = max_crossings;
  ConwayPoly c = conway_polynomial(d, max_crossings);
  r.results["crossings"] = d.crossing_count();
  r.results["components"] = d.component_count();
  r.results["writhe"] = d.writhe();
  r.results["conway"] = conway_to_string(c);
  HalfLaurent a = conway_to_alexander(c);
  r.results["alexander"] = to_string(a);
  r.results["determinant"] = integer_to_json(determinant_of(a));
}

inline void certificate_report(Report& r, const TangleSumCertificate& c) {
  r.results["certificate"] = certificate_to_json(c);
  r.verified = c.verified;
}

inline std::vector<std::string> prop3_catalog() {
  return {"A1", "A2", "A3", "B2", "B3", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "H3", "A1xA1", "A1xA2",
          "A1xB2", "A1xI2(5)", "A1xI2(6)", "A1xA1xA1", "I2(inf)",
          "tri(2,3,7)", "tri(2,4,5)", "tri(3,3,4)", "free(3)", "rac(4)"};
}

inline EpsilonPlacement parse_placement(const std::string& s) {
  if (s == "denominator") return EpsilonPlacement::Denominator;
  if (s == "numerator") return EpsilonPlacement::Numerator;
  fail(ErrorKind::Parse, "--epsilon must be denominator or numerator");
}

inline void do_certify_prop3(Report& r, const CoxeterArgs& a, const std::string& sign, const std::string& placement, const std::string& f) {
  CoxeterMatrix m = a.load(r);
  Sign s = parse_sign(sign);
  r.inputs["sign"] = to_string(s);
  r.inputs["epsilon"] = placement;
  std::optional<HalfLaurent> user_f;
  if (!f.empty()) {
    user_f = parse_half_laurent(f);
    r.inputs["F"] = to_string(*user_f);
  }
  certificate_report(r, build_prop3(m, s, parse_placement(placement), user_f));
}

inline void do_certify_catalog(Report& r) {
  json rows = json::array();
  bool all = true;
  for (const auto& name : prop3_catalog())
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      json row{{"group", name}, {"sign", to_string(s)}};
      try {
        auto c = build_prop3(named_coxeter(name), s);
        row["terms"] = c.terms.size();
        row["verified"] = c.verified;
        all = all && c.verified;
      } catch (const Error& e) {
        row["verified"] = false;
        row["error"] = e.what();
        all = false;
      }
      rows.push_back(row);
    }
  r.results["catalog"] = rows;
  r.verified = all;
}

inline void do_certify_prop2_fuzz(Report& r, int count, std::uint64_t seed) {
  r.inputs["fuzz"] = count;
  r.inputs["seed"] = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> g(0, 5), len(0, 4), order(2, 12);
  int ok = 0;
  json failures = json::array();
  for (int i = 0; i < count; ++i) {
    std::vector<int> a(static_cast<std::size_t>(len(rng)));
    int genus = g(rng);
    for (auto& x : a) x = order(rng);
    Signature s(genus, a);
    auto c = build_prop2(s);
    if (c.verified) ++ok;
    else failures.push_back(s.to_text());
  }
  r.results["checked"] = count;
  r.results["verified_count"] = ok;
  r.results["failures"] = failures;
  r.verified = ok == count;
}

inline void do_certify_check(Report& r, const std::string& path) {
  r.inputs["certificate"] = path;
  json j = parse_json_text(read_file(path), path);
  if (j.contains("results") && j["results"].contains("certificate")) j = j["results"]["certificate"];
  certificate_report(r, certificate_from_json(j));
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact growth series, Poincare series and q-fractions of 2-tangles", "qtangle"};
  app.require_subcommand(1);
  bool as_json = false;
  int series = 10, max_crossings = kDefaultMaxCrossings;
  std::uint64_t seed = 1;
  std::string weighting = "by-elements", sign = "+", character = "trivial", placement = "denominator";
  app.add_flag("--json", as_json, "Print the report as JSON");

  auto add_series = [&](CLI::App* c) { c->add_option("--series", series, "Number of series coefficients")->check(CLI::Range(1, 10000)); };
  auto add_coxeter = [](CLI::App* c, CoxeterArgs& a) {
    c->add_option("--coxeter", a.coxeter, "Coxeter matrix: JSON file, text file or text form \"r: row / row ...\"");
    c->add_option("--name", a.name, "Named system: A<n>, B<n>, D<n>, E6-E8, F4, H3, H4, I2(m), tri(a,b,c), free(r), rac(r)");
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", as_json, "Print the report as JSON"); };

  Report report;
  std::function<void()> action;

  CoxeterArgs cox;
  auto* growth = app.add_subcommand("growth", "Growth series of a Coxeter group");
  add_coxeter(growth, cox);
  add_series(growth);
  add_json(growth);
  bool census = false;
  growth->add_flag("--census", census, "Compare with a length census in an explicit model");
  growth->callback([&] { action = [&] { do_growth(report, cox, series, census); }; });

  auto* euler = app.add_subcommand("euler", "Euler characteristic against 1/W(1)");
  add_coxeter(euler, cox);
  add_json(euler);
  euler->callback([&] { action = [&] { do_euler(report, cox); }; });

  auto* recip = app.add_subcommand("reciprocity", "Reciprocity of the growth function under q -> 1/q");
  add_coxeter(recip, cox);
  add_json(recip);
  recip->callback([&] { action = [&] { do_reciprocity(report, cox); }; });

  std::string type, group, sig;
  auto* klein = app.add_subcommand("klein", "Poincare series of a Klein singularity");
  klein->add_option("type", type, "D4..D62, E6, E7, E8")->required();
  klein->add_option("--group", group, "Group file to compare Molien normalizations against");
  add_series(klein);
  add_json(klein);
  klein->callback([&] { action = [&] { do_klein(report, type, series, group); }; });

  auto* fuchs = app.add_subcommand("fuchsian", "Poincare series of a Fuchsian singularity and its z-expansion");
  fuchs->add_option("signature", sig, "\"g=0; a=2,3,7\"")->required();
  add_series(fuchs);
  add_json(fuchs);
  fuchs->callback([&] { action = [&] { do_fuchsian(report, sig, series); }; });

  auto* molien = app.add_subcommand("molien", "Molien series of a finite matrix group");
  molien->add_option("--group", group, "Group file")->required();
  molien->add_option("--weighting", weighting, "by-elements, by-classes or custom=w1,w2,...");
  molien->add_option("--character", character, "trivial or natural");
  add_series(molien);
  add_json(molien);
  molien->callback([&] { action = [&] { do_molien(report, group, weighting, character, series); }; });

  std::string expr;
  int count = 100;
  auto* tangle = app.add_subcommand("tangle", "Evaluate tangle expressions");
  tangle->require_subcommand(1);
  auto* teval = tangle->add_subcommand("eval", "q-fraction of a tangle expression");
  teval->add_option("expression", expr, "e.g. \"T(3) + Z[4,1] + 1/Z[1,0,1]\"")->required();
  teval->add_option("--max-crossings", max_crossings, "Crossing budget")->check(CLI::Range(1, 200));
  add_json(teval);
  teval->callback([&] { action = [&] { do_tangle_eval(report, expr, max_crossings); }; });
  auto* trand = tangle->add_subcommand("random", "Diagram against algebra on random twist sums");
  trand->add_option("--count", count, "Number of sums")->check(CLI::Range(1, 100000));
  trand->add_option("--seed", seed, "RNG seed");
  int random_crossings = 16;
  trand->add_option("--max-crossings", random_crossings, "Crossing budget per sum")->check(CLI::Range(2, 40));
  add_json(trand);
  trand->callback([&] { action = [&] { do_tangle_random(report, count, seed, random_crossings); }; });

  std::string pd;
  auto* alex = app.add_subcommand("alexander", "Conway and Alexander polynomials of a PD code");
  alex->add_option("pd", pd, "PD code text or a file holding it")->required();
  alex->add_option("--max-crossings", max_crossings, "Crossing budget")->check(CLI::Range(1, 200));
  add_json(alex);
  alex->callback([&] { action = [&] { do_alexander(report, pd, max_crossings); }; });

  auto* certify = app.add_subcommand("certify", "Build and verify tangle-sum certificates");
  certify->require_subcommand(1);
  auto* p1 = certify->add_subcommand("prop1", "Klein singularity series as one q-fraction");
  p1->add_option("type", type, "D4..D62, E6, E7, E8")->required();
  add_json(p1);
  p1->callback([&] { action = [&] { report.inputs["type"] = type; certificate_report(report, build_prop1(parse_dynkin_type(type))); }; });

  auto* p2 = certify->add_subcommand("prop2", "Fuchsian expansion into z(z^2 - g + 5) and torus quotients");
  p2->add_option("signature", sig, "\"g=0; a=2,3,7\"");
  int fuzz = 0;
  p2->add_option("--fuzz", fuzz, "Check this many random signatures instead")->check(CLI::Range(1, 100000));
  p2->add_option("--seed", seed, "RNG seed for --fuzz");
  add_json(p2);
  p2->callback([&] {
    action = [&] {
      if (fuzz > 0) return do_certify_prop2_fuzz(report, fuzz, seed);
      if (sig.empty()) fail(ErrorKind::InvalidInput, "give a signature or --fuzz N");
      Signature s = parse_signature(sig);
      report.inputs["signature"] = s.to_text();
      certificate_report(report, build_prop2(s));
    };
  });

  auto* p3 = certify->add_subcommand("prop3", "Coxeter growth series as a sum of building-block fractions");
  add_coxeter(p3, cox);
  p3->add_option("--sign", sign, "+ or -");
  p3->add_option("--epsilon", placement, "Where z^epsilon goes: denominator or numerator");
  std::string fpoly;
  p3->add_option("--F", fpoly, "Own choice of F as a polynomial in q");
  add_json(p3);
  p3->callback([&] { action = [&] { do_certify_prop3(report, cox, sign, placement, fpoly); }; });

  auto* cat = certify->add_subcommand("catalog", "Coxeter certificates for the built-in catalog, both signs");
  add_json(cat);
  cat->callback([&] { action = [&] { do_certify_catalog(report); }; });

  auto* p4 = certify->add_subcommand("prop4", "Molien series as a sum of 1/(z b(z^2)) fractions");
  p4->add_option("--group", group, "Group file")->required();
  p4->add_option("--weighting", weighting, "by-elements, by-classes or custom=w1,w2,...");
  p4->add_option("--character", character, "trivial or natural");
  add_json(p4);
  p4->callback([&] {
    action = [&] {
      Weighting w = parse_weighting(weighting);
      report.inputs["weighting"] = weighting;
      MaterializedGroup g;
      auto classes = load_classes(report, group, parse_character(character), &g);
      certificate_report(report, build_prop4(classes, g.input.dimension, w));
    };
  });

  auto* check = certify->add_subcommand("check", "Re-verify a certificate JSON file");
  std::string cert_path;
  check->add_option("file", cert_path, "Certificate or report JSON")->required();
  add_json(check);
  check->callback([&] { action = [&] { do_certify_check(report, cert_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::vector<std::string> names;
  for (CLI::App* c = &app; c;) {
    auto subs = c->get_subcommands();
    c = subs.empty() ? nullptr : subs.front();
    if (c) names.push_back(c->get_name());
  }
  for (const auto& n : names) report.command += (report.command.empty() ? "" : " ") + n;

  auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::VerificationFailed ? kExitVerification : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(report, as_json, ms, out);
  if (report.verified && !*report.verified) {
    err << "verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace qtangle::cli
