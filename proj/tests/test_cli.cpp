#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qtangle/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "qtangle");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = qtangle::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QT_DATA_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qtangle_test_" + std::to_string(::getpid()) + "_" + name)).string();
}

}  // namespace

TEST(Cli, GrowthJson) {
  CliRun r = run({"growth", "--coxeter", data("dihedral_inf.json"), "--series", "6", "--census", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = r.j();
  EXPECT_EQ(j["command"], "growth");
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_TRUE(j.contains("inputs_digest"));
  EXPECT_TRUE(j.contains("timing_ms"));
  EXPECT_EQ(j["results"]["coefficients"], json::parse(R"([1, 2, 2, 2, 2, 2])"));
}

TEST(Cli, GrowthTextForms) {
  EXPECT_EQ(run({"growth", "--coxeter", data("a3.txt"), "--census"}).code, 0);
  EXPECT_EQ(run({"growth", "--coxeter", "2: 1 0 / 0 1"}).code, 0);
  EXPECT_EQ(run({"growth", "--name", "free(3)", "--series", "4"}).code, 0);
  CliRun r = run({"growth", "--name", "A2"});
  EXPECT_NE(r.out.find("growth"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"growth", "--name", "Q7"}).code, 1);
  EXPECT_EQ(run({"growth"}).code, 1);
  EXPECT_EQ(run({"growth", "--coxeter", "/nonexistent/file.json"}).code, 1);
  EXPECT_EQ(run({"klein", "A4"}).code, 1);
  EXPECT_EQ(run({"fuchsian", "g=0; a=1"}).code, 1);
  EXPECT_EQ(run({"tangle", "eval", "T("}).code, 1);
  EXPECT_EQ(run({"tangle", "eval", "T(30)", "--max-crossings", "10"}).code, 1);
  EXPECT_EQ(run({"alexander", "X[1,2,3]"}).code, 1);
  EXPECT_EQ(run({"molien", "--group", data("quaternion.json"), "--weighting", "by-size"}).code, 1);
  EXPECT_EQ(run({"certify", "prop3", "--name", "A2", "--sign", "x"}).code, 1);
  EXPECT_EQ(run({"nosuchcommand"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Commands) {
  EXPECT_EQ(run({"euler", "--name", "tri(2,3,7)"}).code, 0);
  EXPECT_EQ(run({"reciprocity", "--name", "I2(inf)"}).code, 0);
  EXPECT_EQ(run({"klein", "E6", "--group", data("binary_tetrahedral.json")}).code, 0);
  EXPECT_EQ(run({"fuchsian", "g=0; a=2,3,7", "--series", "10"}).code, 0);
  EXPECT_EQ(run({"molien", "--group", data("binary_tetrahedral.json"), "--weighting", "by-classes"}).code, 0);
  EXPECT_EQ(run({"alexander", data("trefoil.pd")}).code, 0);
  EXPECT_EQ(run({"tangle", "random", "--count", "5", "--seed", "3"}).code, 0);
  EXPECT_EQ(run({"certify", "prop1", "E8"}).code, 0);
  EXPECT_EQ(run({"certify", "prop2", "g=1; a=2,2"}).code, 0);
  EXPECT_EQ(run({"certify", "prop2", "--fuzz", "5", "--seed", "1"}).code, 0);
  EXPECT_EQ(run({"certify", "prop3", "--name", "tri(2,3,7)", "--sign", "-"}).code, 0);
  EXPECT_EQ(run({"certify", "prop3", "--coxeter", data("right_angled_square.json"), "--epsilon", "numerator"}).code, 0);
}

TEST(Cli, AlexanderJson) {
  CliRun r = run({"alexander", data("figure_eight.pd"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["results"]["determinant"], 5);
}

TEST(Cli, TangleEvalJson) {
  CliRun r = run({"tangle", "eval", "T(3)", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = r.j();
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["inputs"]["expression"], "T(3)");
}

TEST(Cli, KleinReportsConvention) {
  CliRun r = run({"klein", "D4", "--group", data("quaternion.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("averaged"), std::string::npos);
}

TEST(Cli, CertificateCheck) {
  CliRun r = run({"certify", "prop4", "--group", data("binary_tetrahedral.json"), "--weighting", "by-classes", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string good = temp_path("good.json"), bad = temp_path("bad.json");
  {
    std::ofstream(good) << r.out;
  }
  EXPECT_EQ(run({"certify", "check", good}).code, 0);
  json j = r.j();
  json& cert = j["results"].contains("certificate") ? j["results"]["certificate"] : j["results"];
  cert["terms"][0]["coeff"] = 7;
  {
    std::ofstream(bad) << j.dump();
  }
  EXPECT_EQ(run({"certify", "check", bad}).code, 2);
  std::ofstream(bad) << "{ not json";
  EXPECT_EQ(run({"certify", "check", bad}).code, 1);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST(Cli, VerificationFailureExitCode) {
  // a non-integral custom weighting cannot be written with integer building blocks
  EXPECT_EQ(run({"certify", "prop4", "--group", data("plus_minus_identity.json"), "--weighting", "custom=1/2,1"}).code, 2);
}

TEST(Cli, Catalog) {
  CliRun r = run({"certify", "catalog", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.j()["verified"].get<bool>());
}

TEST(Cli, DigestIsStable) {
  json a = run({"euler", "--name", "A3", "--json"}).j(), b = run({"euler", "--name", "A3", "--json"}).j();
  EXPECT_EQ(a["inputs_digest"], b["inputs_digest"]);
  json c = run({"euler", "--name", "A4", "--json"}).j();
  EXPECT_NE(a["inputs_digest"], c["inputs_digest"]);
}
