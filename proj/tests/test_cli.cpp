#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubeloop/cli.hpp"
#include "support/known_paths.hpp"

using namespace cubeloop;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line)) {
    if (!line.empty()) last = line;
  }
  return last;
}

}  // namespace

TEST(Cli, CheckJson) {
  const Invocation r = run({"check", "--dim", "4", "--word", "12314234", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["embedded"], true);
  EXPECT_EQ(j["genus"], 9);
  EXPECT_EQ(j["m"], 8);
  EXPECT_EQ(j["lattice_order"], 4);
  EXPECT_TRUE(j["family"].is_null());
  EXPECT_TRUE(j["oracle_checks"].is_null());
  for (const char* key : {"dim", "word", "canonical", "s_q_order", "lattice_basis", "orientable_sigma",
                          "orientable_quotient_lambda0", "orientable_quotient_2z", "euler_char", "symmetries"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, CheckNotClosed) {
  const Invocation r = run({"check", "--dim", "3", "--word", "3212", "3121"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("NotClosed"), std::string::npos) << r.err;
}

TEST(Cli, CheckVerify) {
  const Invocation r = run({"check", "--dim", "4", "--word", "12341234", "--mode", "verify", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["embedded"], false);
  EXPECT_EQ(j["s_q_order"], 256);
  EXPECT_EQ(j["oracle_checks"]["closure_order"], 256);
  EXPECT_EQ(j["oracle_checks"]["closure_embedded"], false);
  EXPECT_EQ(j["oracle_checks"]["geometric_embedded"], false);
  EXPECT_TRUE(j["genus"].is_null());
}

TEST(Cli, VerifyBoundsNeedForce) {
  const std::vector<std::string> base{"family", "--name", "d-series", "--dim", "6", "--mode", "verify", "--json"};
  Invocation r = run(base);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["oracle_checks"]["closure_order"], 256);
  EXPECT_TRUE(j["oracle_checks"]["geometric_embedded"].is_null());
  EXPECT_NE(r.err.find("--force"), std::string::npos);

  auto forced = base;
  forced.push_back("--force");
  r = run(forced);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["oracle_checks"]["geometric_embedded"], true);
}

TEST(Cli, Enumerate) {
  Invocation r = run({"enumerate", "--dim", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(last_line(r.out).rfind("3 classes", 0), 0U) << r.out;

  r = run({"enumerate", "--dim", "4", "--length", "8"});
  EXPECT_EQ(last_line(r.out).rfind("6 classes", 0), 0U) << r.out;

  r = run({"enumerate", "--dim", "4", "--embedded-only", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  std::vector<int> genera;
  for (const auto& c : j["classes"]) genera.push_back(c["genus"]);
  EXPECT_EQ(genera, (std::vector<int>{9, 9, 9, 13, 17}));

  EXPECT_EQ(run({"enumerate", "--dim", "4", "--jobs", "4"}).out, run({"enumerate", "--dim", "4"}).out);
  EXPECT_EQ(run({"enumerate", "--dim", "4", "--length", "9"}).code, kExitInput);
}

TEST(Cli, Family) {
  Invocation r = run({"family", "--name", "sharp", "--dim", "6", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["m"], 20);
  EXPECT_EQ(j["embedded"], true);
  EXPECT_EQ(j["family"]["name"], "sharp");

  r = run({"family", "--name", "d-series", "--dim", "5", "--json"});
  j = json::parse(r.out);
  EXPECT_EQ(j["word"], "1 2 3 4 5 1 2 5 4 3");
  EXPECT_EQ(j["lambda0_order"], 4);

  r = run({"family", "--name", "gamma-a", "--dim", "4", "--beta", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1 2 3 4 2 1 4 3"), std::string::npos) << r.out;

  EXPECT_EQ(run({"family", "--name", "gamma-a", "--dim", "4", "--beta", "4"}).code, kExitInput);
  EXPECT_EQ(run({"family", "--name", "nope", "--dim", "4"}).code, kExitInput);
}

TEST(Cli, Export) {
  const auto dir = std::filesystem::temp_directory_path() / "cubeloop_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = (dir / "d.obj").string();
  Invocation r = run({"export", "--dim", "3", "--word", "123123", "--format", "obj", "-o", file});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("192 triangles"), std::string::npos);
  std::ifstream in(file);
  std::size_t faces = 0;
  for (std::string line; std::getline(in, line);) faces += line.rfind("f ", 0) == 0;
  EXPECT_EQ(faces, 192U);

  r = run({"export", "--dim", "4", "--word", "12314234", "--format", "obj", "--project", "4"});
  EXPECT_EQ(r.code, kExitOk);
  r = run({"export", "--dim", "3", "--word", "121323", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["triangles"].size(), 192U);

  r = run({"export", "--dim", "4", "--word", "12341234", "--format", "json"});
  EXPECT_EQ(json::parse(r.out)["warning"], "surface is not embedded");

  EXPECT_EQ(run({"export", "--dim", "3", "--word", "123123", "--project", "1"}).code, kExitInput);
  EXPECT_EQ(run({"export", "--dim", "3", "--word", "123123", "-o", (dir / "no" / "x.obj").string()}).code, kExitIo);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"check", "--dim", "4"}).code, kExitInput);
  EXPECT_EQ(run({"check", "--dim", "4", "--word", "1234", "--mode", "slow"}).code, kExitInput);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

class Golden : public ::testing::TestWithParam<known::Named> {};

TEST_P(Golden, ReportMatches) {
  const auto& k = GetParam();
  const Invocation r = run({"check", "--dim", std::to_string(k.dim), "--word", k.word, "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(std::string(CUBELOOP_GOLDEN_DIR) + "/" + k.name + ".json");
  ASSERT_TRUE(in) << "missing golden file for " << k.name;
  EXPECT_EQ(json::parse(r.out), json::parse(in)) << r.out;
}

std::vector<known::Named> golden_cases() {
  std::vector<known::Named> all = known::kR4;
  all.insert(all.end(), known::kR3.begin(), known::kR3.end());
  all.push_back(known::kOddNonOrientable);
  return all;
}

INSTANTIATE_TEST_SUITE_P(Reports, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const auto& info) { return info.param.name; });
