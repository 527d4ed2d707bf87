#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(REDD_BIN) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, Formula) {
  CliRun r = run("formula --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sqrt(3*p - 2)\n");
  CliRun tex = run("formula --n 4 --format latex");
  EXPECT_EQ(tex.code, 0);
  EXPECT_NE(tex.out.find("29p^{3} - 63p^{2} + 48p - 12"), std::string::npos);
  EXPECT_EQ(run("formula --n 1").code, 2);
  EXPECT_EQ(run("formula --n 13").code, 2);
  auto j = nlohmann::json::parse(run("formula --n 3 --format json").out);
  EXPECT_EQ(j["n"], 3);
}

TEST(Cli, EvalAndCount) {
  EXPECT_EQ(run("eval --n 4 --p 2").out, "4.000000000000\n");
  EXPECT_EQ(run("eval --n 4 --p 3").out.substr(0, 7), "9.39511");
  EXPECT_EQ(run("d --n 4 --p 4").out, "40\n");
  EXPECT_EQ(run("eval --n 4 --p 1").code, 2);
  EXPECT_EQ(run("eval --n 4 --p x").code, 2);
  EXPECT_EQ(run("d --n 4 --p 1").code, 2);
  auto j = nlohmann::json::parse(run("eval --n 5 --p 4 --format json").out);
  EXPECT_NEAR(j["value"].get<double>(), 32.9431795537, 1e-9);
}

TEST(Cli, Table) {
  CliRun r = run("table --from 2 --to 9");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("E(8,p) = (28473*p^9"), std::string::npos);
  EXPECT_EQ(run("table --from 3 --to 2").code, 2);
}

TEST(Cli, MonteCarlo) {
  CliRun csv = run("mc redd-n2 --p 3 --samples 2000 --seed 7 --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("count,frequency\n", 0), 0u);
  EXPECT_EQ(csv.out.find("\n2,"), std::string::npos);

  CliRun js = run("mc goe-absdet --n 2 --u 0.5 --samples 5000 --seed 1 --workers 2");
  ASSERT_EQ(js.code, 0);
  auto j = nlohmann::json::parse(js.out);
  EXPECT_TRUE(j.contains("z_score"));
  EXPECT_LT(std::abs(j["z_score"].get<double>()), 5.0);
  EXPECT_EQ(js.out, run("mc goe-absdet --n 2 --u 0.5 --samples 5000 --seed 1 --workers 2").out);

  EXPECT_EQ(run("mc bogus").code, 2);
  EXPECT_EQ(run("mc goe-absdet --n 2 --samples 10").code, 2);
  EXPECT_EQ(run("mc goe-det --n 2 --format csv").code, 2);
}

TEST(Cli, SeedFromEnvironment) {
  auto a = nlohmann::json::parse(run("mc goe-det --n 2 --samples 1000 --workers 1", "REDD_KIT_SEED=17").out);
  EXPECT_EQ(a["seed"], 17);
  auto b = nlohmann::json::parse(run("mc goe-det --n 2 --samples 1000 --workers 1 --seed 3", "REDD_KIT_SEED=17").out);
  EXPECT_EQ(b["seed"], 3);
  EXPECT_EQ(run("mc goe-det --n 2 --samples 1000", "REDD_KIT_SEED=abc").code, 2);
}

TEST(Cli, VerifyFast) {
  CliRun r = run("verify --level fast");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_GE(j["checks"].size(), 20u);
  EXPECT_EQ(run("verify --level medium").code, 2);
  EXPECT_EQ(run("verify --fixture /nonexistent/table.json").code, 2);
}

TEST(Cli, VerifyTamperedFixture) {
  std::string path = std::string(TEST_TMP_DIR) + "/tampered_fixture.json";
  std::ifstream in(FIXTURE_PATH);
  ASSERT_TRUE(in.good());
  auto doc = nlohmann::json::parse(in);
  for (auto& row : doc["rows"]) {
    if (row["n"] == 8) row["factors"][0]["coeffs"][9] = 28474;
  }
  FILE* f = fopen(path.c_str(), "w");
  ASSERT_NE(f, nullptr);
  const std::string text = doc.dump();
  fwrite(text.data(), 1, text.size(), f);
  fclose(f);
  CliRun r = run("verify --fixture " + path);
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n_failed"], 1);
  for (const auto& c : j["checks"]) {
    if (!c["pass"].get<bool>()) EXPECT_EQ(c["name"], "closed form n=8");
  }
}
