#include <gtest/gtest.h>

#include "json.hpp"
#include "redd/verify.hpp"

using namespace redd;

TEST(Verify, FastSuitePasses) {
  VerifyReport r = run_verify({});
  EXPECT_GE(r.checks.size(), 20u);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.passed());
  auto j = r.to_json();
  EXPECT_EQ(j["level"], "fast");
  EXPECT_EQ(j["n_failed"], 0);
  EXPECT_EQ(j.dump(), run_verify({}).to_json().dump());
}

TEST(Verify, TamperedFixtureNamesRow) {
  auto doc = nlohmann::json::parse(closed_forms_fixture_json());
  for (auto& row : doc["rows"]) {
    if (row["n"] == 6) row["const_den"] = 9;
  }
  VerifyOptions o;
  o.fixture_json = doc.dump();
  VerifyReport r = run_verify(o);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.failures(), 1u);
  for (const auto& c : r.checks) {
    if (!c.pass) EXPECT_EQ(c.name, "closed form n=6");
  }
}

TEST(Verify, MalformedFixtureFails) {
  VerifyOptions o;
  o.fixture_json = "{\"rows\": [{\"n\": \"four\"}]}";
  VerifyReport r = run_verify(o);
  EXPECT_FALSE(r.passed());
}

TEST(Verify, FixtureParsesEightRows) {
  auto rows = parse_closed_forms(closed_forms_fixture_json());
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows.front().n, 2);
  EXPECT_EQ(rows.back().n, 9);
  EXPECT_THROW(parse_closed_forms("not json"), std::invalid_argument);
}

TEST(Verify, TensorChecksSmallRun) {
  Checks c = check_tensor_mc({3, 1, 1000}, 2000);
  ASSERT_EQ(c.size(), 4u);
  for (const auto& x : c) EXPECT_TRUE(x.pass) << x.name << ": " << x.detail;
}
