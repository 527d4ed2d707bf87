#pragma once

#include <string>
#include <vector>

#include "redd/exact/radical.hpp"

namespace redd {

struct FixtureFactor {
  std::vector<Integer> coeffs;  // ascending powers of p
  int power = 1;
};

/// one + (const_num/const_den) prod factor^power (p-1)^(half_pm1/2) (3p-2)^(half_p3/2)
struct FixtureRow {
  int n = 0;
  int one = 0;
  Integer const_num = 1;
  Integer const_den = 1;
  std::vector<FixtureFactor> factors;
  int half_pm1 = 0;
  int half_p3 = 0;
};

/// The fixture compiled in from data/closed_forms.json.
const std::string& closed_forms_fixture_json();

/// Throws std::invalid_argument on malformed input.
std::vector<FixtureRow> parse_closed_forms(const std::string& json_text);

RadicalExpr fixture_expr(const FixtureRow& row);

}  // namespace redd
