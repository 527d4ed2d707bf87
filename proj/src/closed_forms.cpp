#include "redd/closed_forms.hpp"

#include <stdexcept>

#include "json.hpp"

namespace redd {

extern const char* const kClosedFormsJson;

namespace {

Integer to_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) return Integer(v.get<std::string>());
  throw std::invalid_argument("closed-form fixture: expected an integer, got " + v.dump());
}

// base^(k/2) with base^(1/2) represented by the basis element `root`
RadicalExpr half_power(const RatFunc& base, int k, const RadicalExpr& root) {
  if (k % 2 == 0) return RadicalExpr(pow(base, k / 2));
  return root * pow(base, (k - 1) / 2);
}

}  // namespace

const std::string& closed_forms_fixture_json() {
  static const std::string text(kClosedFormsJson);
  return text;
}

std::vector<FixtureRow> parse_closed_forms(const std::string& json_text) {
  std::vector<FixtureRow> rows;
  try {
    auto doc = nlohmann::json::parse(json_text);
    for (const auto& r : doc.at("rows")) {
      FixtureRow row;
      row.n = r.at("n").get<int>();
      row.one = r.at("one").get<int>();
      row.const_num = to_integer(r.at("const_num"));
      row.const_den = to_integer(r.at("const_den"));
      for (const auto& f : r.at("factors")) {
        FixtureFactor tf;
        for (const auto& c : f.at("coeffs")) tf.coeffs.push_back(to_integer(c));
        tf.power = f.at("power").get<int>();
        row.factors.push_back(std::move(tf));
      }
      row.half_pm1 = r.at("p_minus_1_half_exp").get<int>();
      row.half_p3 = r.at("three_p_minus_2_half_exp").get<int>();
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("closed-form fixture: ") + e.what());
  }
  return rows;
}

RadicalExpr fixture_expr(const FixtureRow& row) {
  RatFunc c = RatFunc(Rational(row.const_num, row.const_den));
  for (const auto& f : row.factors) {
    std::vector<Rational> coeffs;
    for (const auto& z : f.coeffs) coeffs.emplace_back(z);
    c *= pow(RatFunc(PolyQ(coeffs)), f.power);
  }
  RadicalExpr e = half_power(RatFunc::linear(1, -1), row.half_pm1, RadicalExpr::s()) *
                  half_power(RatFunc::linear(3, -2), row.half_p3, RadicalExpr::t()) * c;
  return e + RadicalExpr(RatFunc(row.one));
}

}  // namespace redd
