#pragma once

// Identity and cross-validation suite behind `redd verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "redd/closed_forms.hpp"

namespace redd {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Checks = std::vector<CheckResult>;

struct McConfig {
  std::uint64_t seed = 0;
  int workers = 1;
  std::int64_t samples = 200000;
};

// Exact and quadrature identities for the special functions.
Checks check_special_functions();
// Closed forms for E det and E|det| of GOE matrices against oracles.
Checks check_goe_exact();
// Exact equality with the expected closed forms, one check per fixture row.
Checks check_closed_forms(const std::vector<FixtureRow>& rows);
// E(4, p) value row and D(4, p).
Checks check_value_table();
// pi cancellation, field membership, polynomial shape, E(n,2) = n, 1 <= E <= D.
Checks check_structure(int n_max = 12);
// Term-by-term summand identities used in assembling E(n, p).
Checks check_summand_lemmas();
// Renderings and serialisations.
Checks check_rendering();
// Samplers and exact root counting that need no large Monte Carlo run.
Checks check_samplers();

Checks check_goe_mc(const McConfig& mc);
Checks check_route_mc(const McConfig& mc);
Checks check_tensor_mc(const McConfig& mc, std::int64_t samples = 10000);
Checks check_estimator_properties(const McConfig& mc);

enum class VerifyLevel { fast, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::fast;
  McConfig mc;
  std::optional<std::string> fixture_json;  // replaces the built-in closed-form fixture
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::fast;
  McConfig mc;
  Checks checks;
  bool passed() const;
  std::size_t failures() const;
  nlohmann::ordered_json to_json() const;
};

VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace redd
