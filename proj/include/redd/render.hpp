#pragma once

#include <string>

#include "json.hpp"

#include "redd/exact/radical.hpp"
#include "redd/goe_expectations.hpp"

namespace redd {

/// "1 + 4*(p - 1)^(3/2)/sqrt(3*p - 2)" style.
std::string render_text(const RadicalExpr& e);
/// "1+\frac{4(p-1)^{3/2}}{\sqrt{3p-2}}" style.
std::string render_latex(const RadicalExpr& e);

/// {num_coeffs, den_coeffs}: integer arrays, ascending powers of p.
nlohmann::ordered_json ratfunc_to_json(const RatFunc& f);
/// {pi_half_exponent, basis: {one, s, t, st}}.
nlohmann::ordered_json radical_to_json(const RadicalExpr& e);
/// PiScalar as {q, sqrt_pi_exponent, sqrt2_exponent}.
nlohmann::ordered_json pi_scalar_to_json(const PiScalar& c);
/// Channel coefficient arrays of I_n - J_n.
nlohmann::ordered_json abs_det_to_json(const AbsDetExpr& e);

/// Integer to JSON: a number when it fits in int64, otherwise its decimal string.
nlohmann::ordered_json integer_to_json(const Integer& z);

}  // namespace redd
