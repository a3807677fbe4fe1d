#pragma once

#include <string>
#include <string_view>

#include "finsler/algebra/rat_expr.hpp"

namespace finsler::algebra {

/// Terms joined by " + ", each written coef*s^a*u^b*C^c*T^d with any
/// generic coefficient symbols appended as *name^e; "0" for zero.
std::string to_text(const Polynomial& p);

/// "num: <terms> / den: <terms>" with the canonical numerator and denominator.
std::string to_text(const RatExpr& a);

/// Accepts the output of to_text plus shorthand: omitted factors, omitted
/// exponents, omitted coefficients and " - " between terms.
Polynomial parse_polynomial(std::string_view text);

/// Parses "num: ... / den: ..." or a bare polynomial. Throws ParseError.
RatExpr parse_rat_expr(std::string_view text);

}  // namespace finsler::algebra
