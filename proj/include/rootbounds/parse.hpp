#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rootbounds/polynomial.hpp"

namespace rootbounds {

/// True when the text uses the bracketed coefficient-list syntax
/// ("[5, 0, -3]") rather than an expression ("2x^2 - 3").
bool is_list_syntax(std::string_view text);

/// Parses either syntax into an ascending-degree coefficient sequence,
/// exactly as written (no normalization, repeated degrees summed).
///
/// Expression grammar:
///   poly := sign? term (sign term)*
///   term := number? ("x" ("^" integer)?)?     -- at least one part present
/// Numbers accept decimal and scientific notation; whitespace is
/// insignificant. Throws EmptyInputError or PolynomialSyntaxError.
std::vector<double> parse_poly(std::string_view text);

/// Canonical descending-degree expression string. Coefficients are printed
/// with shortest round-trip formatting, so parse_poly(format_poly(p))
/// reproduces p exactly.
std::string format_poly(const Polynomial& p);

}  // namespace rootbounds
