#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dimlaw/dimension.hpp"

namespace dimlaw {

/// Parses a dimension expression against a system. Grammar, whitespace
/// insensitive:
///
///   expr  := "1" | term ("*" term)*
///   term  := NAME | NAME "^" INT | NAME "^(" INT ["/" INT] ")"
///
/// Repeated names accumulate additively: "S * S" == "S^2".
DimVector parse_dim_expr(std::string_view text, const DimensionSystem& system);

/// Canonical textual form: "1" for dimensionless, otherwise nonzero terms in
/// dimension order, integer exponents bare (S^-1), fractional exponents
/// parenthesized (M^(1/2)). parse_dim_expr inverts it.
std::string render_dim_expr(const DimVector& dim, const DimensionSystem& system);

/// Parses a problem file:
///
///   dimensions: NAME NAME ...
///   quantity NAME : DIMEXPR     (one per explanatory variable, ordered)
///   target NAME : DIMEXPR       (exactly once)
///
/// '#' starts a comment; blank lines are ignored. Errors carry 1-based line
/// numbers in their message.
Problem parse_problem(std::string_view text);
Problem parse_problem_file(const std::string& path);

/// The canonical file form of a problem (inverse of parse_problem up to
/// comments and whitespace).
std::string render_problem(const Problem& problem);

}  // namespace dimlaw
