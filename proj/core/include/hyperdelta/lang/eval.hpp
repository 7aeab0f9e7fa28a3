#pragma once

#include <hyperdelta/lang/expr.hpp>
#include <hyperdelta/rational_function.hpp>
#include <hyperdelta/series.hpp>

#include <string_view>
#include <variant>

namespace hyperdelta::lang {

using Value = std::variant<SeriesNumber, Classification>;

/// Evaluates an expression over series numbers. Symbols: eta, i, pi.
/// Functions: st, arctan, classify, exp, log, sin, cos, and O(eta^q) for an
/// explicit remainder. Division by zero surfaces here, not in the parser.
Value evaluate(const Expr& e);

/// evaluate(), rejecting a Classification result.
SeriesNumber evaluate_series(const Expr& e);

/// Convenience: parse then evaluate.
Value evaluate(std::string_view text);

/// Reads the expression as an exact rational function of `variable`
/// (integer powers only, no function calls). Decimal literals become exact
/// rationals.
RationalFunction to_rational_function(const Expr& e, std::string_view variable);

}  // namespace hyperdelta::lang
