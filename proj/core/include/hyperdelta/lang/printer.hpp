#pragma once

#include <hyperdelta/series.hpp>

#include <string>

namespace hyperdelta::lang {

/// Renders a series in the expression language, e.g.
/// "1.5 + 2*eta^(1/2) - eta^2 + O(eta^8)". Re-parsing the text yields the
/// same term list. digits = 0 prints the full working precision.
std::string format_series(const SeriesNumber& s, unsigned digits = 0);

}  // namespace hyperdelta::lang
