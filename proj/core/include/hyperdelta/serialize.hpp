#pragma once

#include <hyperdelta/kernels.hpp>
#include <hyperdelta/series.hpp>

#include <nlohmann/json.hpp>

namespace hyperdelta {

/// {"terms": [[exp_num, exp_den, "re", "im"], ...], "trunc": [num, den] | null}
/// Coefficients are decimal strings at full working precision; exact series
/// carry "trunc": null.
nlohmann::json to_json(const SeriesNumber& s);

/// Inverse of to_json. Throws DomainError on malformed documents.
SeriesNumber series_from_json(const nlohmann::json& j);

/// [num, den], or null for nullopt.
nlohmann::json to_json(const std::optional<Exponent>& q);

/// st and expected as JSON numbers plus decimal strings ("st_decimal",
/// "expected_decimal") at the configured digit count.
nlohmann::json to_json(const kernels::SiftReport& r);

}  // namespace hyperdelta
