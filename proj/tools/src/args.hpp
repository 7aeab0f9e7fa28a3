#pragma once

#include <hyperdelta/series.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperdelta::cli {

/// Malformed command-line input; exits 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A real flag value: any exact constant expression such as "0.5", "pi/2"
/// or "-3/4".
Real parse_real(std::string_view text, std::string_view flag);

/// "1", "-1/2", "(3/2)".
Exponent parse_exponent(std::string_view text, std::string_view flag);

/// Positive exponent q, returned as eta^q.
SeriesNumber eta_power(std::string_view text, std::string_view flag);

}  // namespace hyperdelta::cli
