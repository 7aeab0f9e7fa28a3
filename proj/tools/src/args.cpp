#include "args.hpp"

#include <hyperdelta/lang/eval.hpp>
#include <hyperdelta/lang/expr.hpp>

#include <charconv>

namespace hyperdelta::cli {

Real parse_real(std::string_view text, std::string_view flag) {
  const std::string where = std::string(flag) + ": ";
  SeriesNumber s;
  try {
    s = lang::evaluate_series(*lang::parse_expr(text));
  } catch (const Error& e) {
    throw UsageError(where + e.what());
  }
  const bool constant = s.is_exact() && s.is_real() && (s.is_zero() || (s.terms().size() == 1 && s.leading_exponent() == 0));
  if (!constant) throw UsageError(where + "expected a real constant, got '" + std::string(text) + "'");
  return s.is_zero() ? Real(0) : s.leading_coefficient().re;
}

Exponent parse_exponent(std::string_view text, std::string_view flag) {
  std::string t(text);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw UsageError(std::string(flag) + ": expected a rational exponent like 1/2, got '" + std::string(text) + "'");
    return v;
  };
  const auto slash = t.find('/');
  const std::int64_t num = read(std::string_view(t).substr(0, slash));
  const std::int64_t den = slash == std::string::npos ? 1 : read(std::string_view(t).substr(slash + 1));
  if (den == 0) throw UsageError(std::string(flag) + ": zero denominator");
  return Exponent(num, den);
}

SeriesNumber eta_power(std::string_view text, std::string_view flag) {
  const Exponent q = parse_exponent(text, flag);
  if (q <= 0) throw UsageError(std::string(flag) + ": exponent must be positive (an infinitesimal)");
  return SeriesNumber::eta(q);
}

}  // namespace hyperdelta::cli
