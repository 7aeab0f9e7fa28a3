#include <hyperdelta/lang/printer.hpp>

namespace hyperdelta::lang {

namespace {

std::string exponent_suffix(const Exponent& q) {
  if (q == 1) return "eta";
  if (q.denominator() == 1 && q > 0) return "eta^" + to_string(q);
  return "eta^(" + to_string(q) + ")";
}

}  // namespace

std::string format_series(const SeriesNumber& s, unsigned digits) {
  if (digits == 0) digits = settings().digits + 5;
  std::string out;
  for (const auto& t : s.terms()) {
    const Complex& c = t.coefficient;
    std::string body;
    bool negative = false;
    if (c.im == 0) {
      negative = c.re < 0;
      Real magnitude = negative ? Real(-c.re) : c.re;
      if (magnitude == 1 && t.exponent != 0) body = exponent_suffix(t.exponent);
      else body = to_decimal(magnitude, digits) + (t.exponent != 0 ? "*" + exponent_suffix(t.exponent) : "");
    } else {
      std::string z = "(" + to_decimal(c.re, digits) + (c.im < 0 ? " - " : " + ") +
                      to_decimal(c.im < 0 ? Real(-c.im) : c.im, digits) + "*i)";
      body = t.exponent != 0 ? z + "*" + exponent_suffix(t.exponent) : z;
    }
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  if (s.truncation()) {
    const std::string big_o = "O(" + exponent_suffix(*s.truncation()) + ")";
    out = out.empty() ? big_o : out + " + " + big_o;
  }
  return out.empty() ? "0" : out;
}

}  // namespace hyperdelta::lang
