#include <hyperdelta/error.hpp>
#include <hyperdelta/scalar.hpp>

#include <boost/math/constants/constants.hpp>

#include <cctype>
#include <sstream>

namespace hyperdelta {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::NotOrdered: return "NotOrdered";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::SeedDomain: return "SeedDomain";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::UnsupportedWindow: return "UnsupportedWindow";
    case ErrorCode::NeedsLog: return "NeedsLog";
    case ErrorCode::UnsupportedFunction: return "UnsupportedFunction";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::PoleMisdeclared: return "PoleMisdeclared";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NotConvergent: return "NotConvergent";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonRationalExponent: return "NonRationalExponent";
  }
  return "Unknown";
}

std::string to_string(const Exponent& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroDivision, "complex division by zero");
  if (o.im == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  Real den = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / den;
  Real i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Real abs(const Complex& z) {
  if (z.im == 0) return boost::multiprecision::abs(z.re);
  if (z.re == 0) return boost::multiprecision::abs(z.im);
  return boost::multiprecision::hypot(z.re, z.im);
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex pow(Complex z, int n) {
  if (n < 0) return pow(Complex(1) / z, -n);
  Complex result(1);
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

namespace {

Real tolerance_for(unsigned digits) {
  if (digits >= 28) return Real("1e-20");
  return boost::multiprecision::pow(Real(10), -static_cast<int>(digits) + 8);
}

Settings& mutable_settings() {
  static Settings s = [] {
    Real::default_precision(40);
    Settings init;
    init.tolerance = tolerance_for(init.digits);
    return init;
  }();
  return s;
}

// Pin the working precision before any other static Real is created.
[[maybe_unused]] const bool precision_initialized = (mutable_settings(), true);

}  // namespace

const Settings& settings() { return mutable_settings(); }

void configure(unsigned digits, Exponent truncation) {
  if (digits < 16) throw Error(ErrorCode::DomainError, "precision must be at least 16 digits");
  if (truncation <= 0) throw Error(ErrorCode::DomainError, "truncation order must be positive");
  Real::default_precision(digits);
  auto& s = mutable_settings();
  s.digits = digits;
  s.truncation = truncation;
  s.tolerance = tolerance_for(digits);
}

ScopedTruncation::ScopedTruncation(Exponent truncation) : saved_(settings().truncation) {
  mutable_settings().truncation = truncation;
}

ScopedTruncation::~ScopedTruncation() { mutable_settings().truncation = saved_; }

Real pi() { return boost::math::constants::pi<Real>(); }

Real to_real(const Exponent& q) { return Real(q.numerator()) / Real(q.denominator()); }

std::string to_decimal(const Real& x, unsigned digits) {
  if (digits == 0) digits = settings().digits;
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(digits)) << x;
  return os.str();
}

}  // namespace hyperdelta

namespace hyperdelta {

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q).str()) /
         Real(boost::multiprecision::denominator(q).str());
}

Rational parse_decimal(std::string_view text) {
  using boost::multiprecision::cpp_int;
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  cpp_int mantissa = 0;
  long scale = 0;
  bool any_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    mantissa = mantissa * 10 + (text[i++] - '0');
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mantissa = mantissa * 10 + (text[i++] - '0');
      --scale;
      any_digit = true;
    }
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    long e = 0;
    bool exp_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i++] - '0');
      exp_digit = true;
      if (e > 100000) throw Error(ErrorCode::DomainError, "decimal exponent out of range");
    }
    if (!exp_digit) throw Error(ErrorCode::DomainError, "malformed decimal literal '" + std::string(text) + "'");
    scale += exp_negative ? -e : e;
  }
  if (!any_digit || i != text.size())
    throw Error(ErrorCode::DomainError, "malformed decimal literal '" + std::string(text) + "'");
  cpp_int power = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  Rational value = scale < 0 ? Rational(mantissa, power) : Rational(mantissa * power);
  return negative ? Rational(-value) : value;
}

}  // namespace hyperdelta
