#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace boost {
// Boost 1.74's mixed rational/integer operator== recurses forever under the
// C++20 reversed-operand rewrite. Exact-match overloads sidestep it.
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(long b, const rational<std::int64_t>& a) { return a.denominator() == 1 && a.numerator() == b; }
}  // namespace boost

namespace hyperdelta {

/// High-precision real scalar. Precision is the process-wide MPFR default,
/// set through configure().
using Real = boost::multiprecision::mpfr_float;

/// Exact rational exponent of the infinitesimal generator.
using Exponent = boost::rational<std::int64_t>;

/// Arbitrary-precision exact rational, used for symbolic coefficients.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Exponent& q);

/// Complex scalar over Real. std::complex is unspecified for non-builtin
/// element types, so the handful of operations needed live here.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit embedding of reals
  Complex(int r) : re(r), im(0) {}               // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

  bool is_zero() const { return re == 0 && im == 0; }
};

Real abs(const Complex& z);
Complex conj(const Complex& z);
Complex pow(Complex z, int n);

/// Process-wide numeric configuration. Set once at startup (before values are
/// shared across threads); values created afterwards carry its precision.
struct Settings {
  unsigned digits = 40;           // significant decimal digits of Real
  Exponent truncation{8};         // relative truncation order T
  Real tolerance{"1e-20"};        // relative coefficient zero-tolerance tau_c
};

const Settings& settings();

/// Reconfigures precision and truncation. The tolerance follows the precision:
/// 1e-20, or 10^-(digits-8) when the precision is too low to support it.
void configure(unsigned digits, Exponent truncation);

/// RAII override of the truncation order, for tests and local computations.
class ScopedTruncation {
 public:
  explicit ScopedTruncation(Exponent truncation);
  ~ScopedTruncation();
  ScopedTruncation(const ScopedTruncation&) = delete;
  ScopedTruncation& operator=(const ScopedTruncation&) = delete;

 private:
  Exponent saved_;
};

Real pi();

/// Rounds a rational to the working precision.
Real to_real(const Exponent& q);
Real to_real(const Rational& q);

/// Exact value of a decimal literal such as "12", "-0.25" or "1.5e-3".
/// Throws DomainError on anything else.
Rational parse_decimal(std::string_view text);

/// Decimal rendering with the given number of significant digits (0 = the
/// full working precision plus guard digits).
std::string to_decimal(const Real& x, unsigned digits = 0);

inline double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace hyperdelta
