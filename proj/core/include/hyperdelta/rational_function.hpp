#pragma once

#include <hyperdelta/polynomial.hpp>
#include <hyperdelta/scalar.hpp>

#include <string>
#include <string_view>

namespace hyperdelta {

/// Quotient of two polynomials with exact rational coefficients, kept in
/// lowest terms with a monic denominator so equal functions compare equal.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Polynomial<Rational> numerator);  // NOLINT
  RationalFunction(Polynomial<Rational> numerator, Polynomial<Rational> denominator);

  const Polynomial<Rational>& numerator() const { return num_; }
  const Polynomial<Rational>& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value; throws ZeroDivision at a root of the denominator.
  Rational operator()(const Rational& x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  Polynomial<Rational> num_;
  Polynomial<Rational> den_;
};

/// Text form accepted back by the expression parser, e.g. "(2*n^2 + 1)/(n^2)".
std::string to_string(const Polynomial<Rational>& p, std::string_view variable = "x");
std::string to_string(const RationalFunction& f, std::string_view variable = "x");

/// Largest positive integer root of p, or 0 when there is none.
long largest_positive_integer_root(const Polynomial<Rational>& p);

}  // namespace hyperdelta
