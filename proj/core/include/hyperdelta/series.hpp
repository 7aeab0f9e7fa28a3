#pragma once

#include <hyperdelta/scalar.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperdelta {

enum class Classification { Zero, Infinitesimal, Appreciable, Infinite };
enum class Ordering { Less, Equal, Greater };

std::string_view to_string(Classification c);
std::string_view to_string(Ordering o);

/// Truncated generalized power series in one positive infinitesimal eta,
/// with rational exponents and complex coefficients:
///
///     sum_k c_k eta^{q_k}  +  O(eta^T)
///
/// Terms are kept sorted by strictly increasing exponent, no stored
/// coefficient is zero within the coefficient tolerance, and every exponent
/// is below the truncation order T. A series without a truncation order is
/// exact (a finite sum).
///
/// Values are immutable; all arithmetic returns new series.
class SeriesNumber {
 public:
  struct Term {
    Exponent exponent;
    Complex coefficient;
  };

  /// The exact zero.
  SeriesNumber() = default;
  SeriesNumber(Real value);     // NOLINT: reals embed as constant series
  SeriesNumber(Complex value);  // NOLINT
  SeriesNumber(int value);      // NOLINT

  /// Builds from an arbitrary term list: sorts, merges equal exponents, drops
  /// negligible coefficients and anything at or beyond the truncation order.
  static SeriesNumber from_terms(std::vector<Term> terms,
                                 std::optional<Exponent> truncation = std::nullopt);

  /// c * eta^q, exact.
  static SeriesNumber monomial(Complex coefficient, Exponent exponent);

  /// eta^q, exact.
  static SeriesNumber eta(Exponent exponent = Exponent(1));

  /// The unknown remainder O(eta^q) on its own.
  static SeriesNumber big_o(Exponent order);

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Exponent>& truncation() const { return truncation_; }
  bool is_exact() const { return !truncation_.has_value(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;

  /// Exponent of the leading (lowest-order) term. Requires !is_zero().
  const Exponent& leading_exponent() const;
  const Complex& leading_coefficient() const;

  /// Coefficient of eta^q (zero when absent).
  Complex coefficient(const Exponent& q) const;

  /// Drops every term with exponent >= order and lowers the truncation order.
  SeriesNumber truncated(const Exponent& order) const;

  /// Multiplies by eta^q (exact shift of every exponent).
  SeriesNumber shifted(const Exponent& q) const;

  SeriesNumber operator-() const;

  friend SeriesNumber operator+(const SeriesNumber& a, const SeriesNumber& b);
  friend SeriesNumber operator-(const SeriesNumber& a, const SeriesNumber& b);
  friend SeriesNumber operator*(const SeriesNumber& a, const SeriesNumber& b);
  friend SeriesNumber operator/(const SeriesNumber& a, const SeriesNumber& b);

  SeriesNumber& operator+=(const SeriesNumber& b) { return *this = *this + b; }
  SeriesNumber& operator-=(const SeriesNumber& b) { return *this = *this - b; }
  SeriesNumber& operator*=(const SeriesNumber& b) { return *this = *this * b; }

 private:
  void normalize();

  std::vector<Term> terms_;
  std::optional<Exponent> truncation_;
};

SeriesNumber add(const SeriesNumber& a, const SeriesNumber& b);
SeriesNumber mul(const SeriesNumber& a, const SeriesNumber& b);

/// Multiplicative inverse by geometric expansion about the leading term.
/// Throws ZeroDivision for the zero series.
SeriesNumber invert(const SeriesNumber& a);

/// Non-negative integer power by repeated squaring.
SeriesNumber pow(const SeriesNumber& a, unsigned n);

/// Total order on real series. Throws NotOrdered for nonreal operands.
Ordering compare(const SeriesNumber& a, const SeriesNumber& b);

Classification classify(const SeriesNumber& a);
inline bool is_finite(const SeriesNumber& a) { return classify(a) != Classification::Infinite; }

/// Coefficient of eta^0. Throws NotFinite for infinite values and NotOrdered
/// when that coefficient has a nonzero imaginary part.
Real standard_part(const SeriesNumber& a);
Complex complex_standard_part(const SeriesNumber& a);

/// Term lists agree exponent by exponent with coefficients equal within tol
/// (relative to the larger magnitude, absolute below 1), up to the lower of
/// the two truncation orders. Truncation orders themselves are not compared.
bool approx_equal(const SeriesNumber& a, const SeriesNumber& b, const Real& tol);

/// Exponent of the first term of a, or its truncation order if it has no
/// terms (infinity, represented as nullopt, for the exact zero).
std::optional<Exponent> order_of(const SeriesNumber& a);

}  // namespace hyperdelta
