#pragma once

#include <hyperdelta/rational_function.hpp>
#include <hyperdelta/scalar.hpp>

#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

/// Rings of scalar sequences modulo the eventually-zero ideal F_ez and the
/// null-sequence ideal F_null. No maximal ideal is built: that needs a
/// nonprincipal ultrafilter, whose existence is a choice principle and has
/// no construction.
namespace hyperdelta::seq {

enum class Answer { Yes, No, Unknown };
enum class Ideal { EventuallyZero, Null };

std::string_view to_string(Answer a);
std::string_view to_string(Ideal i);

/// A sequence u_1, u_2, ... given either as
///  - Symbolic: a rational function of n with rational coefficients, defined
///    from start_index() on;
///  - Periodic: a finite repeating pattern of rationals (u_n = p[(n-1) mod k]);
///  - Opaque: a side-effect-free closure n -> Real, queried up to the probe
///    horizon and answered three-valued.
class SeqNumber {
 public:
  enum class Kind { Symbolic, Periodic, Opaque };
  using Closure = std::function<Real(std::uint64_t)>;

  static SeqNumber symbolic(RationalFunction generator);
  static SeqNumber constant(const Rational& c);
  static SeqNumber periodic(std::vector<Rational> pattern);
  static SeqNumber opaque(Closure f, std::uint64_t probe_horizon = 1000, std::uint64_t start = 1);

  /// Parses "poly/poly" in the variable n, e.g. "(2*n^2+1)/(n^2)".
  static SeqNumber parse(std::string_view text);

  Kind kind() const { return kind_; }
  const RationalFunction& generator() const;
  const std::vector<Rational>& pattern() const;
  std::uint64_t start_index() const { return start_; }
  std::uint64_t probe_horizon() const { return horizon_; }

  /// u_n; n must be at least start_index().
  Real value(std::uint64_t n) const;

  friend SeqNumber operator+(const SeqNumber& a, const SeqNumber& b);
  friend SeqNumber operator-(const SeqNumber& a, const SeqNumber& b);
  friend SeqNumber operator*(const SeqNumber& a, const SeqNumber& b);
  SeqNumber operator-() const;

 private:
  Kind kind_ = Kind::Symbolic;
  RationalFunction gen_;
  std::vector<Rational> pattern_;
  Closure closure_;
  std::uint64_t start_ = 1;
  std::uint64_t horizon_ = 1000;
};

SeqNumber seq_add(const SeqNumber& a, const SeqNumber& b);
SeqNumber seq_mul(const SeqNumber& a, const SeqNumber& b);

/// Exact for Symbolic and Periodic sequences. For Opaque ones: No when the
/// last quarter of the probe window still shows the defining failure
/// (nonzero values for F_ez, no decay for F_null); Unknown otherwise.
Answer in_ideal(const SeqNumber& a, Ideal which);

/// in_ideal(a - b, which)
Answer equals_mod(const SeqNumber& a, const SeqNumber& b, Ideal which);

/// (1,0,1,0,...) and (0,1,0,1,...): neither is eventually zero, their
/// product is identically zero, so the quotient by F_ez is not a domain.
std::pair<SeqNumber, SeqNumber> zero_divisor_witness();

struct Limit {
  Real value;
  bool exact = false;        // certified (Symbolic/Periodic)
  Rational exact_value = 0;  // valid when exact
};

/// st as the ordinary limit. Symbolic: by degree comparison. Throws
/// NotConvergent for divergent symbolic or non-constant periodic sequences.
/// Opaque: the value at the probe horizon, flagged as not exact.
Limit seq_standard_part(const SeqNumber& a);

/// The sequence u_n = sum_k c_k n^{-q_k} obtained from a finite eta-power
/// series with integer exponents by substituting eta = 1/n.
SeqNumber at_reciprocal_index(const std::vector<std::pair<std::int64_t, Rational>>& terms);

}  // namespace hyperdelta::seq
