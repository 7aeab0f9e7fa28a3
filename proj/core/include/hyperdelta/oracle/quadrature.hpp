#pragma once

#include <hyperdelta/error.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

/// Independent double-precision numerics used to cross-check the symbolic
/// layer. Nothing here depends on the series arithmetic.
namespace hyperdelta::oracle {

template <typename T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  long evaluations = 0;
};

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<std::complex<double>(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature. Stops when the
/// summed error estimate is below tol * max(1, |I|). Infinite endpoints are
/// mapped through x = t/(1 - t^2). Throws NoConvergence past the subdivision
/// cap.
QuadratureResult<double> integrate(const RealFunction& f, double a, double b, double tol = 1e-10);
QuadratureResult<std::complex<double>> integrate_complex(const ComplexFunction& f, double a, double b,
                                                 double tol = 1e-10);

/// Cauchy principal value of the integral of f over [a, b] where f has a
/// simple pole at c (a < c < b, endpoints may be infinite). The symmetric
/// pair f(c+s) + f(c-s) is integrated in s, so the pole cancels instead of
/// being excised. Throws PoleMisdeclared when the paired integrand still
/// blows up near s = 0.
QuadratureResult<double> pv_integrate(const RealFunction& f, double c, double a, double b, double tol = 1e-10);

struct Extrapolation {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Richardson extrapolation of I(alpha) to alpha -> 0+ along a decreasing
/// ladder, assuming an error expansion in powers alpha^{p}, alpha^{2p}, ...
/// Throws NonMonotone when successive ladder differences do not shrink.
Extrapolation alpha_extrapolate(const std::function<double(double)>& family, const std::vector<double>& ladder,
                                double order = 1.0);

/// Geometric ladder from `largest` down by `ratio`, `count` entries.
std::vector<double> geometric_ladder(double largest, double ratio, int count);

}  // namespace hyperdelta::oracle
