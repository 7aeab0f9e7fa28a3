#pragma once

#include <hyperdelta/oracle/quadrature.hpp>

namespace hyperdelta::oracle {

/// Real-alpha counterparts of the symbolic kernel integrals, by quadrature
/// in the original variable.

/// 1/2 of the integral of F(mu) alpha/(alpha^2 + (mu-a)^2) over [a-eps, a+eps].
double sift_integral(const RealFunction& f, double a, double alpha, double eps, double tol = 1e-12);

/// Integral of alpha/(alpha^2 + x^2) over the real line.
double kernel_mass(double alpha, double tol = 1e-12);

}  // namespace hyperdelta::oracle
