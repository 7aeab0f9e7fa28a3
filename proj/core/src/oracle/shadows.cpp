#include <hyperdelta/oracle/shadows.hpp>

#include <cmath>

namespace hyperdelta::oracle {

double sift_integral(const RealFunction& f, double a, double alpha, double eps, double tol) {
  // Integrate in d = mu - a so the kernel never sees the rounding of a + d.
  auto g = [&](double d) { return f(a + d) * alpha / (alpha * alpha + d * d); };
  // Split at the peak and again at a few widths so each piece is smooth on
  // its own scale.
  double total = 0.0;
  double lo = 0.0;
  for (double width : {alpha, 10 * alpha, 100 * alpha, 1e4 * alpha, eps}) {
    const double hi = std::min(width, eps);
    if (hi <= lo) continue;
    total += integrate(g, lo, hi, tol).value + integrate(g, -hi, -lo, tol).value;
    lo = hi;
  }
  return total / 2;
}

double kernel_mass(double alpha, double tol) {
  auto g = [alpha](double x) { return alpha / (alpha * alpha + x * x); };
  return 2 * (integrate(g, 0.0, alpha, tol).value + integrate(g, alpha, INFINITY, tol).value);
}

}  // namespace hyperdelta::oracle
