#include <hyperdelta/roots.hpp>

namespace hyperdelta {

namespace {

Complex evaluate(const std::vector<Complex>& c, const Complex& z) {
  Complex acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

std::vector<Complex> polynomial_roots(const Polynomial<Real>& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::DomainError, "roots of a constant polynomial");

  // Monic complex coefficients.
  std::vector<Complex> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x / p.leading());

  Real radius = 0;
  for (int k = 0; k < n; ++k) radius = max(radius, Real(abs(c[static_cast<std::size_t>(k)])));
  radius += 1;

  std::vector<Complex> z(static_cast<std::size_t>(n));
  const Complex seed(Real("0.4"), Real("0.9"));
  Complex power(1);
  for (auto& zi : z) {
    power *= seed;
    zi = power * Complex(radius);
  }

  const Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(settings().digits) + 6);
  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    Real largest_step = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex denom(1);
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom.is_zero()) denom = Complex(eps);
      const Complex step = evaluate(c, z[i]) / denom;
      z[i] -= step;
      largest_step = max(largest_step, Real(abs(step) / max(Real(1), abs(z[i]))));
    }
    converged = largest_step <= eps;
  }
  if (!converged) throw Error(ErrorCode::NoConvergence, "polynomial root iteration did not settle");

  // Newton polish on the original coefficients.
  std::vector<Complex> dc;
  for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(c[k] * Complex(Real(static_cast<long>(k))));
  for (auto& zi : z) {
    for (int k = 0; k < 3; ++k) {
      const Complex d = evaluate(dc, zi);
      if (d.is_zero()) break;
      zi -= evaluate(c, zi) / d;
    }
  }
  return z;
}

}  // namespace hyperdelta
