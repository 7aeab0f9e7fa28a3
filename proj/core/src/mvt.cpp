#include <hyperdelta/error.hpp>
#include <hyperdelta/mvt.hpp>

namespace hyperdelta {

namespace {

constexpr int kMaxIterations = 64;

SeriesNumber mvt_residual(const Polynomial<Real>& p, const Real& x0, const SeriesNumber& h,
                          const SeriesNumber& theta) {
  const SeriesNumber x(x0);
  const auto dp = p.derivative();
  return p(x + h) - p(x) - h * dp(x + theta * h);
}

}  // namespace

MvtSolution mvt_theta(const Polynomial<Real>& p, const Real& x0, const SeriesNumber& h) {
  if (!h.is_real() || classify(h) != Classification::Infinitesimal)
    throw Error(ErrorCode::DomainError, "mvt_theta needs a real nonzero infinitesimal step");

  MvtSolution out;
  if (p.derivative().is_constant()) {
    out.degenerate = true;
    out.theta = SeriesNumber(Real(1) / 2);
    out.residual = mvt_residual(p, x0, h, out.theta);
    return out;
  }

  // p(x0 + t) = sum_j c_j t^j. Dividing the identity by h^{m+1} leaves
  //   Phi(theta) = sum_{j>=m} c_{j+1} ((j+1) theta^j - 1) h^{j-m} = 0
  // whose derivative in theta is appreciable near the root.
  const auto c = p.taylor_shift(x0);
  const int n = c.degree();
  Real scale = 0;
  for (const auto& x : c.coefficients()) scale = max(scale, Real(abs(x)));
  int m = 1;
  while (m < n - 1 && abs(c.coefficient(m + 1)) <= settings().tolerance * scale) ++m;

  std::vector<SeriesNumber> h_power{SeriesNumber(1)};
  for (int k = 1; k <= n - 1 - m; ++k) h_power.push_back(h_power.back() * h);

  auto phi = [&](const SeriesNumber& theta) {
    SeriesNumber sum;
    SeriesNumber theta_power = pow(theta, static_cast<unsigned>(m));
    for (int j = m; j <= n - 1; ++j) {
      if (j > m) theta_power = theta_power * theta;
      const Real& cj = c.coefficient(j + 1);
      sum += SeriesNumber(cj) * (SeriesNumber(Real(j + 1)) * theta_power - SeriesNumber(1)) *
             h_power[j - m];
    }
    return sum;
  };
  auto phi_prime = [&](const SeriesNumber& theta) {
    SeriesNumber sum;
    SeriesNumber theta_power = pow(theta, static_cast<unsigned>(m - 1));
    for (int j = m; j <= n - 1; ++j) {
      if (j > m) theta_power = theta_power * theta;
      const Real weight = c.coefficient(j + 1) * Real(j + 1) * Real(j);
      sum += SeriesNumber(weight) * theta_power * h_power[j - m];
    }
    return sum;
  };

  SeriesNumber theta(pow(Real(m + 1), -Real(1) / Real(m)));
  for (int it = 0; it < kMaxIterations; ++it) {
    const SeriesNumber value = phi(theta);
    if (value.is_zero()) {
      out.theta = theta;
      out.iterations = it;
      out.residual = mvt_residual(p, x0, h, theta);
      return out;
    }
    theta = theta - value * invert(phi_prime(theta));
  }
  throw Error(ErrorCode::NoSolution, "mean-value parameter did not settle");
}

}  // namespace hyperdelta
