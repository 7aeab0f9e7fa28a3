#include <hyperdelta/kernels.hpp>

#include <hyperdelta/analytic.hpp>
#include <hyperdelta/oracle/quadrature.hpp>

#include <cmath>

namespace hyperdelta::kernels {

namespace mp = boost::multiprecision;

namespace {

bool positive(const SeriesNumber& x) {
  return x.is_real() && !x.is_zero() && compare(x, SeriesNumber(0)) == Ordering::Greater;
}

void require_positive_infinitesimal(const SeriesNumber& x, const char* name) {
  if (!positive(x) || classify(x) != Classification::Infinitesimal)
    throw Error(ErrorCode::DomainError, std::string(name) + " must be a positive infinitesimal");
}

SeriesNumber scalar(const Real& x) { return SeriesNumber(x); }

// Horner in double, independent of the Real-valued evaluation.
double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> to_doubles(const Polynomial<Rational>& p) {
  std::vector<double> out;
  for (const auto& c : p.coefficients()) out.push_back(c.convert_to<double>());
  return out;
}

}  // namespace

SeriesNumber cauchy_kernel(const SeriesNumber& mu, const Real& a, const SeriesNumber& alpha) {
  require_positive_infinitesimal(alpha, "alpha");
  const SeriesNumber d = mu - scalar(a);
  return alpha * invert(alpha * alpha + d * d);
}

SeriesNumber normalized_kernel(const SeriesNumber& x, const SeriesNumber& alpha) {
  return cauchy_kernel(x, Real(0), alpha) * scalar(Real(1) / pi());
}

bool laugwitz_condition(const SeriesNumber& alpha, const SeriesNumber& eps) {
  if (!positive(alpha) || !positive(eps))
    throw Error(ErrorCode::DomainError, "alpha and eps must be positive");
  return compare(eps * eps, alpha) != Ordering::Less;
}

SiftReport sift(const TestFunction& f, const Window& window, const SeriesNumber& alpha) {
  if (!window.symmetric)
    throw Error(ErrorCode::UnsupportedWindow, "symbolic sifting needs a symmetric window");
  return sift(f, window.center, alpha, window.half_width);
}

SiftReport sift(const TestFunction& f, const Real& a, const SeriesNumber& alpha, const SeriesNumber& eps) {
  require_positive_infinitesimal(alpha, "alpha");
  if (!positive(eps)) throw Error(ErrorCode::DomainError, "window half-width must be positive");
  if (f.kind() == TestFunction::Kind::Rational)
    throw Error(ErrorCode::UnsupportedFunction, "sifting takes polynomial or trig test functions");

  SiftReport report;
  report.ratio = eps * invert(alpha);
  report.ratio_class = classify(report.ratio);
  report.laugwitz_ok = laugwitz_condition(alpha, eps);

  const Exponent a_lead = alpha.leading_exponent();
  const Exponent e_lead = eps.leading_exponent();
  const Exponent t_lead = report.ratio.leading_exponent();

  // Even Taylor orders 0, 2, ..., 2M. For a trig sum the tail m > M is
  // bounded below in exponent by a + (2m-1)e (T infinite) or 2m a.
  std::size_t top = 0;
  std::optional<Exponent> tail_order;
  if (f.kind() == TestFunction::Kind::Polynomial) {
    const int deg = f.as_polynomial().degree();
    top = deg < 0 ? 0 : static_cast<std::size_t>(deg / 2);
  } else {
    if (e_lead <= 0)
      throw Error(ErrorCode::UnsupportedWindow, "trig sifting needs an infinitesimal half-width");
    const Exponent target = settings().truncation + (t_lead > 0 ? t_lead : Exponent(0));
    auto tail = [&](std::size_t m) {
      const Exponent mm(static_cast<std::int64_t>(m));
      return t_lead < 0 ? a_lead + (2 * mm - 1) * e_lead : 2 * mm * a_lead;
    };
    while (top < 64 && tail(top + 1) < target) ++top;
    tail_order = tail(top + 1);
  }
  const std::vector<Real> c = f.taylor(a, 2 * top + 1);

  const SeriesNumber& T = report.ratio;
  const SeriesNumber at = arctan_ext(T);
  const SeriesNumber T2 = T * T;
  const SeriesNumber alpha2 = alpha * alpha;
  SeriesNumber alpha_power(1);
  SeriesNumber value(0);
  for (std::size_t m = 0; m <= top; ++m, alpha_power *= alpha2) {
    if (2 * m >= c.size() || c[2 * m] == 0) continue;
    SeriesNumber J = (m % 2 == 0) ? at : -at;
    SeriesNumber Tp = T;
    for (std::size_t i = 0; i < m; ++i, Tp *= T2) {
      const Real w = Real(1) / Real(2 * i + 1);
      J += ((m - 1 - i) % 2 == 0) ? Tp * scalar(w) : Tp * scalar(-w);
    }
    value += scalar(c[2 * m]) * alpha_power * J;
  }
  if (tail_order) value = value.truncated(*tail_order);
  report.value = value;
  report.st = standard_part(value);

  const Real fa = f.value(a);
  switch (report.ratio_class) {
    case Classification::Infinite: report.expected = fa * pi() / 2; break;
    case Classification::Appreciable: report.expected = fa * mp::atan(standard_part(T)); break;
    default: report.expected = 0; break;
  }
  report.residual_leading_exponent = order_of(value - scalar(report.st));
  return report;
}

PiMultiple arctan_limit(int direction, const SeriesNumber& alpha) {
  if (!positive(alpha)) throw Error(ErrorCode::DomainError, "alpha must be positive");
  if (direction == 0) throw Error(ErrorCode::DomainError, "direction must be nonzero");
  // x/alpha -> sign(direction) * infinity, arctan -> +-pi/2.
  return PiMultiple{Exponent(direction > 0 ? 1 : -1, 2)};
}

PiMultiple kernel_mass(const SeriesNumber& alpha) {
  return PiMultiple{arctan_limit(1, alpha).multiple - arctan_limit(-1, alpha).multiple};
}

DiracReport dirac_conditions(const SeriesNumber& alpha, const TestFunction& f, const std::vector<Real>& probes) {
  require_positive_infinitesimal(alpha, "alpha");
  DiracReport report;
  // (1/pi) * (pi * k) = k, exactly.
  report.mass = kernel_mass(alpha).multiple;
  report.mass_ok = report.mass == Exponent(1);
  report.unit_window_mass = arctan_ext(invert(alpha)) * scalar(Real(2) / pi());

  report.locality_ok = true;
  for (const auto& x : probes) {
    const Classification k = classify(normalized_kernel(scalar(x), alpha));
    report.probes.emplace_back(x, k);
    if (x != 0 && k != Classification::Infinitesimal) report.locality_ok = false;
  }

  // The narrowest admissible window, eps = alpha^{1/2}. Only exact monomial
  // alphas have an exact square root here.
  SeriesNumber eps;
  if (alpha.terms().size() == 1 && alpha.is_exact()) {
    eps = SeriesNumber::monomial(Complex(mp::sqrt(alpha.leading_coefficient().re)), alpha.leading_exponent() / 2);
  } else {
    eps = SeriesNumber::eta(alpha.leading_exponent() / 3);  // still satisfies eps^2 >= alpha
  }
  report.sifting = sift(f, Real(0), alpha, eps);
  report.sifting.value = report.sifting.value * scalar(Real(2) / pi());
  report.sifting.st = standard_part(report.sifting.value);
  report.sifting.expected = report.sifting.expected * 2 / pi();
  report.sifting.residual_leading_exponent = order_of(report.sifting.value - scalar(report.sifting.st));
  report.sift_st = report.sifting.st;
  report.f_at_zero = f.value(Real(0));
  report.sifting_ok = mp::abs(report.sift_st - report.f_at_zero) <=
                      settings().tolerance * mp::max(Real(1), Real(mp::abs(report.f_at_zero)));
  return report;
}

SokhotskiReport sokhotski(const TestFunction& phi, const SeriesNumber& alpha) {
  if (phi.kind() != TestFunction::Kind::Rational)
    throw Error(ErrorCode::UnsupportedFunction, "sokhotski takes a rational test function");
  require_positive_infinitesimal(alpha, "alpha");
  const RationalFunction& r = phi.as_rational();
  if (r.denominator().degree() < r.numerator().degree() + 1)
    throw Error(ErrorCode::UnsupportedFunction, "phi must decay at infinity (deg den >= deg num + 1)");

  const auto poles = phi.poles();
  const Real real_axis = Real(10) * mp::pow(Real(10), -static_cast<int>(settings().digits / 2));
  for (const auto& p : poles)
    if (mp::abs(p.location.im) <= real_axis)
      throw Error(ErrorCode::UnsupportedFunction, "phi has a pole on the real axis");

  // Upper half-plane closure; the kernel pole -i alpha lies below the axis.
  // With deg den = deg num + 1 the arc term vanishes because phi(x)/(x + i alpha)
  // still decays like 1/x^2.
  SokhotskiReport report;
  const Complex i_unit(Real(0), Real(1));
  const SeriesNumber i_alpha = SeriesNumber(i_unit) * alpha;
  SeriesNumber value(0);
  for (const auto& p : poles) {
    if (p.location.im <= 0) continue;
    const Complex weight = Complex(Real(0), 2 * pi()) * p.residue;
    value += SeriesNumber(weight) * invert(SeriesNumber(p.location) + i_alpha);
  }
  report.value = value;
  report.st = complex_standard_part(value);
  report.pv_part = report.st.re;
  report.delta_part = report.st.im;
  report.phi_at_zero = phi.value(Real(0));

  const Real target = -pi() * report.phi_at_zero;
  report.delta_ok = mp::abs(report.delta_part - target) <=
                    settings().tolerance * mp::max(Real(1), Real(mp::abs(target)));

  const auto num = to_doubles(r.numerator());
  const auto den = to_doubles(r.denominator());
  auto integrand = [&](double x) { return horner(num, x) / (horner(den, x) * x); };
  report.pv_oracle = oracle::pv_integrate(integrand, 0.0, -INFINITY, INFINITY, 1e-11).value;
  report.pv_ok = std::abs(to_double(report.pv_part) - report.pv_oracle) <= 1e-5;
  return report;
}

SeriesNumber fourier_kernel(const Real& x, const Real& mu, const SeriesNumber& eps) {
  require_positive_infinitesimal(eps, "eps");
  const Real c = mp::cos(Real(x - mu));
  const SeriesNumber theta = SeriesNumber(1) - eps;
  const SeriesNumber num = eps * (eps + scalar(2 * c));
  const SeriesNumber den = SeriesNumber(1) - scalar(2 * c) * theta + theta * theta;
  return num * invert(den);
}

SeriesNumber fourier_kernel_direct(const Real& x, const Real& mu, const SeriesNumber& eps) {
  require_positive_infinitesimal(eps, "eps");
  const Real d = x - mu;
  const Complex e_minus(mp::cos(d), Real(-mp::sin(d)));
  const Complex e_plus(mp::cos(d), Real(mp::sin(d)));
  const SeriesNumber theta = SeriesNumber(1) - eps;
  return SeriesNumber(1) + invert(SeriesNumber(e_minus) - theta) + invert(SeriesNumber(e_plus) - theta);
}

Real fourier_kernel_value(const Real& d, const Real& eps) {
  const Real c = mp::cos(d);
  const Real theta = 1 - eps;
  return eps * (eps + 2 * c) / (1 - 2 * theta * c + theta * theta);
}

Complex fourier_kernel_direct_value(const Real& d, const Real& eps) {
  const Real theta = 1 - eps;
  const Complex e_minus(Real(mp::cos(d) - theta), Real(-mp::sin(d)));
  const Complex e_plus(Real(mp::cos(d) - theta), Real(mp::sin(d)));
  return Complex(1) + Complex(1) / e_minus + Complex(1) / e_plus;
}

SeriesNumber fourier_reduced_integral(const Real& f_at_x, const Real& x, const SeriesNumber& eps) {
  if (!(x > 0 && x < 2 * pi()))
    throw Error(ErrorCode::DomainError, "x must lie strictly between 0 and 2 pi");
  require_positive_infinitesimal(eps, "eps");
  const SeriesNumber inv = invert(eps);
  const SeriesNumber upper = arctan_ext(scalar(Real(2 * pi() - x)) * inv);
  const SeriesNumber lower = arctan_ext(scalar(x) * inv);
  return scalar(2 * f_at_x) * (upper + lower);
}

Real heaviside_st(const Real& x, const SeriesNumber& alpha) {
  require_positive_infinitesimal(alpha, "alpha");
  return standard_part(arctan_ext(scalar(x) * invert(alpha)));
}

bool on_zigzag(const Real& x, const Real& y) {
  const Real half = pi() / 2;
  const Real tol = settings().tolerance * 4;
  if (x < 0) return mp::abs(y + half) <= tol;
  if (x > 0) return mp::abs(y - half) <= tol;
  return y >= -half - tol && y <= half + tol;
}

bool zigzag_check(const std::vector<Real>& samples, const SeriesNumber& alpha) {
  for (const auto& x : samples)
    if (!on_zigzag(x, heaviside_st(x, alpha))) return false;
  return true;
}

Real to_unit_step(const Real& y) { return y / pi() + Real(1) / 2; }

}  // namespace hyperdelta::kernels
