#pragma once

#include <hyperdelta/series.hpp>
#include <hyperdelta/test_function.hpp>

#include <optional>
#include <vector>

/// Delta-kernel integrals over infinitesimal and infinite windows, evaluated
/// in closed form on series numbers. Improper integrals over the real line
/// are two-sided arctan limits, never numeric limits.
namespace hyperdelta::kernels {

/// Integration window [center - half_width, center + half_width].
struct Window {
  Real center{0};
  SeriesNumber half_width;
  bool symmetric = true;
};

struct SiftReport {
  SeriesNumber value;
  Real st{0};
  Real expected{0};
  SeriesNumber ratio;                // T = eps / alpha
  Classification ratio_class = Classification::Zero;
  bool laugwitz_ok = false;
  /// Lowest exponent of value - st; nullopt when that difference is the
  /// exact zero.
  std::optional<Exponent> residual_leading_exponent;
};

/// A real number stored as an exact rational multiple of pi.
struct PiMultiple {
  Exponent multiple;
  Real value() const { return pi() * to_real(multiple); }
};

/// alpha / (alpha^2 + (mu - a)^2)
SeriesNumber cauchy_kernel(const SeriesNumber& mu, const Real& a, const SeriesNumber& alpha);

/// (1/pi) alpha / (alpha^2 + x^2), unit mass.
SeriesNumber normalized_kernel(const SeriesNumber& x, const SeriesNumber& alpha);

/// 1/2 of the integral of F(mu) alpha/(alpha^2 + (mu-a)^2) over the window.
///
/// Substituting mu = a + alpha t leaves 1/2 of the integral of
/// F(a + alpha t)/(1 + t^2) over [-T, T], T = eps/alpha. Odd Taylor terms of F
/// cancel on the symmetric window and each even one integrates in closed form:
///
///   int_{-T}^{T} t^{2m}/(1+t^2) dt
///     = 2 [ sum_{i<m} (-1)^{m-1-i} T^{2i+1}/(2i+1) + (-1)^m arctan T ].
///
/// F may be a polynomial (exact) or a trig sum (Taylor-truncated; the
/// truncation order of the value accounts for the dropped terms).
/// Throws UnsupportedWindow for asymmetric windows, UnsupportedFunction for
/// rational F, DomainError unless alpha is a positive infinitesimal and the
/// half-width is positive.
SiftReport sift(const TestFunction& f, const Window& window, const SeriesNumber& alpha);
SiftReport sift(const TestFunction& f, const Real& a, const SeriesNumber& alpha, const SeriesNumber& eps);

/// eps >= sqrt(alpha), checked as eps^2 >= alpha in the series order.
bool laugwitz_condition(const SeriesNumber& alpha, const SeriesNumber& eps);

/// Limit of arctan(x/alpha) as x -> direction * infinity, for alpha > 0.
PiMultiple arctan_limit(int direction, const SeriesNumber& alpha);

/// Integral of alpha/(alpha^2 + x^2) over the real line: pi, exactly.
PiMultiple kernel_mass(const SeriesNumber& alpha);

struct DiracReport {
  Exponent mass;                         // total mass of the normalized kernel
  SeriesNumber unit_window_mass;         // mass over [-1, 1]
  std::vector<std::pair<Real, Classification>> probes;
  SiftReport sifting;                    // over [-sqrt(alpha), sqrt(alpha)], normalized
  Real sift_st{0};
  Real f_at_zero{0};
  bool mass_ok = false;
  bool locality_ok = false;
  bool sifting_ok = false;
};

/// Checks the delta conditions for the normalized Cauchy kernel: unit mass,
/// infinitesimal value at every appreciable probe, and sifting
/// st(int f delta) = f(0) over the narrowest window eps = sqrt(alpha).
DiracReport dirac_conditions(const SeriesNumber& alpha, const TestFunction& f, const std::vector<Real>& probes);

struct SokhotskiReport {
  SeriesNumber value;    // int phi(x)/(x + i alpha) dx over the real line
  Complex st;
  Real pv_part{0};       // Re st
  Real delta_part{0};    // Im st, expected -pi phi(0)
  Real phi_at_zero{0};
  double pv_oracle = 0;  // PV int phi(x)/x dx by numeric quadrature
  bool delta_ok = false;
  bool pv_ok = false;
};

/// Closes the contour in the upper half-plane: the value is
/// 2 pi i sum over poles z_k of phi with Im z_k > 0 of Res_k / (z_k + i alpha).
/// Requires phi rational with simple, nonreal poles and
/// deg(den) >= deg(num) + 1; throws UnsupportedFunction otherwise.
SokhotskiReport sokhotski(const TestFunction& phi, const SeriesNumber& alpha);

/// 1 + 1/(e^{-i(x-mu)} - theta) + 1/(e^{i(x-mu)} - theta), theta = 1 - eps,
/// through the real form eps(eps + 2cos d)/(1 - 2 theta cos d + theta^2).
SeriesNumber fourier_kernel(const Real& x, const Real& mu, const SeriesNumber& eps);

/// The same kernel by direct complex series arithmetic (cross-check).
SeriesNumber fourier_kernel_direct(const Real& x, const Real& mu, const SeriesNumber& eps);

/// Both forms at a real eps.
Real fourier_kernel_value(const Real& d, const Real& eps);
Complex fourier_kernel_direct_value(const Real& d, const Real& eps);

/// f(x) * integral of (1/(1+iw) + 1/(1-iw)) over [-x/eps, (2pi-x)/eps]
///   = 2 f(x) (arctan((2pi-x)/eps) + arctan(x/eps)),  st = 2 pi f(x).
/// Throws DomainError unless 0 < x < 2 pi.
SeriesNumber fourier_reduced_integral(const Real& f_at_x, const Real& x, const SeriesNumber& eps);

/// st(arctan(x/alpha)): -pi/2, 0 or pi/2 by the sign of x.
Real heaviside_st(const Real& x, const SeriesNumber& alpha);

/// Membership of (x, y) in the zigzag: y = -pi/2 left of 0, y = pi/2 right
/// of 0, y in [-pi/2, pi/2] at 0.
bool on_zigzag(const Real& x, const Real& y);

/// Every (x, heaviside_st(x)) lies on the zigzag.
bool zigzag_check(const std::vector<Real>& samples, const SeriesNumber& alpha);

/// y/pi + 1/2: the +-pi/2 step onto the {0, 1} unit step.
Real to_unit_step(const Real& y);

}  // namespace hyperdelta::kernels
