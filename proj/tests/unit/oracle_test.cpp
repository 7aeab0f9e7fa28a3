#include <hyperdelta/oracle/pendulum.hpp>
#include <hyperdelta/oracle/quadrature.hpp>
#include <hyperdelta/oracle/shadows.hpp>

#include "test_support.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace hyperdelta;
using namespace hyperdelta::oracle;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// Complete elliptic integral via the arithmetic-geometric mean:
// T/T0 = (2/pi) K(sin(C/2)) = 1/agm(1, cos(C/2)).
double elliptic_ratio(double c) {
  double a = 1.0, b = std::cos(c / 2);
  for (int i = 0; i < 40; ++i) {
    const double m = (a + b) / 2;
    b = std::sqrt(a * b);
    a = m;
  }
  return 1.0 / a;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::DomainError;
}

}  // namespace

TEST_CASE("integrate examples") {
  const auto sq = integrate([](double x) { return x * x; }, 0, 1);
  CHECK(near(sq.value, 1.0 / 3, 1e-10));
  CHECK(sq.error_estimate >= 0);
  CHECK(sq.evaluations > 0);
  CHECK(near(integrate([](double x) { return 1e-6 / (1e-12 + x * x); }, -kInf, kInf, 1e-8).value, kPi, 1e-6));
  const double alpha = 1e-8;
  CHECK(std::abs(integrate([&](double x) { return alpha / (alpha * alpha + x * x); }, -1, 1, 1e-12).value -
                 (kPi - 2 * alpha)) < 1e-8);
}

TEST_CASE("integrate reproduces closed forms") {
  struct Entry {
    RealFunction f;
    double a, b, exact;
  };
  const std::vector<Entry> corpus{
      {[](double x) { return x * x; }, 0, 1, 1.0 / 3},
      {[](double x) { return 1 + 2 * x - x * x * x; }, -1, 2, 9.0 / 4},
      {[](double x) { return 1 / (1 + x * x); }, -kInf, kInf, kPi},
      {[](double x) { return 1 / (4 + x * x); }, 0, kInf, kPi / 4},
      {[](double x) { return 1 / ((1 + x * x) * (1 + x * x)); }, -kInf, kInf, kPi / 2},
      {[](double x) { return x * x / (1 + x * x * x * x); }, -kInf, kInf, kPi / std::sqrt(2.0)},
      {[](double x) { return std::cos(x); }, 0, kPi / 2, 1.0},
      {[](double x) { return 1 + std::cos(2 * x); }, 0, kPi, kPi},
      {[](double x) { return std::exp(-x * x); }, -kInf, kInf, std::sqrt(kPi)},
      {[](double x) { return std::exp(x); }, 0, 1, std::exp(1.0) - 1},
  };
  for (const auto& e : corpus) {
    const auto r = integrate(e.f, e.a, e.b, 1e-11);
    CHECK(near(r.value, e.exact, 1e-9));
  }
  CHECK(integrate([](double) { return 1.0; }, 2, 2).value == 0);
  CHECK(near(integrate([](double x) { return x; }, 1, 0).value, -0.5, 1e-12));
}

TEST_CASE("integrate_complex") {
  const auto r = integrate_complex([](double x) { return std::complex<double>(std::cos(x), std::sin(x)); }, 0, kPi);
  CHECK(std::abs(r.value.real()) < 1e-10);
  CHECK(near(r.value.imag(), 2.0, 1e-10));
}

TEST_CASE("integrate fails to converge on a nonintegrable singularity") {
  CHECK(code_of([] { (void)integrate([](double x) { return 1 / x; }, 0, 1, 1e-10); }) == ErrorCode::NoConvergence);
}

TEST_CASE("pv_integrate examples") {
  CHECK(std::abs(pv_integrate([](double x) { return 1 / x; }, 0, -1, 1).value) < 1e-12);
  CHECK(std::abs(pv_integrate([](double x) { return 1 / (x * (1 + x * x)); }, 0, -kInf, kInf).value) < 1e-10);
  // x/((x-1)(1+x^2)) = (1/2)/(x-1) + (1/2)(1-x)/(1+x^2): PV = pi/2
  const auto r = pv_integrate([](double x) { return x / ((x - 1) * (1 + x * x)); }, 1, -kInf, kInf);
  CHECK(near(r.value, kPi / 2, 1e-9));
  // PV int_0^3 dx/(x-1) = log 2
  CHECK(near(pv_integrate([](double x) { return 1 / (x - 1); }, 1, 0, 3).value, std::log(2.0), 1e-10));
}

TEST_CASE("pv_integrate is antisymmetric and vanishes on odd integrands") {
  auto f = [](double x) { return (2 + x) / (x * (3 + x * x)); };
  auto g = [&](double x) { return -f(x); };
  const double pf = pv_integrate(f, 0, -kInf, kInf).value;
  const double pg = pv_integrate(g, 0, -kInf, kInf).value;
  CHECK(std::abs(pf + pg) < 1e-12);
  CHECK(std::abs(pv_integrate([](double x) { return std::cos(x) / x; }, 0, -2, 2).value) < 1e-12);
}

TEST_CASE("pv_integrate rejects a misdeclared pole") {
  CHECK(code_of([] { (void)pv_integrate([](double x) { return 1 / (x * x); }, 0, -1, 1); }) ==
        ErrorCode::PoleMisdeclared);
  CHECK(code_of([] { (void)pv_integrate([](double x) { return 1 / x; }, 2, -1, 1); }) == ErrorCode::DomainError);
}

TEST_CASE("alpha_extrapolate examples") {
  const auto ladder = geometric_ladder(1e-3, 0.5, 8);
  REQUIRE(ladder.size() == 8);
  CHECK(ladder.back() < ladder.front());
  const auto a = alpha_extrapolate([](double al) { return 2 * std::atan(0.1 / al) / kPi; }, ladder);
  CHECK(std::abs(a.value - 1.0) < 1e-8);
  const auto b = alpha_extrapolate([](double al) { return al * std::log(al); }, geometric_ladder(1e-3, 0.5, 10));
  CHECK(std::abs(b.value) < 1e-4);
  // windowed sift of F = 1 with eps = sqrt(alpha): error O(alpha^{1/2})
  const auto c = alpha_extrapolate(
      [](double al) { return sift_integral([](double) { return 1.0; }, 0, al, std::sqrt(al)); },
      geometric_ladder(1e-4, 0.25, 6), 0.5);
  CHECK(std::abs(c.value - kPi / 2) < 1e-4);
  CHECK(code_of([] { (void)alpha_extrapolate([](double al) { return al; }, {1e-3, 1e-4}); }) ==
        ErrorCode::DomainError);
  CHECK(code_of([] {
          (void)alpha_extrapolate([](double al) { return std::sin(1 / al); }, geometric_ladder(1e-2, 0.5, 8));
        }) == ErrorCode::NonMonotone);
}

TEST_CASE("pendulum linear period") {
  PendulumRun run;
  run.model = PendulumModel::Linear;
  const double t0 = linear_period(run);
  CHECK(near(t0, 2 * kPi * std::sqrt(1 / 9.80665), 1e-15));
  for (double c : {0.1, 0.5, 1.0}) {
    run.amplitude = c;
    CHECK(std::abs(pendulum_period(run) - t0) < 1e-6);
  }
}

TEST_CASE("pendulum nonlinear period") {
  PendulumRun run;
  run.model = PendulumModel::Nonlinear;
  const double t0 = linear_period(run);
  double previous = 0;
  for (double c : {0.05, 0.2, 0.5, 0.8, 1.0}) {
    run.amplitude = c;
    const double t = pendulum_period(run);
    CHECK(t > previous);
    previous = t;
    CHECK(std::abs(t / t0 - elliptic_ratio(c)) < 1e-3);
  }
  run.amplitude = 0.5;
  CHECK(std::abs(pendulum_period(run) / t0 - 1.01583) < 1e-3);
  run.amplitude = 0.05;
  const double excess = pendulum_period(run) / t0 - 1;
  CHECK(std::abs(excess / (0.05 * 0.05) - 1.0 / 16) < 0.1 / 16);
}

TEST_CASE("pendulum errors and trace") {
  PendulumRun bad;
  bad.amplitude = 3.5;
  CHECK(code_of([&] { (void)pendulum_period(bad); }) == ErrorCode::DomainError);
  bad.amplitude = 0.5;
  bad.dt = -1;
  CHECK(code_of([&] { (void)pendulum_period(bad); }) == ErrorCode::DomainError);
  bad.dt = 0.5;
  CHECK(code_of([&] { (void)pendulum_period(bad); }) == ErrorCode::StepTooLarge);
  PendulumRun run;
  const auto trace = pendulum_trace(run, 2.0);
  REQUIRE(trace.size() > 10);
  CHECK(trace.front().second == doctest::Approx(0.5));
  CHECK(trace.back().first == doctest::Approx(2.0).epsilon(0.01));
}
