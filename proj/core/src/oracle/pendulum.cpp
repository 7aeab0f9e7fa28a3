#include <hyperdelta/error.hpp>
#include <hyperdelta/oracle/pendulum.hpp>

#include <cmath>
#include <numbers>

namespace hyperdelta::oracle {

std::string_view to_string(PendulumModel m) { return m == PendulumModel::Linear ? "linear" : "nonlinear"; }

namespace {

constexpr double kHalvingTolerance = 1e-8;

void validate(const PendulumRun& run) {
  if (!(run.g > 0) || !(run.length > 0) || !(run.dt > 0))
    throw Error(ErrorCode::DomainError, "g, length and dt must be positive");
  if (!(run.amplitude > 0) || !(run.amplitude < std::numbers::pi))
    throw Error(ErrorCode::DomainError, "amplitude must lie in (0, pi) for a measurable oscillation");
  if (run.dt > linear_period(run) / 20)
    throw Error(ErrorCode::StepTooLarge, "dt exceeds a twentieth of the small-oscillation period");
}

struct State {
  double phi;
  double omega;
};

class Stepper {
 public:
  explicit Stepper(const PendulumRun& run) : k_(run.g / run.length), linear_(run.model == PendulumModel::Linear) {}

  State step(const State& s, double dt) const {
    const State k1 = rate(s);
    const State k2 = rate({s.phi + 0.5 * dt * k1.phi, s.omega + 0.5 * dt * k1.omega});
    const State k3 = rate({s.phi + 0.5 * dt * k2.phi, s.omega + 0.5 * dt * k2.omega});
    const State k4 = rate({s.phi + dt * k3.phi, s.omega + dt * k3.omega});
    return {s.phi + dt / 6 * (k1.phi + 2 * k2.phi + 2 * k3.phi + k4.phi),
            s.omega + dt / 6 * (k1.omega + 2 * k2.omega + 2 * k3.omega + k4.omega)};
  }

 private:
  State rate(const State& s) const {
    const double restoring = linear_ ? s.phi : std::sin(s.phi);
    return {s.omega, -k_ * restoring};
  }

  double k_;
  bool linear_;
};

double measure(const PendulumRun& run, double dt) {
  const Stepper stepper(run);
  // Generous cap: large amplitudes stretch the period well past 2 pi sqrt(l/g).
  const auto max_steps = static_cast<long>(40 * linear_period(run) / dt);
  State s{run.amplitude, 0.0};
  double t = 0.0;
  double crossings[2];
  int found = 0;
  for (long i = 0; i < max_steps && found < 2; ++i) {
    const State next = stepper.step(s, dt);
    if (s.phi > 0 && next.phi <= 0) crossings[found++] = t + dt * s.phi / (s.phi - next.phi);
    s = next;
    t += dt;
  }
  if (found < 2) throw Error(ErrorCode::NoConvergence, "no two downward zero crossings within the step budget");
  return crossings[1] - crossings[0];
}

}  // namespace

double linear_period(const PendulumRun& run) { return 2 * std::numbers::pi * std::sqrt(run.length / run.g); }

double pendulum_period(const PendulumRun& run) {
  validate(run);
  const double coarse = measure(run, run.dt);
  const double fine = measure(run, run.dt / 2);
  if (std::abs(coarse - fine) > kHalvingTolerance)
    throw Error(ErrorCode::StepTooLarge, "halving dt moved the period beyond 1e-8 s");
  return fine;
}

std::vector<std::pair<double, double>> pendulum_trace(const PendulumRun& run, double duration) {
  validate(run);
  const Stepper stepper(run);
  std::vector<std::pair<double, double>> out;
  State s{run.amplitude, 0.0};
  double t = 0.0;
  out.emplace_back(t, s.phi);
  while (t < duration) {
    s = stepper.step(s, run.dt);
    t += run.dt;
    out.emplace_back(t, s.phi);
  }
  return out;
}

}  // namespace hyperdelta::oracle
