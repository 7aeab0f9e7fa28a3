#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace hyperdelta::oracle {

enum class PendulumModel { Linear, Nonlinear };

std::string_view to_string(PendulumModel m);

struct PendulumRun {
  double g = 9.80665;      // m/s^2
  double length = 1.0;     // m
  double amplitude = 0.5;  // rad, released from rest
  double dt = 1e-3;        // s
  PendulumModel model = PendulumModel::Nonlinear;
};

/// 2 pi sqrt(length / g)
double linear_period(const PendulumRun& run);

/// Integrates phi'' = -(g/l) sin(phi) (or -(g/l) phi) with classical RK4 and
/// measures the time between successive downward zero crossings, each
/// located by linear interpolation. The run is repeated at dt/2; throws
/// StepTooLarge when the two periods differ by more than 1e-8 s, DomainError
/// for invalid parameters.
double pendulum_period(const PendulumRun& run);

/// (t, phi) samples over [0, duration], for plotting.
std::vector<std::pair<double, double>> pendulum_trace(const PendulumRun& run, double duration);

}  // namespace hyperdelta::oracle
