#include <hyperdelta/oracle/quadrature.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

namespace hyperdelta::oracle {

namespace {

// 15-point Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr long kMaxSegments = 200000;

template <typename T>
struct Segment {
  double a, b;
  T value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename T, typename F>
Segment<T> kronrod(const F& f, double a, double b, long& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod_sum = fc * kWgk[7];
  T gauss_sum = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const T pair = f(center - dx) + f(center + dx);
    kronrod_sum += pair * kWgk[static_cast<std::size_t>(j)];
    if (j % 2 == 1) gauss_sum += pair * kWg[static_cast<std::size_t>(j / 2)];
  }
  evaluations += 15;
  const T k = kronrod_sum * half;
  const T g = gauss_sum * half;
  return {a, b, k, std::abs(k - g)};
}

template <typename T, typename F>
QuadratureResult<T> adaptive(const F& f, double a, double b, double tol) {
  QuadratureResult<T> out;
  std::vector<Segment<T>> heap{kronrod<T>(f, a, b, out.evaluations)};
  T total = heap.front().value;
  double error = heap.front().error;
  // Running updates lose everything below the roundoff of the largest segment
  // ever removed, so the sums are recomputed exactly from time to time.
  auto resum = [&] {
    total = T{};
    error = 0.0;
    for (const auto& seg : heap) {
      total += seg.value;
      error += seg.error;
    }
  };
  long segments = 1;
  while (error > tol * std::max(1.0, std::abs(total))) {
    if (!std::isfinite(error) || !std::isfinite(std::abs(total)))
      throw Error(ErrorCode::NoConvergence, "integrand is not finite on the interval");
    std::pop_heap(heap.begin(), heap.end());
    const Segment<T> worst = heap.back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) || ++segments > kMaxSegments)
      throw Error(ErrorCode::NoConvergence, "adaptive quadrature exhausted its subdivision budget");
    heap.pop_back();
    const auto left = kronrod<T>(f, worst.a, mid, out.evaluations);
    const auto right = kronrod<T>(f, mid, worst.b, out.evaluations);
    for (const auto& part : {left, right}) {
      heap.push_back(part);
      std::push_heap(heap.begin(), heap.end());
    }
    total += left.value + right.value - worst.value;
    error = std::max(0.0, error + left.error + right.error - worst.error);
    if ((segments & (segments - 1)) == 0 || segments % 1024 == 0) resum();
    else if (error <= tol * std::max(1.0, std::abs(total))) resum();
  }
  resum();
  if (!std::isfinite(error) || !std::isfinite(std::abs(total)))
    throw Error(ErrorCode::NoConvergence, "integrand is not finite on the interval");
  out.value = total;
  out.error_estimate = error;
  return out;
}

template <typename T, typename F>
QuadratureResult<T> integrate_any(const F& f, double a, double b, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::DomainError, "quadrature tolerance must be positive");
  if (std::isnan(a) || std::isnan(b)) throw Error(ErrorCode::DomainError, "NaN integration bound");
  if (a == b) return {};
  if (a > b) {
    auto r = integrate_any<T>(f, b, a, tol);
    r.value = -r.value;
    return r;
  }
  const bool a_inf = std::isinf(a), b_inf = std::isinf(b);
  if (!a_inf && !b_inf) return adaptive<T>(f, a, b, tol);

  // x = origin + t/(1 - t^2), dx = (1 + t^2)/(1 - t^2)^2 dt
  const double origin = a_inf ? (b_inf ? 0.0 : b) : a;
  auto mapped = [&](double t) -> T {
    const double s = 1.0 - t * t;
    return f(origin + t / s) * ((1.0 + t * t) / (s * s));
  };
  const double lo = a_inf ? -1.0 : 0.0;
  const double hi = b_inf ? 1.0 : 0.0;
  return adaptive<T>(mapped, lo, hi, tol);
}

}  // namespace

QuadratureResult<double> integrate(const RealFunction& f, double a, double b, double tol) {
  return integrate_any<double>(f, a, b, tol);
}

QuadratureResult<std::complex<double>> integrate_complex(const ComplexFunction& f, double a, double b, double tol) {
  return integrate_any<std::complex<double>>(f, a, b, tol);
}

QuadratureResult<double> pv_integrate(const RealFunction& f, double c, double a, double b, double tol) {
  if (!(a < c && c < b)) throw Error(ErrorCode::DomainError, "pole must lie strictly inside the interval");
  const double reach = std::min(c - a, b - c);
  // Snap s so that c + s and c - s are exactly symmetric in floating point;
  // otherwise the 1/s parts no longer cancel for small s.
  auto paired = [&](double s) {
    const double snapped = (c + s) - c;
    return f(c + snapped) + f(c - snapped);
  };

  // A simple pole cancels in the pair; anything stronger keeps growing.
  const double probe = std::isinf(reach) ? 1.0 : std::min(1.0, reach);
  const double near = std::abs(paired(1e-9 * probe));
  const double far = std::abs(paired(1e-6 * probe));
  if (!std::isfinite(near) || near > 100.0 * std::max(far, 1e-300) + 1e-12)
    throw Error(ErrorCode::PoleMisdeclared, "paired integrand is unbounded near the declared pole");

  QuadratureResult<double> out;
  try {
    out = integrate(RealFunction(paired), 0.0, reach, tol);
    if (c - a > reach) {
      auto left = integrate(f, a, c - reach, tol);
      out.value += left.value;
      out.error_estimate += left.error_estimate;
      out.evaluations += left.evaluations;
    }
    if (b - c > reach) {
      auto right = integrate(f, c + reach, b, tol);
      out.value += right.value;
      out.error_estimate += right.error_estimate;
      out.evaluations += right.evaluations;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoConvergence)
      throw Error(ErrorCode::PoleMisdeclared, std::string("symmetric pairing did not converge: ") + e.what());
    throw;
  }
  return out;
}

Extrapolation alpha_extrapolate(const std::function<double(double)>& family, const std::vector<double>& ladder,
                                double order) {
  if (ladder.size() < 3) throw Error(ErrorCode::DomainError, "extrapolation needs at least three ladder values");
  if (!(order > 0)) throw Error(ErrorCode::DomainError, "error order must be positive");
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    if (!(ladder[k] > 0)) throw Error(ErrorCode::DomainError, "ladder values must be positive");
    if (k > 0 && !(ladder[k] < ladder[k - 1])) throw Error(ErrorCode::DomainError, "ladder must decrease");
  }

  std::vector<double> h, values;
  for (double alpha : ladder) {
    h.push_back(std::pow(alpha, order));
    values.push_back(family(alpha));
  }
  for (std::size_t k = 2; k < values.size(); ++k) {
    const double previous = std::abs(values[k - 1] - values[k - 2]);
    const double current = std::abs(values[k] - values[k - 1]);
    if (current > previous * (1.0 + 1e-9) + 1e-14 * std::max(1.0, std::abs(values[k])))
      throw Error(ErrorCode::NonMonotone, "ladder values do not stabilize");
  }

  // Neville's scheme for the interpolating polynomial in h, evaluated at 0.
  const std::size_t n = values.size();
  std::vector<double> table = values;
  double previous_best = values.back();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double hi = h[i], hj = h[i + level];
      table[i] = (hi * table[i + 1] - hj * table[i]) / (hi - hj);
    }
    // Extrapolant without the coarsest rung, for the error estimate.
    if (level == n - 2) previous_best = table[1];
  }
  return {table[0], std::abs(table[0] - previous_best)};
}

std::vector<double> geometric_ladder(double largest, double ratio, int count) {
  if (!(largest > 0) || !(ratio > 0 && ratio < 1) || count < 1)
    throw Error(ErrorCode::DomainError, "invalid ladder parameters");
  std::vector<double> out;
  double alpha = largest;
  for (int k = 0; k < count; ++k) {
    out.push_back(alpha);
    alpha *= ratio;
  }
  return out;
}

}  // namespace hyperdelta::oracle
