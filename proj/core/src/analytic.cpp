#include <hyperdelta/analytic.hpp>
#include <hyperdelta/error.hpp>

#include <boost/multiprecision/mpfr.hpp>

namespace hyperdelta {

namespace mp = boost::multiprecision;

namespace seeds {

AnalyticSeed arctan() {
  AnalyticSeed s;
  s.name = "arctan";
  s.defined_at = [](const Real&) { return true; };
  // arctan'(x) = 1/(1+x^2) = Im(1/(x-i)); the t^j coefficient of
  // 1/(x0+t-i) is (-1)^j (x0-i)^{-(j+1)}.
  s.coefficients = [](const Real& x0, std::size_t count) {
    std::vector<Real> out;
    out.reserve(count);
    if (count == 0) return out;
    out.push_back(mp::atan(x0));
    const Complex w = Complex(1) / Complex(x0, Real(-1));
    Complex power = w;
    for (std::size_t k = 1; k < count; ++k) {
      const std::size_t j = k - 1;
      Real b = power.im;
      if (j % 2 == 1) b = -b;
      out.push_back(b / Real(static_cast<long>(k)));
      power *= w;
    }
    return out;
  };
  return s;
}

AnalyticSeed exp() {
  AnalyticSeed s;
  s.name = "exp";
  s.defined_at = [](const Real&) { return true; };
  s.coefficients = [](const Real& x0, std::size_t count) {
    std::vector<Real> out;
    Real term = mp::exp(x0);
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) term /= Real(static_cast<long>(k));
      out.push_back(term);
    }
    return out;
  };
  return s;
}

AnalyticSeed log() {
  AnalyticSeed s;
  s.name = "log";
  s.defined_at = [](const Real& x0) { return x0 > 0; };
  s.coefficients = [](const Real& x0, std::size_t count) {
    std::vector<Real> out;
    if (count == 0) return out;
    out.push_back(mp::log(x0));
    Real inv_power = 1;
    for (std::size_t k = 1; k < count; ++k) {
      inv_power /= x0;
      Real c = inv_power / Real(static_cast<long>(k));
      out.push_back(k % 2 == 1 ? c : Real(-c));
    }
    return out;
  };
  return s;
}

namespace {

// Derivative cycle of sin/cos starting at `phase` (0 = sin, 1 = cos).
AnalyticSeed trig(std::string name, int phase) {
  AnalyticSeed s;
  s.name = std::move(name);
  s.defined_at = [](const Real&) { return true; };
  s.coefficients = [phase](const Real& x0, std::size_t count) {
    const Real sv = mp::sin(x0), cv = mp::cos(x0);
    const Real cycle[4] = {sv, cv, -sv, -cv};
    std::vector<Real> out;
    Real factorial = 1;
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) factorial *= Real(static_cast<long>(k));
      out.push_back(cycle[(k + static_cast<std::size_t>(phase)) % 4] / factorial);
    }
    return out;
  };
  return s;
}

}  // namespace

AnalyticSeed sin() { return trig("sin", 0); }
AnalyticSeed cos() { return trig("cos", 1); }

AnalyticSeed polynomial(const Polynomial<Real>& p) {
  AnalyticSeed s;
  s.name = "polynomial";
  s.defined_at = [](const Real&) { return true; };
  s.coefficients = [p](const Real& x0, std::size_t count) {
    auto shifted = p.taylor_shift(x0);
    std::vector<Real> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(shifted.coefficient(k));
    return out;
  };
  s.degree = static_cast<std::size_t>(std::max(p.degree(), 0));
  return s;
}

}  // namespace seeds

SeriesNumber compose_analytic(const AnalyticSeed& f, const SeriesNumber& a) {
  // log(c eta^q) = log c + q log eta: no log eta scale here.
  if (f.name == "log" && !a.is_zero() && a.leading_exponent() != 0)
    throw Error(ErrorCode::NeedsLog, "log of an infinitesimal or infinite argument needs a log(eta) scale");
  if (classify(a) == Classification::Infinite)
    throw Error(ErrorCode::NotFinite, f.name + " of an infinite argument");
  const Complex c0 = a.coefficient(Exponent(0));
  if (mp::abs(c0.im) > settings().tolerance * mp::max(Real(1), mp::abs(c0.re)))
    throw Error(ErrorCode::SeedDomain, f.name + " expanded about a nonreal point");
  const Real x0 = c0.re;
  if (!f.defined_at(x0))
    throw Error(ErrorCode::SeedDomain, f.name + " is undefined at " + to_decimal(x0, 17));

  const SeriesNumber delta = a - SeriesNumber(x0);
  if (delta.is_zero()) {
    SeriesNumber value(f.coefficients(x0, 1).front());
    return a.truncation() ? value.truncated(*a.truncation()) : value;
  }
  const Exponent q = delta.leading_exponent();
  const Exponent rel = settings().truncation;

  // Enough coefficients to reach T orders past the first nonvanishing one.
  std::size_t count;
  if (f.degree) {
    count = *f.degree + 1;
  } else {
    Exponent span = rel / q;
    count = static_cast<std::size_t>(span.numerator() / span.denominator()) + 2;
  }
  std::vector<Real> coeffs = f.coefficients(x0, count);

  Real scale = 0;
  for (const auto& c : coeffs) scale = mp::max(scale, Real(mp::abs(c)));
  std::size_t first = 0;
  while (first < coeffs.size() && mp::abs(coeffs[first]) <= settings().tolerance * scale) ++first;
  if (first == coeffs.size()) return a.truncation() ? SeriesNumber::big_o(*a.truncation()) : SeriesNumber();
  if (!f.degree && first > 0) coeffs = f.coefficients(x0, count + first);

  std::optional<Exponent> order;
  if (!f.degree) order = q * static_cast<std::int64_t>(first) + rel;
  if (a.truncation()) {
    Exponent propagated = *a.truncation();
    if (first > 0) propagated += q * static_cast<std::int64_t>(first - 1);
    order = order ? std::min(*order, propagated) : propagated;
  }

  SeriesNumber result;
  SeriesNumber power(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) {
      power = power * delta;
      if (order) power = power.truncated(*order);
      if (power.is_zero()) break;
    }
    if (coeffs[k] != 0) result += power * SeriesNumber(coeffs[k]);
  }
  return order ? result.truncated(*order) : result;
}

SeriesNumber arctan_ext(const SeriesNumber& a) {
  if (!a.is_real()) throw Error(ErrorCode::NotOrdered, "arctan of a nonreal series");
  if (a.is_zero()) return a.truncation() ? compose_analytic(seeds::arctan(), a) : SeriesNumber();
  if (classify(a) != Classification::Infinite) return compose_analytic(seeds::arctan(), a);
  Real half_pi = pi() / 2;
  if (a.leading_coefficient().re < 0) half_pi = -half_pi;
  return SeriesNumber(half_pi) - arctan_ext(invert(a));
}

}  // namespace hyperdelta
