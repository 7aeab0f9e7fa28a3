#pragma once

#include <hyperdelta/polynomial.hpp>
#include <hyperdelta/series.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hyperdelta {

/// An elementary function given by its Taylor coefficient stream at a real
/// point. `coefficients(x0, n)` returns f^{(k)}(x0)/k! for k < n.
struct AnalyticSeed {
  std::string name;
  std::function<bool(const Real&)> defined_at;
  std::function<std::vector<Real>(const Real& x0, std::size_t count)> coefficients;
  /// Set for polynomials: the stream vanishes beyond this degree, so
  /// composition is exact.
  std::optional<std::size_t> degree;
};

namespace seeds {
AnalyticSeed arctan();
AnalyticSeed exp();
AnalyticSeed log();
AnalyticSeed sin();
AnalyticSeed cos();
AnalyticSeed polynomial(const Polynomial<Real>& p);
}  // namespace seeds

/// f(a) for finite a: Taylor expansion of f about st(a) composed with the
/// infinitesimal part of a. Throws NotFinite for infinite a and SeedDomain
/// when f is undefined at st(a) (or st(a) is not real).
SeriesNumber compose_analytic(const AnalyticSeed& f, const SeriesNumber& a);

/// arctan on all real series. Infinite arguments go through
/// arctan(t) = sign(t) pi/2 - arctan(1/t), so the result is always finite.
SeriesNumber arctan_ext(const SeriesNumber& a);

}  // namespace hyperdelta
