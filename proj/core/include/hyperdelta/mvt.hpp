#pragma once

#include <hyperdelta/polynomial.hpp>
#include <hyperdelta/series.hpp>

namespace hyperdelta {

struct MvtSolution {
  SeriesNumber theta;
  /// p' is constant, every theta works and theta = 1/2 is returned.
  bool degenerate = false;
  int iterations = 0;
  /// p(x0+h) - p(x0) - h p'(x0 + theta h); empty up to its truncation order.
  SeriesNumber residual;
};

/// Solves p(x0+h) - p(x0) = h p'(x0 + theta h) for theta as a series in the
/// infinitesimal h, with 0 <= st(theta) <= 1.
///
/// The leading order fixes st(theta) = (m+1)^{-1/m}, where m >= 1 is the
/// lowest order with p^{(m+1)}(x0) != 0; Newton steps on series then refine
/// theta one block of orders at a time. Throws NoSolution if the iteration
/// does not settle within the iteration cap, DomainError unless h is a real
/// nonzero infinitesimal.
MvtSolution mvt_theta(const Polynomial<Real>& p, const Real& x0, const SeriesNumber& h);

}  // namespace hyperdelta
