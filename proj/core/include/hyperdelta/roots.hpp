#pragma once

#include <hyperdelta/polynomial.hpp>
#include <hyperdelta/scalar.hpp>

#include <vector>

namespace hyperdelta {

/// All complex roots of p (with multiplicity) by simultaneous
/// Weierstrass iteration followed by Newton polishing at working precision.
/// Throws NoConvergence when the iteration fails to settle, DomainError for
/// constant p.
std::vector<Complex> polynomial_roots(const Polynomial<Real>& p);

}  // namespace hyperdelta
