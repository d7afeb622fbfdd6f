#pragma once

// Adaptive Gauss-Legendre quadrature for complex integrands of a real
// variable, at the current working precision.

#include "germsum/scalar.hpp"

#include <functional>
#include <vector>

namespace germsum {

/// Nodes and weights of the n-point rule on [-1, 1].
struct GaussLegendre {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// Cached per (n, precision).
const GaussLegendre& gauss_legendre(int n);

/// Integrand filling `out` (fixed length) with several components at once;
/// adaptivity is driven by component 0.
using VectorIntegrand = std::function<void(const Real& s, std::vector<Complex>& out)>;

struct QuadratureResult {
  std::vector<Complex> values;
  Real error;
  int panels = 0;
};

/// Integral over [a, b]. Panels are bisected until the difference between
/// the one-panel and two-half-panel rules is below tol * width / (b - a) / 4;
/// partial sums combine pairwise, so the result is independent of evaluation
/// order.
QuadratureResult integrate(const VectorIntegrand& f, int components, const Real& a, const Real& b,
                           const Real& tol, int max_depth = 40, int points = 20);

}  // namespace germsum
