#pragma once

#include "germsum/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace germsum {

/// All complex roots (with repetition) of c[0] + c[1] z + ... + c[n] z^n by
/// Aberth-Ehrlich iteration at the current precision. Trailing zero
/// coefficients are dropped; the zero polynomial is rejected.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, int max_iterations = 600);

struct RootCluster {
  Complex center;
  int multiplicity = 0;
};

/// Groups roots closer than `radius` (single linkage) and averages each group.
std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, const Real& radius);

/// Best rational approximation with denominator <= max_den.
Rational rational_approximation(const Real& x, long max_den);

/// If some Gaussian rational r within `radius` of `approx` satisfies
/// (z - r)^multiplicity | poly exactly, returns r.
std::optional<ExactScalar> exact_root_near(std::span<const ExactScalar> poly, const Complex& approx,
                                           int multiplicity, const Real& radius);

/// Synthetic division of poly by (z - r); returns quotient, sets remainder.
std::vector<ExactScalar> deflate(std::span<const ExactScalar> poly, const ExactScalar& r,
                                 ExactScalar& remainder);

}  // namespace germsum
