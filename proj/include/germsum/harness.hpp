#pragma once

// Example series and residual checks for the worked examples: the
// n! x2^(2n) (x1 x2)^n family, the Euler-type ODE solution sum m! P^(m+1)
// and the quasi-homogeneous PDE solution x1 sum n! P^(n+1).

#include "germsum/borel_laplace.hpp"
#include "germsum/gevrey.hpp"
#include "germsum/transforms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace germsum {

enum class ExampleName { Remark79, OdeEuler, PdeQuasihom };

ExampleName parse_example(const std::string& name);
std::string to_string(ExampleName name);

struct Example {
  ExampleName name;
  Series<ExactScalar> series;
  Germ germ;
  std::string description;
};

/// remark79: sum n! x1^n x2^(3n) over 4n <= trunc, germ x1 x2.
/// ode-euler: sum m! P^(m+1) over 2(m+1) <= trunc, P = x1^2 - x2^2.
/// pde-quasihom: x1 sum n! P^(n+1) truncated at trunc, P = x2^2 - x1^3,
/// order weights (2, 3).
Example gen_example(ExampleName name, int trunc);

struct ResidualReport {
  /// Lowest degree of the residual; residual.trunc + 1 when it vanishes.
  int formal_valuation = 0;
  bool exact_to_truncation = false;
  Series<ExactScalar> residual{2, -1};
  std::optional<double> numeric_max_residual;
  std::vector<double> numeric_residuals;
  std::vector<double> sample_radii;
  double theta = 0;
  double k = 1;
};

/// P^2 dy/dx1 - P' y + P P' with P' = dP/dx1, in exact arithmetic.
ResidualReport verify_ode_formal(const Series<ExactScalar>& y, const Series<ExactScalar>& P);

struct PdeReport {
  /// Left-hand side applied to f.
  Series<ExactScalar> h{2, -1};
  /// x2 (dP/dx2) P, the form stated alongside the example.
  Series<ExactScalar> stated_h{2, -1};
  /// h = cofactor * stated_h + remainder (Weierstrass division by stated_h).
  Series<ExactScalar> cofactor{2, -1};
  Series<ExactScalar> remainder{2, -1};
  bool divisible = false;
  bool matches_stated = false;
};

/// (x2 P_2 + alpha P^(k+1) + P A) x1 f_1 - (x1 P_1 + beta P^(k+1) + P B) x2 f_2.
PdeReport verify_pde_formal(const Series<ExactScalar>& f, const Series<ExactScalar>& P, const ExactScalar& alpha,
                            const ExactScalar& beta, int k, const Series<ExactScalar>& A,
                            const Series<ExactScalar>& B);

/// The k-sum F of sum_{m>=1} (m-1)! t^m along theta must satisfy
/// t^2 F' = F - t; reports max |t^2 F' - F + t| over t = r e^{i theta}.
ResidualReport verify_ode_numeric(double k, double theta, const std::vector<double>& radii, int coefficients = 36,
                                  const SumConfig& config = {});

struct PSectorSample {
  double a = 0;
  double b = 0;
  double R = 0;
  std::vector<std::vector<Complex>> points;

  /// Rechecks |x_j| < R and a < arg P(x) < b for every point.
  bool check(const Series<ExactScalar>& P) const;
};

/// Rejection sampling of points of the polydisk of radius R with arg P in (a, b).
PSectorSample sample_p_sector(const Series<ExactScalar>& P, double a, double b, double R, int count,
                              std::uint64_t seed = 1);

struct GevreyTriple {
  GevreyEstimate direct;   ///< f wrt x1 x2
  GevreyEstimate chart0;   ///< f o b_0 wrt v1 v2^2
  GevreyEstimate chartinf; ///< f o b_inf wrt v1 v2^2
  bool pass = false;
};

/// Fits for the remark79 series at rho, with depths 41 / 61 / 41.
GevreyTriple remark79_gevrey_triple(double rho = 0.5, int n_min = 5);

}  // namespace germsum
