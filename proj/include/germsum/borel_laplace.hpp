#pragma once

// Numerical k-summation of a one-variable series sum a_n t^n: Borel
// transform, continuation along a ray, Laplace integral back.

#include "germsum/pade.hpp"
#include "germsum/weierstrass.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace germsum {

struct OneVarSeries {
  std::vector<Complex> coeffs;
};

struct BorelSeries {
  double k = 1;
  std::vector<Complex> coeffs;
};

/// b_n = a_n / Gamma(1 + n/k).
BorelSeries borel_transform(const OneVarSeries& s, double k);

enum class ContinuationMethod { Pade, Taylor };

const char* to_string(ContinuationMethod m);

struct SumConfig {
  ContinuationMethod method = ContinuationMethod::Pade;
  double quad_tol = 1e-20;
  /// Laplace kernel level below which the ray is cut.
  double tail_eps = 1e-20;
  /// A stable pole this close (radians) to the ray makes it singular.
  double delta_min = 0.05;
  double froissart_tol = 1e-6;
  /// Relative distance within which poles of successive orders are matched.
  double stability_tol = 1e-2;
  /// laplace_sum fails when the continuation error estimate exceeds this.
  double max_continuation_error = 1e-6;
  /// Minimum of cos(k (theta - arg t)) for the Laplace kernel to decay.
  double admissibility_margin = 1e-3;
};

class SingularRayError : public DomainError {
 public:
  SingularRayError(const std::string& what, Complex pole) : DomainError(what), pole_(std::move(pole)) {}
  const Complex& pole() const { return pole_; }

 private:
  Complex pole_;
};

/// Analytic continuation of a Borel sum along a ray.
class Continuation {
 public:
  virtual ~Continuation() = default;
  virtual Complex value(const Complex& tau) const = 0;
  /// Local error estimate at tau.
  virtual Real error(const Complex& tau) const = 0;
};

struct RayContinuation {
  double theta = 0;
  ContinuationMethod method = ContinuationMethod::Pade;
  std::vector<Real> radii;
  std::vector<Complex> values;
  std::vector<Real> errors;
  std::shared_ptr<const Continuation> eval;
};

/// Throws SingularRayError when a stable pole lies within delta_min of theta.
RayContinuation continue_on_ray(const BorelSeries& b, double theta, std::span<const double> radii,
                                const SumConfig& config = {});

struct SumResult {
  Complex t;
  double k = 1;
  double theta = 0;
  Complex value;
  Real quadrature_error;
  Real continuation_error;
  Real tail_cut;
  /// dF/dt by differentiation under the integral, when requested.
  std::optional<Complex> derivative;
  ContinuationMethod method = ContinuationMethod::Pade;

  Real total_error() const { return quadrature_error + continuation_error; }
};

/// k t^-k int_0^{inf e^{i theta}} exp(-(tau/t)^k) g(tau) tau^{k-1} d tau.
SumResult laplace_sum(const RayContinuation& rc, double k, const Complex& t, const SumConfig& config = {},
                      bool with_derivative = false);

/// True when the Laplace kernel along theta decays for this t.
bool admissible(double k, double theta, const Complex& t, double margin);

/// sum_n g_n(x0) t^n.
template <class S>
OneVarSeries specialize(const PExpansion<S>& expansion, std::span<const Complex> x0);

/// The P-k-sum of the expansion at x0 (t = P(x0)) along theta.
template <class S>
SumResult p_k_sum(const PExpansion<S>& expansion, std::span<const Complex> x0, double k, double theta,
                  const SumConfig& config = {});

struct PoleCluster {
  Complex center;
  double modulus = 0;
  double argument = 0;
  /// Largest relative distance to the matching pole of a lower order.
  double stability = 0;
};

struct SingularDirectionReport {
  double k = 1;
  std::vector<int> orders;
  std::vector<PoleCluster> poles;
  /// Arguments of the stable poles in the Borel plane.
  std::vector<double> directions;
  /// Directions repeat with this period in arg t.
  double t_period = 0;
};

/// Poles of [L/L] that persist in [L-1/L-1] and [L-2/L-2]. Needs >= 16 coefficients.
SingularDirectionReport singular_directions(const BorelSeries& b, const SumConfig& config = {});

/// Difference of angles reduced to (-pi, pi].
double angle_diff(double a, double b);

}  // namespace germsum
