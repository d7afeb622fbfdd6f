#include "germsum/gevrey.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace germsum {

double NormSequence::norm(std::size_t n) const {
  return zero_mask[n] ? 0.0 : std::exp(log_norms[n]);
}

NormSequence NormSequence::from_norms(const std::vector<double>& norms, double rho) {
  NormSequence ns;
  ns.rho = rho;
  for (double v : norms) {
    if (!(v >= 0) || !std::isfinite(v)) throw std::invalid_argument("norms must be finite and nonnegative");
    ns.zero_mask.push_back(v == 0);
    ns.log_norms.push_back(v == 0 ? -std::numeric_limits<double>::infinity() : std::log(v));
  }
  return ns;
}

NormSequence NormSequence::from_log_norms(const std::vector<double>& log_norms, double rho) {
  NormSequence ns;
  ns.rho = rho;
  for (double v : log_norms) {
    bool zero = std::isinf(v) && v < 0;
    ns.zero_mask.push_back(zero);
    ns.log_norms.push_back(v);
  }
  return ns;
}

template <class S>
NormSequence norm_sequence(const PExpansion<S>& expansion, double rho) {
  NormSequence ns;
  ns.rho = rho;
  for (const auto& g : expansion.coeffs) {
    ns.zero_mask.push_back(g.is_zero());
    ns.log_norms.push_back(log_majorant_norm(g, rho));
  }
  return ns;
}

GevreyEstimate fit_gevrey(const NormSequence& ns, int n_min) {
  std::vector<int> idx;
  for (std::size_t n = 0; n < ns.size(); ++n) {
    if (!ns.zero_mask[n] && static_cast<int>(n) >= n_min) idx.push_back(static_cast<int>(n));
  }
  if (idx.size() < 4) throw DomainError("Gevrey fit needs at least 4 nonzero norms with n >= n_min");
  Eigen::MatrixXd X(static_cast<Eigen::Index>(idx.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    const int n = idx[i];
    X(r, 0) = 1.0;
    X(r, 1) = n;
    X(r, 2) = std::lgamma(n + 1.0);
    y(r) = ns.log_norms[static_cast<std::size_t>(n)];
  }
  Eigen::Vector3d beta = X.colPivHouseholderQr().solve(y);
  Eigen::VectorXd resid = X * beta - y;
  GevreyEstimate est;
  est.logK = beta(0);
  est.logA = beta(1);
  est.raw_s = beta(2);
  est.s = std::max(0.0, est.raw_s);
  est.convergent_type = est.raw_s < 0;
  est.rms_residual = std::sqrt(resid.squaredNorm() / static_cast<double>(idx.size()));
  est.n_first = idx.front();
  est.n_last = idx.back();
  est.points = static_cast<int>(idx.size());
  return est;
}

bool check_gevrey_bound(const NormSequence& ns, double s, double K, double A, int n_min) {
  if (!(s > 0 && K > 0 && A > 0)) throw std::invalid_argument("s, K and A must be positive");
  const double logK = std::log(K), logA = std::log(A);
  for (std::size_t n = static_cast<std::size_t>(std::max(n_min, 0)); n < ns.size(); ++n) {
    if (ns.zero_mask[n]) continue;
    // Gamma dips below 1 on (1, 2); skipping 0 < s n < 1 keeps the check monotone in s.
    if (n > 0 && s * static_cast<double>(n) < 1.0) continue;
    double bound = logK + static_cast<double>(n) * logA + std::lgamma(s * static_cast<double>(n) + 1.0);
    if (ns.log_norms[n] > bound + 1e-12 * std::max(1.0, std::abs(bound))) return false;
  }
  return true;
}

template NormSequence norm_sequence(const PExpansion<ExactScalar>&, double);
template NormSequence norm_sequence(const PExpansion<Complex>&, double);

}  // namespace germsum
