#pragma once

// Gevrey order of an expansion from the growth of its coefficient norms:
// ||g_n|| <= K A^n Gamma(s n + 1).

#include "germsum/weierstrass.hpp"

#include <vector>

namespace germsum {

struct NormSequence {
  double rho = 1.0;
  /// log ||g_n||; -inf for zero coefficients.
  std::vector<double> log_norms;
  std::vector<bool> zero_mask;

  std::size_t size() const { return log_norms.size(); }
  /// ||g_n|| as a double (may overflow to inf for huge entries).
  double norm(std::size_t n) const;
  static NormSequence from_norms(const std::vector<double>& norms, double rho = 1.0);
  static NormSequence from_log_norms(const std::vector<double>& log_norms, double rho = 1.0);
};

template <class S>
NormSequence norm_sequence(const PExpansion<S>& expansion, double rho);

struct GevreyEstimate {
  double s = 0;
  double logK = 0;
  double logA = 0;
  double rms_residual = 0;
  /// s as fitted, before clamping at 0.
  double raw_s = 0;
  bool convergent_type = false;
  int n_first = 0;
  int n_last = 0;
  int points = 0;
};

/// Least squares of log||g_n|| on (1, n, log Gamma(n+1)) over nonzero
/// entries with n >= n_min. Throws DomainError with fewer than 4 such entries.
GevreyEstimate fit_gevrey(const NormSequence& ns, int n_min = 5);

/// True iff ||g_n|| <= K A^n Gamma(s n + 1) for every stored n >= n_min,
/// except 0 < s n < 1 where Gamma(s n + 1) < 1 would make the check
/// non-monotone in s.
bool check_gevrey_bound(const NormSequence& ns, double s, double K, double A, int n_min = 0);

}  // namespace germsum
