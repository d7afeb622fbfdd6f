#pragma once

// Rational (Pade) approximants of a one-variable power series.

#include "germsum/scalar.hpp"

#include <span>
#include <vector>

namespace germsum {

class RationalApproximant {
 public:
  RationalApproximant() = default;
  /// [L/M] from c[0..L+M]; requires c.size() > L + M. Degenerate systems
  /// resolve to the solution of lowest denominator degree.
  RationalApproximant(std::span<const Complex> c, int L, int M, double froissart_tol = 1e-6);

  Complex operator()(const Complex& z) const;

  int L() const { return L_; }
  int M() const { return M_; }
  const std::vector<Complex>& numerator() const { return num_; }
  const std::vector<Complex>& denominator() const { return den_; }
  /// Poles with Froissart doublets (a zero within froissart_tol relative) removed.
  const std::vector<Complex>& poles() const { return poles_; }
  const std::vector<Complex>& doublets() const { return doublets_; }

 private:
  int L_ = 0;
  int M_ = 0;
  std::vector<Complex> num_;
  std::vector<Complex> den_;
  std::vector<Complex> poles_;
  std::vector<Complex> doublets_;
};

/// Solves A x = b (n x n, row-major) by elimination with column-ordered
/// partial pivoting; columns without a pivot above the rank threshold get 0.
std::vector<Complex> solve_lowest(std::vector<Complex> A, std::vector<Complex> b, int n);

}  // namespace germsum
