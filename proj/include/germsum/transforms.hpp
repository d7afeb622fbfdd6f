#pragma once

// Point blow-ups in the (x1, x2) plane, ramification x1 = t1^k with its
// rotation average, and the dominant-term data of a germ.

#include "germsum/weierstrass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germsum {

/// Chart of the blow-up of the origin in (x1, x2): b_xi (x1, x2) = (v2,
/// (xi + v1) v2) for finite xi, b_inf = (v1 v2, v2).
class BlowupChart {
 public:
  static BlowupChart at(ExactScalar xi);
  static BlowupChart at_float(Complex xi);
  static BlowupChart infinity();
  /// "inf", "p/q", "p/q:r/s" (re:im) or a decimal (promotes to float).
  static BlowupChart parse(const std::string& text);

  bool is_infinite() const { return infinite_; }
  bool is_exact() const { return infinite_ || exact_xi_.has_value(); }
  const ExactScalar& exact_xi() const;
  Complex xi() const;
  std::string to_string() const;

 private:
  bool infinite_ = false;
  std::optional<ExactScalar> exact_xi_;
  Complex float_xi_;
};

/// f o b. The output truncation is the input one (the images have order 1).
/// Over exact scalars the chart must be exact.
template <class S>
Series<S> blowup(const Series<S>& f, const BlowupChart& chart);

/// f(t1^k, x2, ...); k >= 2.
template <class S>
Series<S> ramify(const Series<S>& f, int k);

template <class S>
struct RotationAverage {
  /// (1/k) sum_j g(w^j t1, ...): the terms whose t1 exponent is divisible by k.
  Series<S> averaged;
  /// averaged written in x1 = t1^k; truncation floor(N/k).
  Series<S> descended;
};

template <class S>
RotationAverage<S> rotation_average(const Series<S>& g, int k);

/// Re-centers a finite chart: f_xi(v1 + (zeta - xi), v2, ...). The shift
/// has a constant term, so a truncated input of a blow-up chart (v1 degree
/// <= v2 degree in every term) keeps orders up to floor(N/2).
template <class S>
Series<S> chart_shift(const Series<S>& f, const S& xi, const S& zeta);

struct ProjectiveRoot {
  bool infinite = false;
  bool exact = false;
  ExactScalar exact_value;
  Complex value;
  int multiplicity = 0;
};

struct DominantData {
  /// Bivariate order h of P_L.
  int h = 0;
  /// Lowest homogeneous part of P_L in (x1, x2), as a 2-variable polynomial.
  Series<ExactScalar> H{2, kUnbounded};
  /// Selected exponent of (x3, ..., xd); empty for d = 2.
  std::vector<int> a;
  /// Zeros of H(1, xi) on the projective line, with multiplicity.
  std::vector<ProjectiveRoot> roots;
  /// Order on N^d that makes x2^h x''^a the leading monomial of P (d > 2);
  /// the germ's own order for d = 2.
  std::optional<MonomialOrder> completed_order;
};

/// Dominant data of P. For d > 2 `base` is the order on the x'' variables.
DominantData dominant_data(const Germ& germ, const std::optional<MonomialOrder>& base = std::nullopt);

/// H(1, xi) as exact coefficients in xi.
std::vector<ExactScalar> dehomogenize(const Series<ExactScalar>& H, int h);

}  // namespace germsum
