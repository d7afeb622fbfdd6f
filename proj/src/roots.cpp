#include "germsum/roots.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <numeric>

namespace germsum {

namespace {

// p(z) and p'(z) by Horner.
void horner(std::span<const Complex> c, const Complex& z, Complex& p, Complex& dp) {
  p = c.back();
  dp = Complex(0);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, int max_iterations) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == Complex(0)) --n;
  if (n == 0) throw DomainError("roots of the zero polynomial are undefined");
  std::span<const Complex> c = coeffs.first(n);
  const std::size_t degree = n - 1;
  if (degree == 0) return {};
  if (degree == 1) return {-c[0] / c[1]};

  // Start on a circle of the Cauchy-bound radius, rotated off the axes.
  Real bound = 0;
  for (std::size_t i = 0; i < degree; ++i) bound = std::max(bound, Real(abs(c[i] / c[degree])));
  bound = 1 + bound;
  Real mean_log = 0;
  int nonzero = 0;
  for (std::size_t i = 0; i < degree; ++i) {
    if (c[i] != Complex(0)) {
      mean_log += log(abs(c[i] / c[degree])) / Real(static_cast<long>(degree - i));
      ++nonzero;
    }
  }
  Real radius = nonzero ? std::min(bound, Real(exp(mean_log / nonzero))) : Real(1);
  if (radius <= 0) radius = 1;

  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Complex> z(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    Real angle = two_pi * Real(static_cast<long>(k)) / Real(static_cast<long>(degree)) + Real(0.4);
    z[k] = Complex(radius * cos(angle), radius * sin(angle));
  }

  const Real tol = ldexp(Real(1), -static_cast<int>(current_precision_bits()) + 8);
  // Roots in tight clusters stall at about half the working precision.
  const Real stall = ldexp(Real(1), -static_cast<int>(current_precision_bits() / 2));
  std::vector<bool> done(degree, false);
  std::vector<Real> last(degree, Real(1e30));
  for (int iter = 0; iter < max_iterations; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < degree; ++k) {
      if (done[k]) continue;
      Complex p, dp;
      horner(c, z[k], p, dp);
      if (p == Complex(0)) {
        done[k] = true;
        continue;
      }
      Complex newton = p / dp;
      Complex sum(0);
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != k && z[j] != z[k]) sum += Complex(1) / (z[k] - z[j]);
      }
      Complex w = newton / (Complex(1) - newton * sum);
      z[k] -= w;
      Real scale = std::max(Real(1), Real(abs(z[k])));
      Real step = abs(w) / scale;
      if (step < tol || (step < stall && step > last[k] / 2)) done[k] = true;
      last[k] = step;
      worst = std::max(worst, step);
    }
    if (worst < tol) break;
  }
  return z;
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, const Real& radius) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(roots[i] - roots[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<RootCluster> out;
  std::vector<std::size_t> rep_index;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    auto pos = std::find(rep_index.begin(), rep_index.end(), r);
    if (pos == rep_index.end()) {
      rep_index.push_back(r);
      out.push_back({roots[i], 1});
    } else {
      auto& cl = out[static_cast<std::size_t>(pos - rep_index.begin())];
      cl.center += roots[i];
      cl.multiplicity += 1;
    }
  }
  for (auto& cl : out) cl.center /= Complex(cl.multiplicity);
  return out;
}

Rational rational_approximation(const Real& x, long max_den) {
  // Continued fraction convergents.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Real rest = x;
  for (int i = 0; i < 64; ++i) {
    Real fl = floor(rest);
    Integer a(fl.convert_to<Integer>());
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Real frac = rest - fl;
    if (frac == 0 || abs(Real(x - Real(Rational(p1, q1)))) < ldexp(Real(1), -static_cast<int>(current_precision_bits()) + 4)) break;
    rest = 1 / frac;
  }
  return Rational(p1, q1);
}

std::vector<ExactScalar> deflate(std::span<const ExactScalar> poly, const ExactScalar& r, ExactScalar& remainder) {
  if (poly.empty()) {
    remainder = ExactScalar();
    return {};
  }
  std::vector<ExactScalar> q(poly.size() - 1);
  ExactScalar acc = poly.back();
  for (std::size_t i = poly.size() - 1; i-- > 0;) {
    q[i] = acc;
    acc = acc * r + poly[i];
  }
  remainder = acc;
  return q;
}

std::optional<ExactScalar> exact_root_near(std::span<const ExactScalar> poly, const Complex& approx,
                                           int multiplicity, const Real& radius) {
  for (long max_den : {1L, 12L, 1000L, 1000000L}) {
    ExactScalar candidate(rational_approximation(real(approx), max_den),
                          rational_approximation(imag(approx), max_den));
    if (abs(to_complex(candidate) - approx) > radius) continue;
    std::vector<ExactScalar> p(poly.begin(), poly.end());
    bool divides = true;
    for (int m = 0; m < multiplicity && divides; ++m) {
      ExactScalar rem;
      p = deflate(p, candidate, rem);
      divides = rem.is_zero();
    }
    if (divides) return candidate;
  }
  return std::nullopt;
}

}  // namespace germsum
