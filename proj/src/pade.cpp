#include "germsum/pade.hpp"

#include "germsum/roots.hpp"

#include <algorithm>

namespace germsum {

std::vector<Complex> solve_lowest(std::vector<Complex> A, std::vector<Complex> b, int n) {
  auto at = [&](int r, int c) -> Complex& { return A[static_cast<std::size_t>(r * n + c)]; };
  Real scale = 0;
  for (const auto& v : A) scale = std::max(scale, Real(abs(v)));
  const Real threshold = scale * ldexp(Real(1), -static_cast<int>(current_precision_bits() * 4 / 5));
  std::vector<std::pair<int, int>> pivots;  // (row, column)
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int best = row;
    Real best_mag = abs(at(row, col));
    for (int r = row + 1; r < n; ++r) {
      Real m = abs(at(r, col));
      if (m > best_mag) {
        best_mag = m;
        best = r;
      }
    }
    if (!(best_mag > threshold)) continue;
    if (best != row) {
      for (int c = 0; c < n; ++c) std::swap(at(row, c), at(best, c));
      std::swap(b[static_cast<std::size_t>(row)], b[static_cast<std::size_t>(best)]);
    }
    for (int r = row + 1; r < n; ++r) {
      if (at(r, col) == Complex(0)) continue;
      Complex f = at(r, col) / at(row, col);
      for (int c = col; c < n; ++c) at(r, c) -= f * at(row, c);
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(row)];
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  std::vector<Complex> x(static_cast<std::size_t>(n), Complex(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, c] = *it;
    Complex acc = b[static_cast<std::size_t>(r)];
    for (int k = c + 1; k < n; ++k) acc -= at(r, k) * x[static_cast<std::size_t>(k)];
    x[static_cast<std::size_t>(c)] = acc / at(r, c);
  }
  return x;
}

namespace {

Complex horner(const std::vector<Complex>& p, const Complex& z) {
  Complex acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> roots_of(const std::vector<Complex>& p) {
  std::size_t n = p.size();
  while (n > 0 && p[n - 1] == Complex(0)) --n;
  if (n < 2) return {};
  return polynomial_roots(std::span<const Complex>(p.data(), n));
}

}  // namespace

RationalApproximant::RationalApproximant(std::span<const Complex> c, int L, int M, double froissart_tol)
    : L_(L), M_(M) {
  if (L < 0 || M < 0) throw std::invalid_argument("approximant degrees must be nonnegative");
  if (static_cast<int>(c.size()) <= L + M) throw std::invalid_argument("not enough coefficients for the approximant");
  auto coeff = [&](int i) { return i < 0 ? Complex(0) : c[static_cast<std::size_t>(i)]; };
  den_.assign(static_cast<std::size_t>(M) + 1, Complex(0));
  den_[0] = Complex(1);
  if (M > 0) {
    std::vector<Complex> A(static_cast<std::size_t>(M * M)), b(static_cast<std::size_t>(M));
    for (int i = 1; i <= M; ++i) {
      for (int j = 1; j <= M; ++j) A[static_cast<std::size_t>((i - 1) * M + (j - 1))] = coeff(L + i - j);
      b[static_cast<std::size_t>(i - 1)] = -coeff(L + i);
    }
    auto q = solve_lowest(std::move(A), std::move(b), M);
    for (int j = 1; j <= M; ++j) den_[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j - 1)];
  }
  num_.assign(static_cast<std::size_t>(L) + 1, Complex(0));
  for (int i = 0; i <= L; ++i) {
    for (int j = 0; j <= std::min(i, M); ++j) num_[static_cast<std::size_t>(i)] += den_[static_cast<std::size_t>(j)] * coeff(i - j);
  }
  while (den_.size() > 1 && den_.back() == Complex(0)) den_.pop_back();
  while (num_.size() > 1 && num_.back() == Complex(0)) num_.pop_back();

  std::vector<Complex> zeros = roots_of(num_);
  std::vector<bool> used(zeros.size(), false);
  for (const auto& p : roots_of(den_)) {
    Real tol = Real(froissart_tol) * std::max(Real(1), Real(abs(p)));
    bool paired = false;
    for (std::size_t i = 0; i < zeros.size() && !paired; ++i) {
      if (!used[i] && abs(zeros[i] - p) < tol) used[i] = paired = true;
    }
    (paired ? doublets_ : poles_).push_back(p);
  }
}

Complex RationalApproximant::operator()(const Complex& z) const {
  return horner(num_, z) / horner(den_, z);
}

}  // namespace germsum
