#include "germsum/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <map>
#include <mutex>

namespace germsum {

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, unsigned>, GaussLegendre> cache;
  const unsigned bits = current_precision_bits();
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, bits);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  GaussLegendre rule;
  const Real pi = boost::math::constants::pi<Real>();
  const Real eps = ldexp(Real(1), -static_cast<int>(bits) + 4);
  for (int i = 1; i <= n; ++i) {
    Real x = cos(pi * (Real(i) - Real(0.25)) / (Real(n) + Real(0.5)));
    Real dp;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and its derivative.
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    Real p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    rule.nodes.push_back(x);
    rule.weights.push_back(2 / ((1 - x * x) * dp * dp));
  }
  return cache.emplace(key, std::move(rule)).first->second;
}

namespace {

struct Context {
  const VectorIntegrand& f;
  int components;
  const GaussLegendre& rule;
  Real total_width;
  Real tol;
  int max_depth;
  int panels = 0;
};

std::vector<Complex> apply_rule(Context& ctx, const Real& a, const Real& b) {
  std::vector<Complex> sum(static_cast<std::size_t>(ctx.components), Complex(0));
  std::vector<Complex> val(static_cast<std::size_t>(ctx.components));
  const Real half = (b - a) / 2, mid = (a + b) / 2;
  for (std::size_t i = 0; i < ctx.rule.nodes.size(); ++i) {
    ctx.f(mid + half * ctx.rule.nodes[i], val);
    for (int c = 0; c < ctx.components; ++c) {
      sum[static_cast<std::size_t>(c)] += Complex(ctx.rule.weights[i]) * val[static_cast<std::size_t>(c)];
    }
  }
  for (auto& v : sum) v *= Complex(half);
  return sum;
}

void panel(Context& ctx, const Real& a, const Real& b, const std::vector<Complex>& whole, int depth,
           std::vector<Complex>& out, Real& err) {
  const Real mid = (a + b) / 2;
  std::vector<Complex> left = apply_rule(ctx, a, mid);
  std::vector<Complex> right = apply_rule(ctx, mid, b);
  Real diff = abs(left[0] + right[0] - whole[0]);
  Real local_tol = ctx.tol * (b - a) / ctx.total_width / 4;
  if (diff <= local_tol || depth >= ctx.max_depth) {
    ++ctx.panels;
    out.resize(left.size());
    for (std::size_t c = 0; c < left.size(); ++c) out[c] = left[c] + right[c];
    err = diff;
    return;
  }
  std::vector<Complex> lo, hi;
  Real elo, ehi;
  panel(ctx, a, mid, left, depth + 1, lo, elo);
  panel(ctx, mid, b, right, depth + 1, hi, ehi);
  out.resize(lo.size());
  for (std::size_t c = 0; c < lo.size(); ++c) out[c] = lo[c] + hi[c];
  err = elo + ehi;
}

}  // namespace

QuadratureResult integrate(const VectorIntegrand& f, int components, const Real& a, const Real& b,
                           const Real& tol, int max_depth, int points) {
  if (!(b > a)) throw std::invalid_argument("integration interval must have b > a");
  Context ctx{f, components, gauss_legendre(points), b - a, tol, max_depth};
  QuadratureResult res;
  std::vector<Complex> whole = apply_rule(ctx, a, b);
  panel(ctx, a, b, whole, 0, res.values, res.error);
  res.panels = ctx.panels;
  return res;
}

}  // namespace germsum
