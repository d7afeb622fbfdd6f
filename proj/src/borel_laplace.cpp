#include "germsum/borel_laplace.hpp"

#include "germsum/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <mutex>

namespace germsum {

namespace {

const double kPi = boost::math::constants::pi<double>();

Complex unit_real(const Real& angle) { return Complex(cos(angle), sin(angle)); }

Complex unit(double angle) { return unit_real(Real(angle)); }

// Approximants [L/L], [L-1/L-1], ... from the Borel coefficients.
std::vector<RationalApproximant> approximant_family(const BorelSeries& b, int count, double froissart_tol) {
  const int L = (static_cast<int>(b.coeffs.size()) - 1) / 2;
  std::vector<RationalApproximant> out;
  for (int i = 0; i < count && L - i >= 1; ++i) out.emplace_back(b.coeffs, L - i, L - i, froissart_tol);
  return out;
}

double relative_gap(const Complex& p, const std::vector<Complex>& candidates) {
  double best = std::numeric_limits<double>::infinity();
  const Real scale = std::max(Real(abs(p)), Real(1e-30));
  for (const auto& q : candidates) best = std::min(best, Real(abs(p - q) / scale).convert_to<double>());
  return best;
}

std::vector<PoleCluster> stable_poles(const std::vector<RationalApproximant>& family, double tol) {
  std::vector<PoleCluster> out;
  if (family.empty()) return out;
  for (const auto& p : family.front().poles()) {
    double stability = 0;
    for (std::size_t i = 1; i < family.size(); ++i) stability = std::max(stability, relative_gap(p, family[i].poles()));
    if (family.size() > 1 && stability > tol) continue;
    PoleCluster c;
    c.center = p;
    c.modulus = abs(p).convert_to<double>();
    c.argument = angle_diff(arg(p).convert_to<double>(), 0.0);
    c.stability = stability;
    out.push_back(c);
  }
  return out;
}

class PadeContinuation : public Continuation {
 public:
  explicit PadeContinuation(std::vector<RationalApproximant> family) : family_(std::move(family)) {}
  Complex value(const Complex& tau) const override { return family_[0](tau); }
  Real error(const Complex& tau) const override {
    if (family_.size() < 2) return Real(0);
    return abs(family_[0](tau) - family_[1](tau));
  }

 private:
  std::vector<RationalApproximant> family_;
};

// Taylor expansions re-centered along the ray, each step at most a third of
// the distance to the nearest known pole. Re-centering a truncated series
// spoils its top coefficients, so every coefficient carries an error bound
// and only those small against the value at the center are kept.
class TaylorContinuation : public Continuation {
 public:
  TaylorContinuation(std::vector<Complex> coeffs, double theta, std::vector<Complex> poles, Real radius0)
      : direction_(unit(theta)), poles_(std::move(poles)), radius0_(std::move(radius0)) {
    centers_.push_back(Real(0));
    bounds_.emplace_back(coeffs.size(), Real(0));
    expansions_.push_back(std::move(coeffs));
  }

  Complex value(const Complex& tau) const override {
    Complex v;
    Real e;
    evaluate(tau, v, e);
    return v;
  }
  Real error(const Complex& tau) const override {
    Complex v;
    Real e;
    evaluate(tau, v, e);
    return e;
  }

 private:
  static constexpr std::size_t kMinTerms = 8;

  Real radius_at(const Real& r) const {
    Complex c = direction_ * Complex(r);
    Real dist = radius0_ + r;
    for (const auto& p : poles_) dist = std::min(dist, Real(abs(p - c)));
    return dist;
  }

  // sum_{j >= n} binom(j, k) |a_j| h^(j-k) with |a_j| ~ |a_{n-1}| rho^-(j-n+1)
  static double tail_bound(double log_last, double log_h, double log_q, std::size_t n, std::size_t k) {
    double total = 0;
    for (std::size_t j = n; j < n + 5000; ++j) {
      double lt = std::lgamma(j + 1.0) - std::lgamma(k + 1.0) - std::lgamma(j - k + 1.0) + log_last +
                  static_cast<double>(j - n + 1) * log_q + static_cast<double>(j - k) * log_h;
      double term = std::exp(lt);
      total += term;
      if (j > n + 20 && term < 1e-40 * total) break;
    }
    return total;
  }

  void ensure(const Real& r) const {
    while (centers_.back() + radius_at(centers_.back()) / 3 < r) {
      const auto& a = expansions_.back();
      if (a.size() < kMinTerms) {
        throw InsufficientTruncation("Taylor continuation has no reliable coefficients left past |tau| = " +
                                     centers_.back().str(8));
      }
      const Real rho = radius_at(centers_.back());
      const Real h = rho / 3;
      const Complex hc = direction_ * Complex(h);
      std::vector<Complex> b = a;
      std::vector<Real> e = bounds_.back();
      const std::size_t n = b.size();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
          b[j] += hc * b[j + 1];
          e[j] += h * e[j + 1];
        }
      }
      const double log_last = std::log(std::max(abs(a.back()).convert_to<double>(), 1e-300));
      const double log_h = std::log(h.convert_to<double>()), log_q = -std::log(rho.convert_to<double>());
      const Real center = centers_.back() + h;
      const Real reach = radius_at(center) / 3;
      const Real budget = ldexp(std::max(Real(abs(b[0])), Real(1e-300)), -static_cast<int>(current_precision_bits() / 2));
      std::size_t keep = 0;
      for (; keep < n; ++keep) {
        Real ek = e[keep] + Real(tail_bound(log_last, log_h, log_q, n, keep));
        if (!(ek * pow(reach, static_cast<long>(keep)) <= budget)) break;
        e[keep] = ek;
      }
      b.resize(keep);
      e.resize(keep);
      centers_.push_back(center);
      expansions_.push_back(std::move(b));
      bounds_.push_back(std::move(e));
    }
  }

  void evaluate(const Complex& tau, Complex& v, Real& err) const {
    Real r = abs(tau);
    std::lock_guard<std::mutex> lock(mutex_);
    ensure(r);
    std::size_t j = centers_.size() - 1;
    while (j > 0 && centers_[j] > r) --j;
    const auto& a = expansions_[j];
    Complex z = tau - direction_ * Complex(centers_[j]);
    Real dz = abs(z);
    v = Complex(0);
    err = 0;
    for (std::size_t k = a.size(); k-- > 0;) {
      v = v * z + a[k];
      err = err * dz + bounds_[j][k];
    }
    // omitted terms, geometric with ratio |z| / rho
    const Real rho = radius_at(centers_[j]);
    const Real ratio = std::min(dz / rho, Real(0.99));
    err += abs(a.back()) * pow(dz, static_cast<long>(a.size())) / (rho * (1 - ratio));
  }

  Complex direction_;
  std::vector<Complex> poles_;
  Real radius0_;
  mutable std::mutex mutex_;
  mutable std::vector<Real> centers_;
  mutable std::vector<std::vector<Complex>> expansions_;
  mutable std::vector<std::vector<Real>> bounds_;
};

Real root_test_radius(const std::vector<Complex>& c) {
  Real worst = 0;
  for (std::size_t n = std::max<std::size_t>(1, c.size() / 2); n < c.size(); ++n) {
    if (c[n] == Complex(0)) continue;
    worst = std::max(worst, Real(pow(Real(abs(c[n])), Real(1) / Real(static_cast<long>(n)))));
  }
  return worst > 0 ? Real(1 / worst) : Real(1e6);
}

}  // namespace

const char* to_string(ContinuationMethod m) { return m == ContinuationMethod::Pade ? "pade" : "taylor"; }

double angle_diff(double a, double b) {
  double d = std::remainder(a - b, 2 * kPi);
  if (d <= -kPi) d += 2 * kPi;
  return d;
}

BorelSeries borel_transform(const OneVarSeries& s, double k) {
  if (!(k > 0)) throw std::invalid_argument("Borel order k must be positive");
  BorelSeries b;
  b.k = k;
  const Real kk(k);
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    Real g = tgamma(1 + Real(static_cast<long>(n)) / kk);
    b.coeffs.push_back(s.coeffs[n] / Complex(g));
  }
  return b;
}

RayContinuation continue_on_ray(const BorelSeries& b, double theta, std::span<const double> radii,
                                const SumConfig& config) {
  if (b.coeffs.size() < 8) throw std::invalid_argument("continuation needs at least 8 Borel coefficients");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
      throw std::invalid_argument("sample radii must be positive and increasing");
    }
  }
  auto family = approximant_family(b, 3, config.froissart_tol);
  for (const auto& pole : stable_poles(family, config.stability_tol)) {
    if (std::abs(angle_diff(pole.argument, theta)) < config.delta_min) {
      throw SingularRayError("singular ray: pole at " + to_string(pole.center, 12) + " lies within " +
                                 std::to_string(config.delta_min) + " rad of direction " + std::to_string(theta),
                             pole.center);
    }
  }
  RayContinuation rc;
  rc.theta = theta;
  rc.method = config.method;
  if (config.method == ContinuationMethod::Pade) {
    family.resize(std::min<std::size_t>(family.size(), 2));
    rc.eval = std::make_shared<PadeContinuation>(std::move(family));
  } else {
    std::vector<Complex> poles = family.front().poles();
    rc.eval = std::make_shared<TaylorContinuation>(b.coeffs, theta, std::move(poles), root_test_radius(b.coeffs));
  }
  const Complex dir = unit(theta);
  for (double r : radii) {
    Complex tau = dir * Complex(Real(r));
    rc.radii.emplace_back(r);
    rc.values.push_back(rc.eval->value(tau));
    rc.errors.push_back(rc.eval->error(tau));
  }
  return rc;
}

bool admissible(double k, double theta, const Complex& t, double margin) {
  if (t == Complex(0)) return false;
  double d = angle_diff(theta, arg(t).convert_to<double>());
  return std::cos(k * d) > margin;
}

SumResult laplace_sum(const RayContinuation& rc, double k, const Complex& t, const SumConfig& config,
                      bool with_derivative) {
  if (!(k > 0)) throw std::invalid_argument("Laplace order k must be positive");
  if (!rc.eval) throw std::invalid_argument("empty continuation");
  if (!admissible(k, rc.theta, t, config.admissibility_margin)) {
    throw DomainError("direction and point incompatible: the Laplace kernel does not decay along theta = " +
                      std::to_string(rc.theta) + " for arg t = " + std::to_string(arg(t).convert_to<double>()));
  }
  const double theta = rc.theta;
  const Real kk(k);
  // arg t taken on the branch nearest theta.
  const Real arg_t = Real(theta) - Real(angle_diff(theta, arg(t).convert_to<double>()));
  const Real abs_t = abs(t);
  const Complex t_k = Complex(pow(abs_t, kk)) * unit_real(kk * arg_t);
  const Complex rot = unit_real(kk * Real(theta));
  const Complex w = rot / t_k;
  const Real re_w = real(w);
  const Real s_max = -log(Real(config.tail_eps)) / re_w;
  const Complex dir = unit(theta);
  const Continuation& g = *rc.eval;

  auto integrand = [&](const Real& s, std::vector<Complex>& out) {
    Complex tau = dir * Complex(k == 1 ? s : Real(pow(s, 1 / kk)));
    Complex kernel = exp(-Complex(s) * w);
    Complex gv = g.value(tau);
    out[0] = kernel * gv;
    out[1] = Complex(abs(kernel) * g.error(tau));
    if (out.size() > 2) out[2] = (Complex(s) * w - Complex(1)) * kernel * gv;
  };
  const int comps = with_derivative ? 3 : 2;
  const Real tol = Real(config.quad_tol) / re_w;
  QuadratureResult q = integrate(integrand, comps, Real(0), s_max, tol);

  const Complex pref = rot / t_k;
  SumResult res;
  res.t = t;
  res.k = k;
  res.theta = theta;
  res.method = rc.method;
  res.value = pref * q.values[0];
  res.tail_cut = real(pow(s_max, 1 / kk));
  Real tail = exp(-s_max * re_w) * abs(g.value(dir * Complex(res.tail_cut))) / re_w;
  res.quadrature_error = abs(pref) * (q.error + tail);
  res.continuation_error = abs(pref) * abs(q.values[1]);
  if (with_derivative) {
    Complex t_k1 = t_k * Complex(abs_t) * unit_real(arg_t);
    res.derivative = Complex(kk) * rot / t_k1 * q.values[2];
  }
  if (res.continuation_error > Real(config.max_continuation_error) * std::max(Real(1), Real(abs(res.value)))) {
    throw DomainError("continuation error " + res.continuation_error.str(3, std::ios_base::scientific) +
                      " dominates the tolerance");
  }
  return res;
}

template <class S>
OneVarSeries specialize(const PExpansion<S>& expansion, std::span<const Complex> x0) {
  OneVarSeries out;
  for (const auto& g : expansion.coeffs) out.coeffs.push_back(evaluate(g, x0));
  return out;
}

template <class S>
SumResult p_k_sum(const PExpansion<S>& expansion, std::span<const Complex> x0, double k, double theta,
                  const SumConfig& config) {
  if (static_cast<int>(x0.size()) != expansion.germ.dim()) throw DimensionMismatch("point dimension");
  const Complex t = evaluate(expansion.germ.series(), x0);
  OneVarSeries s = specialize(expansion, x0);
  bool polynomial_part_only = true;
  for (std::size_t n = 1; n < s.coeffs.size(); ++n) polynomial_part_only = polynomial_part_only && s.coeffs[n] == Complex(0);
  if (polynomial_part_only) {
    SumResult res;
    res.t = t;
    res.k = k;
    res.theta = theta;
    res.value = s.coeffs.empty() ? Complex(0) : s.coeffs[0];
    res.quadrature_error = res.continuation_error = res.tail_cut = Real(0);
    return res;
  }
  if (!admissible(k, theta, t, config.admissibility_margin)) {
    throw DomainError("point outside P-sector: arg P(x0) = " + std::to_string(arg(t).convert_to<double>()) +
                      " is not within pi/(2k) of theta = " + std::to_string(theta));
  }
  BorelSeries b = borel_transform(s, k);
  RayContinuation rc = continue_on_ray(b, theta, std::vector<double>{}, config);
  return laplace_sum(rc, k, t, config);
}

SingularDirectionReport singular_directions(const BorelSeries& b, const SumConfig& config) {
  if (b.coeffs.size() < 16) throw std::invalid_argument("singular direction search needs at least 16 coefficients");
  SingularDirectionReport rep;
  rep.k = b.k;
  rep.t_period = 2 * kPi / b.k;
  auto family = approximant_family(b, 3, config.froissart_tol);
  for (const auto& a : family) rep.orders.push_back(a.L());
  rep.poles = stable_poles(family, config.stability_tol);
  for (const auto& p : rep.poles) {
    bool known = false;
    for (double d : rep.directions) known = known || std::abs(angle_diff(d, p.argument)) < config.delta_min;
    if (!known) rep.directions.push_back(p.argument);
  }
  return rep;
}

template OneVarSeries specialize(const PExpansion<ExactScalar>&, std::span<const Complex>);
template OneVarSeries specialize(const PExpansion<Complex>&, std::span<const Complex>);
template SumResult p_k_sum(const PExpansion<ExactScalar>&, std::span<const Complex>, double, double, const SumConfig&);
template SumResult p_k_sum(const PExpansion<Complex>&, std::span<const Complex>, double, double, const SumConfig&);

}  // namespace germsum
