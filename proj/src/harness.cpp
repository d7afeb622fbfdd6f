#include "germsum/harness.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <random>

namespace germsum {

namespace {

using ES = Series<ExactScalar>;

ES var(int i) { return ES::variable(2, i); }

ES factorial_power_sum(const ES& P, int first_power, int max_n, int trunc) {
  ES total(2, trunc);
  ES p_power = power(P, static_cast<unsigned>(first_power));
  Rational fact = 1;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) {
      fact *= n;
      p_power = mul_capped(p_power, P, trunc);
    }
    total = add(total, p_power.scaled(ExactScalar(fact)).truncated(trunc));
  }
  return total;
}

}  // namespace

ExampleName parse_example(const std::string& name) {
  if (name == "remark79") return ExampleName::Remark79;
  if (name == "ode-euler") return ExampleName::OdeEuler;
  if (name == "pde-quasihom") return ExampleName::PdeQuasihom;
  throw std::invalid_argument("unknown example '" + name + "' (expected remark79, ode-euler or pde-quasihom)");
}

std::string to_string(ExampleName name) {
  switch (name) {
    case ExampleName::Remark79: return "remark79";
    case ExampleName::OdeEuler: return "ode-euler";
    case ExampleName::PdeQuasihom: return "pde-quasihom";
  }
  return "?";
}

Example gen_example(ExampleName name, int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation must be >= 0");
  switch (name) {
    case ExampleName::Remark79: {
      ES f(2, trunc);
      Rational fact = 1;
      for (int n = 0; 4 * n <= trunc; ++n) {
        if (n > 0) fact *= n;
        f.add_term(ExponentVec{n, 3 * n}, ExactScalar(fact));
      }
      return {name, f, Germ(mul(var(0), var(1)), MonomialOrder({1, 1})),
              "sum n! x2^(2n) (x1 x2)^n, terms of degree <= trunc"};
    }
    case ExampleName::OdeEuler: {
      ES P = sub(power(var(0), 2), power(var(1), 2));
      int max_m = trunc / 2 - 1;
      ES y = max_m < 0 ? ES(2, trunc) : factorial_power_sum(P, 1, max_m, trunc);
      return {name, y.with_trunc(trunc), Germ(P, MonomialOrder({1, 1})),
              "sum m! P^(m+1) with P = x^2 - eps^2 (x = x1, eps = x2)"};
    }
    case ExampleName::PdeQuasihom: {
      ES P = sub(power(var(1), 2), power(var(0), 3));
      // x1 P^(n+1) starts in degree 2n + 3.
      int max_n = (trunc - 3) / 2;
      ES f(2, trunc);
      if (trunc >= 3) f = mul_capped(var(0), factorial_power_sum(P, 1, max_n, trunc), trunc);
      return {name, f.with_trunc(trunc), Germ(P, MonomialOrder({2, 3})),
              "x1 sum n! P^(n+1) with P = x2^2 - x1^3"};
    }
  }
  throw std::invalid_argument("unknown example");
}

ResidualReport verify_ode_formal(const ES& y, const ES& P) {
  if (y.dim() != 2 || P.dim() != 2) throw DimensionMismatch("the ODE check works in two variables (x, eps)");
  ES dP = derivative(P, 0);
  ES residual = add(sub(mul(mul(P, P), derivative(y, 0)), mul(dP, y)), mul(P, dP));
  ResidualReport rep;
  rep.residual = residual;
  rep.exact_to_truncation = residual.is_zero();
  rep.formal_valuation = residual.valuation();
  return rep;
}

PdeReport verify_pde_formal(const ES& f, const ES& P, const ExactScalar& alpha, const ExactScalar& beta, int k,
                            const ES& A, const ES& B) {
  if (f.dim() != 2 || P.dim() != 2 || A.dim() != 2 || B.dim() != 2) {
    throw DimensionMismatch("the PDE check works in two variables");
  }
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const ES x1 = var(0), x2 = var(1);
  const ES Pk1 = power(P, static_cast<unsigned>(k + 1));
  ES a_coef = add(add(mul(x2, derivative(P, 1)), Pk1.scaled(alpha)), mul(P, A));
  ES b_coef = add(add(mul(x1, derivative(P, 0)), Pk1.scaled(beta)), mul(P, B));
  PdeReport rep;
  rep.h = sub(mul(a_coef, mul(x1, derivative(f, 0))), mul(b_coef, mul(x2, derivative(f, 1))));
  rep.stated_h = mul(mul(x2, derivative(P, 1)), P);
  if (rep.stated_h.is_zero()) throw DomainError("x2 dP/dx2 P vanishes; nothing to divide by");
  Germ D(rep.stated_h, MonomialOrder({1, 1}));
  auto qr = wdivide(rep.h, D);
  rep.cofactor = qr.q;
  rep.remainder = qr.r;
  rep.divisible = qr.r.is_zero();
  ES diff = sub(rep.h, rep.stated_h);
  rep.matches_stated = diff.is_zero();
  return rep;
}

ResidualReport verify_ode_numeric(double k, double theta, const std::vector<double>& radii, int coefficients,
                                  const SumConfig& config) {
  if (coefficients < 8) throw std::invalid_argument("need at least 8 coefficients");
  OneVarSeries s;
  s.coeffs.push_back(Complex(0));
  Real fact = 1;
  for (int m = 1; m < coefficients; ++m) {
    if (m > 1) fact *= (m - 1);
    s.coeffs.push_back(Complex(fact));
  }
  BorelSeries b = borel_transform(s, k);
  RayContinuation rc = continue_on_ray(b, theta, radii, config);
  ResidualReport rep;
  rep.theta = theta;
  rep.k = k;
  double worst = 0;
  const Complex dir(cos(Real(theta)), sin(Real(theta)));
  for (double r : radii) {
    Complex t = dir * Complex(Real(r));
    SumResult res = laplace_sum(rc, k, t, config, true);
    Complex resid = t * t * *res.derivative - res.value + t;
    double v = abs(resid).convert_to<double>();
    rep.numeric_residuals.push_back(v);
    rep.sample_radii.push_back(r);
    worst = std::max(worst, v);
  }
  rep.numeric_max_residual = worst;
  return rep;
}

bool PSectorSample::check(const ES& P) const {
  for (const auto& x : points) {
    for (const auto& xj : x) {
      if (!(abs(xj) < Real(R))) return false;
    }
    Complex t = evaluate(P, x);
    if (t == Complex(0)) return false;
    double a_t = arg(t).convert_to<double>();
    // Compare on the branch of (a, b).
    const double two_pi = 2 * boost::math::constants::pi<double>();
    while (a_t <= a) a_t += two_pi;
    while (a_t - two_pi > a) a_t -= two_pi;
    if (!(a_t > a && a_t < b)) return false;
  }
  return true;
}

PSectorSample sample_p_sector(const ES& P, double a, double b, double R, int count, std::uint64_t seed) {
  if (!(a < b) || !(R > 0) || count < 0) throw std::invalid_argument("sector needs a < b and R > 0");
  PSectorSample out;
  out.a = a;
  out.b = b;
  out.R = R;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 1.0), angle(-boost::math::constants::pi<double>(),
                                                                  boost::math::constants::pi<double>());
  PSectorSample probe = out;
  for (long tries = 0; static_cast<int>(out.points.size()) < count; ++tries) {
    if (tries > 1000000) throw DomainError("P-sector sampling found too few points");
    std::vector<Complex> x;
    for (int j = 0; j < P.dim(); ++j) {
      double r = R * std::sqrt(radius(rng)) * (1 - 1e-9);
      double phi = angle(rng);
      x.emplace_back(Real(r * std::cos(phi)), Real(r * std::sin(phi)));
    }
    probe.points = {x};
    if (probe.check(P)) out.points.push_back(std::move(x));
  }
  return out;
}

GevreyTriple remark79_gevrey_triple(double rho, int n_min) {
  Example ex = gen_example(ExampleName::Remark79, 210);
  const MonomialOrder order({1, 1});
  GevreyTriple out;
  auto direct = p_expand(ex.series.truncated(160), ex.germ, 41);
  out.direct = fit_gevrey(norm_sequence(direct, rho), n_min);

  ES v1v2sq = mul(ES::variable(2, 0), power(ES::variable(2, 1), 2));
  Germ chart_germ(v1v2sq, order);
  auto b0 = p_expand(blowup(ex.series, BlowupChart::at(ExactScalar(0))), chart_germ, 61);
  out.chart0 = fit_gevrey(norm_sequence(b0, rho), n_min);
  auto binf = p_expand(blowup(ex.series, BlowupChart::infinity()), chart_germ, 41);
  out.chartinf = fit_gevrey(norm_sequence(binf, rho), n_min);
  out.pass = std::abs(out.direct.s - 1.0) <= 0.1 && std::abs(out.chart0.s - 0.5) <= 0.1 &&
             std::abs(out.chartinf.s - 1.0) <= 0.1;
  return out;
}

}  // namespace germsum
