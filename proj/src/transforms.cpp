#include "germsum/transforms.hpp"

#include "germsum/roots.hpp"

#include <set>

namespace germsum {

BlowupChart BlowupChart::at(ExactScalar xi) {
  BlowupChart c;
  c.exact_xi_ = std::move(xi);
  return c;
}

BlowupChart BlowupChart::at_float(Complex xi) {
  BlowupChart c;
  c.float_xi_ = std::move(xi);
  return c;
}

BlowupChart BlowupChart::infinity() {
  BlowupChart c;
  c.infinite_ = true;
  return c;
}

namespace {

bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if ((ch == '-' || ch == '+') && i == 0) continue;
    if (ch != '/' && (ch < '0' || ch > '9')) return false;
  }
  return true;
}

}  // namespace

BlowupChart BlowupChart::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinity();
  std::string re = text, im = "0";
  if (auto colon = text.find(':'); colon != std::string::npos) {
    re = text.substr(0, colon);
    im = text.substr(colon + 1);
  }
  try {
    if (looks_rational(re) && looks_rational(im)) return at(ExactScalar(parse_rational(re), parse_rational(im)));
    return at_float(Complex(Real(re), Real(im)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad chart parameter '" + text + "'");
  }
}

const ExactScalar& BlowupChart::exact_xi() const {
  if (infinite_ || !exact_xi_) throw DomainError("chart parameter is not an exact finite value");
  return *exact_xi_;
}

Complex BlowupChart::xi() const {
  if (infinite_) throw DomainError("chart at infinity has no finite parameter");
  return exact_xi_ ? to_complex(*exact_xi_) : float_xi_;
}

std::string BlowupChart::to_string() const {
  if (infinite_) return "inf";
  if (exact_xi_) return germsum::to_string(*exact_xi_);
  return germsum::to_string(float_xi_);
}

namespace {

void require_plane(int dim) {
  if (dim < 2) throw DimensionMismatch("blow-up needs at least two variables");
}

template <class S>
S chart_value(const BlowupChart& chart) {
  if constexpr (ScalarTraits<S>::is_exact) {
    if (!chart.is_exact()) throw DomainError("a non-rational chart parameter needs float scalars");
    return chart.exact_xi();
  } else {
    return chart.xi();
  }
}

}  // namespace

template <class S>
Series<S> blowup(const Series<S>& f, const BlowupChart& chart) {
  const int d = f.dim();
  require_plane(d);
  std::vector<Series<S>> images;
  for (int i = 0; i < d; ++i) images.push_back(Series<S>::variable(d, i));
  if (chart.is_infinite()) {
    images[0] = mul(Series<S>::variable(d, 0), Series<S>::variable(d, 1));
  } else {
    S xi = chart_value<S>(chart);
    Series<S> shifted = add(Series<S>::variable(d, 0), Series<S>::constant(d, xi));
    images[0] = Series<S>::variable(d, 1);
    images[1] = mul(shifted, Series<S>::variable(d, 1));
  }
  return substitute(f, images);
}

template <class S>
Series<S> ramify(const Series<S>& f, int k) {
  if (k < 2) throw std::invalid_argument("ramification index must be >= 2");
  const int d = f.dim();
  std::vector<Series<S>> images;
  for (int i = 0; i < d; ++i) images.push_back(Series<S>::variable(d, i));
  ExponentVec e(d);
  e[0] = k;
  images[0] = Series<S>::monomial(e, ScalarTraits<S>::one());
  return substitute(f, images);
}

template <class S>
RotationAverage<S> rotation_average(const Series<S>& g, int k) {
  if (k < 1) throw std::invalid_argument("rotation order must be >= 1");
  RotationAverage<S> out{Series<S>(g.dim(), g.trunc()),
                         Series<S>(g.dim(), g.exact() ? kUnbounded : g.trunc() / k)};
  for (const auto& [e, c] : g.terms()) {
    if (e[0] % k != 0) continue;
    out.averaged.add_term(e, c);
    ExponentVec down = e;
    down[0] /= k;
    out.descended.add_term(down, c);
  }
  return out;
}

template <class S>
Series<S> chart_shift(const Series<S>& f, const S& xi, const S& zeta) {
  const S c = zeta - xi;
  const int out_trunc = f.exact() ? kUnbounded : f.trunc() / 2;
  Series<S> out(f.dim(), out_trunc);
  const bool zero_shift = ScalarTraits<S>::is_negligible(c, nullptr);
  for (const auto& [e, coeff] : f.terms()) {
    if (zero_shift) {
      out.add_term(e, coeff);
      continue;
    }
    // (v1 + c)^a = sum_i binom(a, i) c^(a-i) v1^i
    const int a = e[0];
    std::vector<S> cpow(static_cast<std::size_t>(a) + 1, ScalarTraits<S>::one());
    for (int i = 1; i <= a; ++i) cpow[static_cast<std::size_t>(i)] = cpow[static_cast<std::size_t>(i) - 1] * c;
    S binom = ScalarTraits<S>::one();
    for (int i = 0; i <= a; ++i) {
      ExponentVec t = e;
      t[0] = i;
      if (t.degree() <= out_trunc) out.add_term(t, coeff * binom * cpow[static_cast<std::size_t>(a - i)]);
      binom = binom * S(static_cast<long>(a - i)) / S(static_cast<long>(i + 1));
    }
  }
  return out;
}

std::vector<ExactScalar> dehomogenize(const Series<ExactScalar>& H, int h) {
  std::vector<ExactScalar> poly(static_cast<std::size_t>(h) + 1);
  for (const auto& [e, c] : H.terms()) {
    if (e.degree() != h) throw DomainError("H is not homogeneous of degree h");
    poly[static_cast<std::size_t>(e[1])] += c;
  }
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  return poly;
}

DominantData dominant_data(const Germ& germ, const std::optional<MonomialOrder>& base) {
  const Series<ExactScalar>& p = germ.series();
  const int d = p.dim();
  require_plane(d);
  if (p.is_zero()) throw DomainError("zero germ has no dominant data");
  DominantData out;

  // x'' exponents present in P.
  auto tail_of = [d](const ExponentVec& e) {
    return ExponentVec(std::vector<int>(e.values().begin() + 2, e.values().begin() + d));
  };
  if (d > 2) {
    if (!base) throw std::invalid_argument("dominant data in dimension > 2 needs an order on x3..xd");
    if (base->dim() != d - 2) throw DimensionMismatch("base order must act on d - 2 variables");
    std::set<ExponentVec> present;
    for (const auto& [e, c] : p.terms()) present.insert(tail_of(e));
    const ExponentVec* best = nullptr;
    for (const auto& b : present) {
      if (!best || base->less(b, *best)) best = &b;
    }
    out.a = best->values();
  }

  // Lowest homogeneous part of P_L in (x1, x2).
  out.h = -1;
  for (const auto& [e, c] : p.terms()) {
    if (d > 2 && tail_of(e).values() != out.a) continue;
    int deg = e[0] + e[1];
    if (out.h < 0 || deg < out.h) out.h = deg;
  }
  for (const auto& [e, c] : p.terms()) {
    if (d > 2 && tail_of(e).values() != out.a) continue;
    if (e[0] + e[1] == out.h) out.H.add_term(ExponentVec{e[0], e[1]}, c);
  }

  if (d == 2) {
    out.completed_order = germ.order();
  } else {
    // l2 * h must stay below the weight gap to every other x'' exponent.
    const ExponentVec a(out.a);
    const Rational wa = base->weight(a);
    std::optional<Rational> gap;
    std::set<ExponentVec> seen;
    for (const auto& [e, c] : p.terms()) {
      ExponentVec b = tail_of(e);
      if (b == a || !seen.insert(b).second) continue;
      Rational g = base->weight(b) - wa;
      if (!gap || g < *gap) gap = g;
    }
    if (gap && *gap <= 0) {
      throw DomainError("base order weights do not separate the minimal x'' exponent");
    }
    Rational l2 = (!gap || out.h == 0) ? Rational(1) : Rational(*gap / (2 * out.h));
    std::vector<Rational> weights{l2, l2};
    for (const auto& w : base->weights()) weights.push_back(w);
    out.completed_order = MonomialOrder(weights, base->tiebreak());
  }

  if (out.h == 0) return out;
  std::vector<ExactScalar> poly = dehomogenize(out.H, out.h);
  const int finite_degree = static_cast<int>(poly.size()) - 1;
  if (finite_degree > 0) {
    std::vector<Complex> cpoly;
    for (const auto& c : poly) cpoly.push_back(to_complex(c));
    auto roots = polynomial_roots(cpoly);
    const Real radius = ldexp(Real(1), -static_cast<int>(current_precision_bits() / 4));
    for (const auto& cl : cluster_roots(roots, radius)) {
      ProjectiveRoot r;
      r.multiplicity = cl.multiplicity;
      r.value = cl.center;
      if (auto snapped = exact_root_near(poly, cl.center, cl.multiplicity, radius)) {
        r.exact = true;
        r.exact_value = *snapped;
        r.value = to_complex(*snapped);
      }
      out.roots.push_back(r);
    }
  }
  if (out.h > finite_degree) {
    ProjectiveRoot inf;
    inf.infinite = true;
    inf.exact = true;
    inf.multiplicity = out.h - finite_degree;
    out.roots.push_back(inf);
  }
  return out;
}

#define GERMSUM_INSTANTIATE(S)                                                 \
  template Series<S> blowup(const Series<S>&, const BlowupChart&);             \
  template Series<S> ramify(const Series<S>&, int);                            \
  template RotationAverage<S> rotation_average(const Series<S>&, int);         \
  template Series<S> chart_shift(const Series<S>&, const S&, const S&);

GERMSUM_INSTANTIATE(ExactScalar)
GERMSUM_INSTANTIATE(Complex)

#undef GERMSUM_INSTANTIATE

}  // namespace germsum
