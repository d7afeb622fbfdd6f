#include "germsum/weierstrass.hpp"

#include <random>

namespace germsum {

template <class S>
BasicGerm<S>::BasicGerm(Series<S> p, MonomialOrder order) : p_(std::move(p)), order_(std::move(order)) {
  if (order_.dim() != p_.dim()) throw DimensionMismatch("germ and order dimensions differ");
  if (p_.is_zero()) throw DomainError("zero germ: P must not vanish identically");
  if (!ScalarTraits<S>::is_negligible(p_.coeff(ExponentVec(p_.dim())), nullptr)) {
    throw DomainError("germ has a nonzero constant term (P(0) must be 0)");
  }
  lead_exp_ = v_ell(p_, order_);
  lead_coeff_ = p_.coeff(lead_exp_);
}

namespace {

template <class S>
using Work = std::map<ExponentVec, S, OrderLess>;

// Subtracts m * x^gamma * (P - lead term) from the work map, skipping degrees
// above cap.
template <class S>
void cancel_against(Work<S>& work, std::map<ExponentVec, Real>& scale, const BasicGerm<S>& germ,
                    const ExponentVec& gamma, const S& m, int cap) {
  for (const auto& [beta, pb] : germ.series().terms()) {
    if (beta == germ.lead_exp()) continue;
    ExponentVec e = gamma + beta;
    if (e.degree() > cap) continue;
    S delta = m * pb;
    auto [it, inserted] = work.try_emplace(e, -delta);
    if constexpr (!ScalarTraits<S>::is_exact) {
      Real& sc = scale[e];
      if (inserted) sc = ScalarTraits<S>::magnitude(delta);
      else sc = std::max(sc, std::max(ScalarTraits<S>::magnitude(it->second), ScalarTraits<S>::magnitude(delta)));
    }
    if (inserted) continue;
    it->second -= delta;
    const Real* s = nullptr;
    if constexpr (!ScalarTraits<S>::is_exact) s = &scale[e];
    if (ScalarTraits<S>::is_negligible(it->second, s)) work.erase(it);
  }
}

template <class S>
DivisionResult<S> divide_at(const Series<S>& g, const BasicGerm<S>& germ, int cap, int rtrunc, int qtrunc,
                            DivisionSchedule schedule, std::uint64_t seed) {
  DivisionResult<S> out{Series<S>(g.dim(), cap - germ.lead_degree()), Series<S>(g.dim(), cap)};
  Work<S> work(OrderLess{&germ.order()});
  std::map<ExponentVec, Real> scale;
  for (const auto& [e, c] : g.terms()) {
    if (e.degree() <= cap) work.emplace(e, c);
  }
  std::mt19937_64 rng(seed);
  while (!work.empty()) {
    auto it = work.begin();
    if (schedule == DivisionSchedule::Shuffled) {
      std::vector<typename Work<S>::iterator> cone;
      for (auto j = work.begin(); j != work.end(); ++j) {
        if (!delta_member(j->first, germ)) cone.push_back(j);
      }
      if (cone.empty()) {
        for (const auto& [e, c] : work) out.r.add_term(e, c);
        break;
      }
      it = cone[std::uniform_int_distribution<std::size_t>(0, cone.size() - 1)(rng)];
    }
    ExponentVec e = it->first;
    S c = it->second;
    work.erase(it);
    scale.erase(e);
    if (delta_member(e, germ)) {
      out.r.add_term(e, c);
      continue;
    }
    ExponentVec gamma = e - germ.lead_exp();
    S m = c / germ.lead_coeff();
    out.q.add_term(gamma, m);
    cancel_against(work, scale, germ, gamma, m, cap);
  }
  out.q = out.q.with_trunc(qtrunc);
  out.r = out.r.with_trunc(rtrunc);
  return out;
}

// Reliable orders of q and r for a division at truncation n.
template <class S>
std::pair<int, int> reliable_orders(const BasicGerm<S>& germ, int n) {
  const int lead = germ.lead_degree(), valp = germ.valuation();
  if (n < 0) return {-1, -1};
  if (valp >= lead) return {n - lead, n};
  // Cancelling a cone term can lower the degree here, but never the weight:
  // whatever the unknown terms (weight >= W = lmin (n + 1)) touch has weight
  // >= W in r and >= W - w(lead) in q.
  const auto& w = germ.order().weights();
  const Rational lmin = *std::min_element(w.begin(), w.end());
  const Rational lmax = *std::max_element(w.begin(), w.end());
  const Rational W = lmin * (n + 1);
  auto below = [&](const Rational& bound) {
    // largest D with lmax D < bound
    Rational x = bound / lmax;
    Integer fl = numerator(x) / denominator(x);
    if (x < 0 && Rational(fl) != x) fl -= 1;
    if (Rational(fl) == x) fl -= 1;
    return static_cast<int>(fl);
  };
  int q = std::max(below(W - germ.order().weight(germ.lead_exp())), -1);
  // q P + r = g only holds below the first degree a dropped q term can reach.
  int r = std::min(below(W), trunc_add(q, valp));
  return {q, r};
}

}  // namespace

template <class S>
int reliable_trunc(const BasicGerm<S>& germ, int n) {
  return n >= kUnbounded ? n : reliable_orders(germ, n).second;
}

template <class S>
DivisionResult<S> wdivide(const Series<S>& g, const BasicGerm<S>& germ, DivisionSchedule schedule,
                          std::uint64_t seed) {
  if (g.dim() != germ.dim()) throw DimensionMismatch("dividend and germ dimensions differ");
  int n = std::min(g.trunc(), germ.series().trunc());
  if (n >= kUnbounded) {
    int working = std::max(g.max_degree(), 1) * std::max(germ.series().max_degree(), 1);
    auto out = divide_at(g, germ, working, working, working - germ.lead_degree(), schedule, seed);
    auto q_exact = out.q.with_trunc(kUnbounded);
    auto r_exact = out.r.with_trunc(kUnbounded);
    if (add(mul(q_exact, germ.series()), r_exact) == g) return {q_exact, r_exact};
    n = working;
  }
  auto [qt, rt] = reliable_orders(germ, n);
  return divide_at(g, germ, n, rt, qt, schedule, seed);
}

template <class S>
PExpansion<S> make_expansion(BasicGerm<S> germ, std::vector<Series<S>> coeffs) {
  PExpansion<S> out{std::move(germ), std::move(coeffs)};
  int t = kUnbounded;
  int valp = out.germ.valuation();
  for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
    if (out.coeffs[n].dim() != out.germ.dim()) throw DimensionMismatch("expansion coefficient dimension");
    t = std::min(t, trunc_add(out.coeffs[n].trunc(), static_cast<int>(n) * valp));
  }
  if (out.coeffs.size() > 1) t = std::min(t, out.germ.series().trunc());
  out.source_trunc = t;
  out.reconstruction_trunc = t;
  return out;
}

template <class S>
PExpansion<S> p_expand(const Series<S>& f, const BasicGerm<S>& germ, int depth) {
  if (depth < 1) throw std::invalid_argument("expansion depth must be >= 1");
  if (f.dim() != germ.dim()) throw DimensionMismatch("series and germ dimensions differ");
  PExpansion<S> out{germ, {}};
  out.source_trunc = f.trunc();
  const int valp = germ.valuation();
  int recon = std::min(f.trunc(), germ.series().trunc());
  Series<S> q = f;
  for (int n = 0; n < depth; ++n) {
    // Dropped terms of step n sit above q.trunc and reach degree q.trunc + n*val(P).
    recon = std::min(recon, trunc_add(q.trunc(), n * valp));
    auto step = wdivide(q, germ);
    recon = std::min(recon, trunc_add(step.r.trunc(), n * valp));
    out.coeffs.push_back(std::move(step.r));
    q = std::move(step.q);
  }
  if (!q.is_zero()) recon = std::min(recon, trunc_add(q.valuation(), depth * valp) - 1);
  out.reconstruction_trunc = std::max(recon, -1);
  return out;
}

template <class S>
Series<S> t_substitute(const PExpansion<S>& expansion) {
  const int dim = expansion.germ.dim();
  const int cap = expansion.reconstruction_trunc;
  Series<S> total(dim, cap);
  Series<S> p_power = Series<S>::constant(dim, ScalarTraits<S>::one());
  for (std::size_t n = 0; n < expansion.coeffs.size(); ++n) {
    if (n > 0) p_power = mul_capped(p_power, expansion.germ.series(), cap);
    total = add(total, mul_capped(expansion.coeffs[n], p_power, cap));
  }
  return total.truncated(cap);
}

template class BasicGerm<ExactScalar>;
template class BasicGerm<Complex>;

#define GERMSUM_INSTANTIATE(S)                                                                          \
  template int reliable_trunc(const BasicGerm<S>&, int);                                                 \
  template DivisionResult<S> wdivide(const Series<S>&, const BasicGerm<S>&, DivisionSchedule, std::uint64_t); \
  template PExpansion<S> make_expansion(BasicGerm<S>, std::vector<Series<S>>);                           \
  template PExpansion<S> p_expand(const Series<S>&, const BasicGerm<S>&, int);                           \
  template Series<S> t_substitute(const PExpansion<S>&);

GERMSUM_INSTANTIATE(ExactScalar)
GERMSUM_INSTANTIATE(Complex)

#undef GERMSUM_INSTANTIATE

}  // namespace germsum
