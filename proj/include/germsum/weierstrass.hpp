#pragma once

// Generalized Weierstrass division by a germ P with respect to a monomial
// order, and the P-adic expansion f = sum g_n P^n with every g_n supported
// outside the cone lead(P) + N^d.

#include "germsum/series.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace germsum {

/// A nonzero series without constant term together with the order that
/// selects its leading monomial.
template <class S>
class BasicGerm {
 public:
  BasicGerm(Series<S> p, MonomialOrder order);

  const Series<S>& series() const { return p_; }
  const MonomialOrder& order() const { return order_; }
  const ExponentVec& lead_exp() const { return lead_exp_; }
  const S& lead_coeff() const { return lead_coeff_; }
  int dim() const { return p_.dim(); }
  int lead_degree() const { return lead_exp_.degree(); }
  /// Minimal total degree of P.
  int valuation() const { return p_.valuation(); }

 private:
  Series<S> p_;
  MonomialOrder order_;
  ExponentVec lead_exp_;
  S lead_coeff_;
};

using Germ = BasicGerm<ExactScalar>;

/// True iff e lies outside lead(P) + N^d, i.e. a monomial a remainder may use.
template <class S>
bool delta_member(const ExponentVec& e, const BasicGerm<S>& germ) {
  return !e.dominates(germ.lead_exp());
}

template <class S>
struct DivisionResult {
  Series<S> q;
  Series<S> r;
};

enum class DivisionSchedule {
  Ordered,   ///< always cancel the order-minimal term of the cone
  Shuffled,  ///< cancel cone terms in pseudo-random order (same result)
};

/// Largest degree up to which a division at truncation n is unaffected by
/// the unknown terms above n. Equal to n unless P has terms of lower degree
/// than its leading monomial.
template <class S>
int reliable_trunc(const BasicGerm<S>& germ, int n);

/// g = q*P + r modulo degree > r.trunc, with r supported outside the cone.
///
/// Truncations, with n = min(g.trunc, P.trunc): r.trunc = n and q.trunc =
/// n - deg(lead) when no term of P has lower degree than lead(P). Otherwise
/// both shrink to the degrees the unknown terms above n cannot reach (see
/// reliable_trunc). When both g and P are exact polynomials, the division runs at
/// degree deg(g)*deg(P); if the quotient then turns out to be a polynomial
/// (q*P + r == g exactly) both outputs are marked exact.
template <class S>
DivisionResult<S> wdivide(const Series<S>& g, const BasicGerm<S>& germ,
                          DivisionSchedule schedule = DivisionSchedule::Ordered,
                          std::uint64_t seed = 0);

/// Coefficients g_0..g_{M-1} of f = sum g_n P^n (+ P^M * remainder).
///
/// g_n carries the truncation of the n-th division step (N - n*deg(lead)).
/// reconstruction_trunc is the degree up to which sum g_n P^n equals f.
template <class S>
struct PExpansion {
  BasicGerm<S> germ;
  std::vector<Series<S>> coeffs;
  int source_trunc = kUnbounded;
  int reconstruction_trunc = kUnbounded;

  int depth() const { return static_cast<int>(coeffs.size()); }
};

/// Builds an expansion from user-supplied coefficients; reconstruction_trunc
/// follows from the coefficient truncations.
template <class S>
PExpansion<S> make_expansion(BasicGerm<S> germ, std::vector<Series<S>> coeffs);

template <class S>
PExpansion<S> p_expand(const Series<S>& f, const BasicGerm<S>& germ, int depth);

/// T_ell f: the same data as p_expand, read as sum g_n(x) t^n.
template <class S>
PExpansion<S> t_map(const Series<S>& f, const BasicGerm<S>& germ, int depth) {
  return p_expand(f, germ, depth);
}

/// (T_ell f)(P): replaces t by P, truncated at reconstruction_trunc.
template <class S>
Series<S> t_substitute(const PExpansion<S>& expansion);

extern template class BasicGerm<ExactScalar>;
extern template class BasicGerm<Complex>;

}  // namespace germsum
