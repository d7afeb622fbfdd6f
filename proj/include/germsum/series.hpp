#pragma once

// Truncated multivariate power series over exact or floating scalars.
//
// A series carries a total-degree truncation N: every coefficient of total
// degree <= N is known, nothing above N is represented. Polynomials known
// exactly use trunc == kUnbounded; trunc == -1 means nothing is known.

#include "germsum/monomial_order.hpp"
#include "germsum/scalar.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <span>
#include <vector>

namespace germsum {

inline constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

/// Saturating sum of truncation orders.
inline int trunc_add(int a, int b) {
  if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
  long long s = static_cast<long long>(a) + b;
  return s >= kUnbounded ? kUnbounded : static_cast<int>(s);
}

class InsufficientTruncation : public DomainError {
 public:
  using DomainError::DomainError;
};

template <class S>
class Series {
 public:
  using Scalar = S;
  using Terms = std::map<ExponentVec, S>;

  Series() = default;
  /// trunc < 0 means no coefficient is known (stored as -1).
  Series(int dim, int trunc) : dim_(dim), trunc_(std::max(trunc, -1)) {
    if (dim < 1) throw std::invalid_argument("series dimension must be >= 1");
  }

  static Series constant(int dim, const S& c, int trunc = kUnbounded) {
    Series s(dim, trunc);
    s.add_term(ExponentVec(dim), c);
    return s;
  }
  static Series monomial(const ExponentVec& e, const S& c, int trunc = kUnbounded) {
    Series s(e.dim(), trunc);
    s.add_term(e, c);
    return s;
  }
  static Series variable(int dim, int index, int trunc = kUnbounded) {
    ExponentVec e(dim);
    e[index] = 1;
    return monomial(e, ScalarTraits<S>::one(), trunc);
  }

  int dim() const { return dim_; }
  int trunc() const { return trunc_; }
  bool exact() const { return trunc_ >= kUnbounded; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const ExponentVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ScalarTraits<S>::zero() : it->second;
  }

  /// Adds c*x^e; ignored above the truncation; zero results are pruned.
  void add_term(const ExponentVec& e, const S& c) {
    if (e.dim() != dim_) throw DimensionMismatch("term dimension does not match series");
    if (e.degree() > trunc_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (ScalarTraits<S>::is_negligible(it->second, nullptr)) terms_.erase(it);
  }

  /// Minimal total degree of a stored term; trunc + 1 for a truncated zero.
  int valuation() const {
    if (terms_.empty()) return trunc_add(trunc_, 1);
    int v = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) v = std::min(v, e.degree());
    return v;
  }

  /// Largest total degree of a stored term (0 for zero).
  int max_degree() const {
    int v = 0;
    for (const auto& [e, c] : terms_) v = std::max(v, e.degree());
    return v;
  }

  Series truncated(int n) const {
    Series out(dim_, std::min(n, trunc_));
    for (const auto& [e, c] : terms_) {
      if (e.degree() <= out.trunc_) out.terms_.emplace(e, c);
    }
    return out;
  }

  /// Same terms with truncation n (terms above n dropped). Raising the
  /// truncation is only valid when the caller knows the extra orders vanish.
  Series with_trunc(int n) const {
    Series out = truncated(n);
    out.trunc_ = std::max(n, -1);
    return out;
  }

  Series scaled(const S& a) const {
    Series out(dim_, trunc_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * a);
    return out;
  }

  Series operator-() const { return scaled(-ScalarTraits<S>::one()); }

  friend bool operator==(const Series& a, const Series& b) {
    return a.dim_ == b.dim_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

 private:
  template <class T>
  friend Series<T> add(const Series<T>&, const Series<T>&, const T&);
  template <class T>
  friend Series<T> mul_capped(const Series<T>&, const Series<T>&, int);

  int dim_ = 1;
  int trunc_ = kUnbounded;
  Terms terms_;
};

namespace detail {

template <class S>
void check_dims(const Series<S>& a, const Series<S>& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("series dimensions differ: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

}  // namespace detail

/// a + sign*b, truncated at min(a.trunc, b.trunc).
template <class S>
Series<S> add(const Series<S>& a, const Series<S>& b, const S& sign) {
  detail::check_dims(a, b);
  Series<S> out(a.dim(), std::min(a.trunc(), b.trunc()));
  for (const auto& [e, c] : a.terms()) {
    if (e.degree() <= out.trunc()) out.terms_.emplace(e, c);
  }
  for (const auto& [e, c] : b.terms()) {
    if (e.degree() > out.trunc()) continue;
    S term = c * sign;
    auto [it, inserted] = out.terms_.try_emplace(e, term);
    if (inserted) continue;
    Real scale;
    if constexpr (!ScalarTraits<S>::is_exact) {
      scale = std::max(ScalarTraits<S>::magnitude(it->second), ScalarTraits<S>::magnitude(term));
    }
    it->second += term;
    if (ScalarTraits<S>::is_negligible(it->second, ScalarTraits<S>::is_exact ? nullptr : &scale)) {
      out.terms_.erase(it);
    }
  }
  return out;
}

template <class S>
Series<S> add(const Series<S>& a, const Series<S>& b) {
  return add(a, b, ScalarTraits<S>::one());
}

template <class S>
Series<S> sub(const Series<S>& a, const Series<S>& b) {
  return add(a, b, -ScalarTraits<S>::one());
}

/// Cauchy product keeping only terms of degree <= cap (and within the
/// product's own truncation).
template <class S>
Series<S> mul_capped(const Series<S>& a, const Series<S>& b, int cap) {
  detail::check_dims(a, b);
  // The unknown tail of a (degree > a.trunc) times b starts above a.trunc + val(b).
  int t = std::min(trunc_add(a.trunc(), b.valuation()), trunc_add(b.trunc(), a.valuation()));
  t = std::min(t, cap);
  Series<S> out(a.dim(), t);
  std::map<ExponentVec, Real> scale;
  for (const auto& [ea, ca] : a.terms()) {
    int da = ea.degree();
    if (da > t) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + eb.degree() > t) continue;
      ExponentVec e = ea + eb;
      S prod = ca * cb;
      if constexpr (!ScalarTraits<S>::is_exact) scale[e] += ScalarTraits<S>::magnitude(prod);
      auto [it, inserted] = out.terms_.try_emplace(std::move(e), prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    const Real* s = nullptr;
    if constexpr (!ScalarTraits<S>::is_exact) s = &scale[it->first];
    it = ScalarTraits<S>::is_negligible(it->second, s) ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

/// Product with the truncation implied by the operands:
/// min(a.trunc + val(b), b.trunc + val(a)).
template <class S>
Series<S> mul(const Series<S>& a, const Series<S>& b) {
  return mul_capped(a, b, kUnbounded);
}

template <class S>
Series<S> operator+(const Series<S>& a, const Series<S>& b) { return add(a, b); }
template <class S>
Series<S> operator-(const Series<S>& a, const Series<S>& b) { return sub(a, b); }
template <class S>
Series<S> operator*(const Series<S>& a, const Series<S>& b) { return mul(a, b); }

template <class S>
Series<S> power(const Series<S>& base, unsigned n) {
  Series<S> result = Series<S>::constant(base.dim(), ScalarTraits<S>::one());
  for (unsigned i = 0; i < n; ++i) result = mul(result, base);
  return result;
}

/// Partial derivative in variable `index`; trunc drops by one.
template <class S>
Series<S> derivative(const Series<S>& f, int index) {
  if (index < 0 || index >= f.dim()) throw std::out_of_range("derivative variable out of range");
  Series<S> out(f.dim(), f.exact() ? kUnbounded : std::max(f.trunc() - 1, 0));
  if (!f.exact() && f.trunc() == 0) return out;
  for (const auto& [e, c] : f.terms()) {
    if (e[index] == 0) continue;
    ExponentVec d = e;
    d[index] -= 1;
    out.add_term(d, c * S(static_cast<long>(e[index])));
  }
  return out;
}

/// f(images[0], ..., images[d-1]). The result truncation accounts for the
/// minimal order of the images (a tail term of f of degree > N lands in
/// degree > (N+1)*min_val - 1) and for the images' own truncations.
template <class S>
Series<S> substitute(const Series<S>& f, std::span<const Series<S>> images) {
  if (static_cast<int>(images.size()) != f.dim()) {
    throw DimensionMismatch("substitute needs one image per variable");
  }
  const int out_dim = images.empty() ? 1 : images.front().dim();
  int min_val = kUnbounded;
  for (const auto& img : images) {
    if (img.dim() != out_dim) throw DimensionMismatch("substitution images differ in dimension");
    min_val = std::min(min_val, img.valuation());
  }
  int out_trunc = kUnbounded;
  if (!f.exact()) {
    long long t = (static_cast<long long>(f.trunc()) + 1) * min_val - 1;
    if (t < 0) {
      throw InsufficientTruncation(
          "substitution of a truncated series into images with a constant term loses every order");
    }
    out_trunc = t >= kUnbounded ? kUnbounded : static_cast<int>(t);
  }
  for (int i = 0; i < f.dim(); ++i) {
    bool used = std::any_of(f.terms().begin(), f.terms().end(),
                            [i](const auto& kv) { return kv.first[i] > 0; });
    if (used) out_trunc = std::min(out_trunc, images[static_cast<std::size_t>(i)].trunc());
  }

  std::vector<std::vector<Series<S>>> powers(images.size());
  auto image_power = [&](std::size_t i, int n) -> const Series<S>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Series<S>::constant(out_dim, ScalarTraits<S>::one()));
    while (static_cast<int>(cache.size()) <= n) cache.push_back(mul_capped(cache.back(), images[i], out_trunc));
    return cache[static_cast<std::size_t>(n)];
  };

  Series<S> out(out_dim, out_trunc);
  for (const auto& [e, c] : f.terms()) {
    Series<S> term = Series<S>::constant(out_dim, c);
    for (int i = 0; i < f.dim() && !term.is_zero(); ++i) {
      if (e[i] == 0) continue;
      term = mul_capped(term, image_power(static_cast<std::size_t>(i), e[i]), out_trunc);
    }
    out = add(out, term);
  }
  return out;
}

template <class S>
Series<S> substitute(const Series<S>& f, const std::vector<Series<S>>& images) {
  return substitute(f, std::span<const Series<S>>(images));
}

/// Order-minimal exponent with nonzero coefficient.
template <class S>
ExponentVec v_ell(const Series<S>& f, const MonomialOrder& order) {
  if (order.dim() != f.dim()) throw DimensionMismatch("order dimension does not match series");
  if (f.is_zero()) throw DomainError("no valuation: series is zero up to its truncation");
  const ExponentVec* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (!best || order.less(e, *best)) best = &e;
  }
  return *best;
}

/// sum |c_a| rho^|a| over stored terms, an upper bound for sup |f| on the
/// polydisk of radius rho.
template <class S>
Real majorant_norm_real(const Series<S>& f, const Real& rho) {
  Real total = 0;
  for (const auto& [e, c] : f.terms()) total += ScalarTraits<S>::magnitude(c) * pow(rho, e.degree());
  return total;
}

template <class S>
double majorant_norm(const Series<S>& f, double rho) {
  if (!(rho > 0)) throw std::invalid_argument("polydisk radius must be positive");
  return majorant_norm_real(f, Real(rho)).template convert_to<double>();
}

/// log of majorant_norm; -inf for the zero series. Safe for huge coefficients.
template <class S>
double log_majorant_norm(const Series<S>& f, double rho) {
  if (!(rho > 0)) throw std::invalid_argument("polydisk radius must be positive");
  if (f.is_zero()) return -std::numeric_limits<double>::infinity();
  return log(majorant_norm_real(f, Real(rho))).template convert_to<double>();
}

template <class S>
Complex evaluate(const Series<S>& f, std::span<const Complex> point) {
  if (static_cast<int>(point.size()) != f.dim()) throw DimensionMismatch("evaluation point dimension");
  Complex total(0);
  for (const auto& [e, c] : f.terms()) {
    Complex term;
    if constexpr (ScalarTraits<S>::is_exact) term = to_complex(c);
    else term = c;
    for (int i = 0; i < f.dim(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[static_cast<std::size_t>(i)];
    }
    total += term;
  }
  return total;
}

Series<Complex> to_float(const Series<ExactScalar>& f);

extern template class Series<ExactScalar>;
extern template class Series<Complex>;

}  // namespace germsum
