#pragma once

// Scalar domains: exact Gaussian rationals for formal work, arbitrary
// precision complex floats for numerics.

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace germsum {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Complex = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<0>>, mp::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 128;

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Sets the working precision of newly created Real/Complex values for the
/// lifetime of the guard. Values keep the precision they were created with.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned previous_digits10_;
};

/// Mantissa bits currently in effect for new Real values.
unsigned current_precision_bits();

/// Reads GERMSUM_PREC_BITS, falling back to kDefaultPrecisionBits.
unsigned precision_from_env();

/// Exact complex rational re + i*im.
struct ExactScalar {
  Rational re;
  Rational im;

  ExactScalar() = default;
  ExactScalar(long v) : re(v) {}  // NOLINT: integers embed implicitly
  ExactScalar(Rational r) : re(std::move(r)) {}  // NOLINT
  ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  ExactScalar conj() const { return {re, -im}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.re, -a.im}; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
};

ExactScalar pow(const ExactScalar& base, unsigned exponent);

/// Canonical text: "p/q" for reals, "a+b*i" style otherwise.
std::string to_string(const ExactScalar& s);
std::string to_string(const Complex& z, int digits = 0);

/// Parses "p/q" or an integer; rejects anything else.
Rational parse_rational(const std::string& text);

Complex to_complex(const ExactScalar& s);
Real to_real(const Rational& q);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
  static constexpr bool is_exact = true;
  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return ExactScalar(1); }
  static bool is_negligible(const ExactScalar& v, const Real*) { return v.is_zero(); }
  static Real magnitude(const ExactScalar& v);
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool is_exact = false;
  static Complex zero() { return Complex(0); }
  static Complex one() { return Complex(1); }
  /// Cancellation test: |v| below 2^(-prec/2) of the magnitude that produced it.
  static bool is_negligible(const Complex& v, const Real* scale);
  static Real magnitude(const Complex& v) { return abs(v); }
};

}  // namespace germsum
