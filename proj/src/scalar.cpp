#include "germsum/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace germsum {

namespace {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

}  // namespace

PrecisionGuard::PrecisionGuard(unsigned bits)
    : previous_digits10_(Real::default_precision()) {
  if (bits < 16) throw std::invalid_argument("precision must be at least 16 bits");
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() {
  Real::default_precision(previous_digits10_);
}

unsigned current_precision_bits() {
  return static_cast<unsigned>(std::floor(Real::default_precision() / 0.30102999566398120));
}

unsigned precision_from_env() {
  if (const char* env = std::getenv("GERMSUM_PREC_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 16 && v <= 100000) return static_cast<unsigned>(v);
    throw std::invalid_argument(std::string("GERMSUM_PREC_BITS is not a valid bit count: ") + env);
  }
  return kDefaultPrecisionBits;
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.is_zero()) throw DomainError("division by exact zero");
  Rational den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
  ExactScalar result(1);
  ExactScalar b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

std::string to_string(const ExactScalar& s) {
  if (s.is_real()) return s.re.str();
  std::string out;
  if (s.re != 0) out = s.re.str();
  Rational mag = s.im < 0 ? Rational(-s.im) : s.im;
  if (s.im < 0) out += "-";
  else if (!out.empty()) out += "+";
  if (mag != 1) out += mag.str() + "*";
  out += "i";
  return out;
}

std::string to_string(const Complex& z, int digits) {
  std::ostringstream os;
  os << real(z).str(digits, std::ios_base::scientific);
  Real im = imag(z);
  if (im != 0) {
    os << (im < 0 ? "-" : "+") << abs(im).str(digits, std::ios_base::scientific) << "*i";
  }
  return os.str();
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("empty integer in rational '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("bad rational '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("bad rational '" + text + "'");
    }
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

Real to_real(const Rational& q) { return Real(q); }

Complex to_complex(const ExactScalar& s) { return Complex(to_real(s.re), to_real(s.im)); }

Real ScalarTraits<ExactScalar>::magnitude(const ExactScalar& v) {
  if (v.im == 0) return abs(to_real(v.re));
  return abs(to_complex(v));
}

bool ScalarTraits<Complex>::is_negligible(const Complex& v, const Real* scale) {
  if (v == Complex(0)) return true;
  if (!scale) return false;
  Real threshold = ldexp(Real(1), -static_cast<int>(current_precision_bits() / 2));
  return abs(v) <= threshold * *scale;
}

}  // namespace germsum
