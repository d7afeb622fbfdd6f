#include "germsum/monomial_order.hpp"

#include <numeric>
#include <sstream>

namespace germsum {

void ExponentVec::check() const {
  for (int v : e_) {
    if (v < 0) throw std::invalid_argument("negative exponent");
  }
}

bool ExponentVec::dominates(const ExponentVec& base) const {
  if (base.dim() != dim()) throw DimensionMismatch("exponent dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < base.e_[i]) return false;
  }
  return true;
}

ExponentVec operator+(const ExponentVec& a, const ExponentVec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("exponent dimension mismatch");
  ExponentVec out = a;
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] += b.e_[i];
  return out;
}

ExponentVec operator-(const ExponentVec& a, const ExponentVec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("exponent dimension mismatch");
  ExponentVec out = a;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    out.e_[i] -= b.e_[i];
    if (out.e_[i] < 0) throw std::invalid_argument("exponent difference leaves the cone");
  }
  return out;
}

MonomialOrder::MonomialOrder(std::vector<Rational> weights, TieBreak tiebreak)
    : weights_(std::move(weights)), tiebreak_(tiebreak) {
  if (weights_.empty()) throw std::invalid_argument("monomial order needs at least one weight");
  Integer lcm = 1;
  for (const auto& w : weights_) {
    if (w <= 0) throw std::invalid_argument("monomial order weights must be strictly positive");
    lcm = mp::lcm(lcm, denominator(w));
  }
  for (const auto& w : weights_) {
    Integer s = numerator(w) * (lcm / denominator(w));
    if (s > Integer(std::int64_t{1} << 40)) throw std::invalid_argument("monomial order weights too large");
    scaled_.push_back(s.convert_to<std::int64_t>());
  }
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  std::string weights_part = text;
  TieBreak tb = TieBreak::Lex;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    weights_part = text.substr(0, colon);
    tb = parse_tiebreak(text.substr(colon + 1));
  }
  std::vector<Rational> w;
  std::stringstream ss(weights_part);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
  return MonomialOrder(std::move(w), tb);
}

Rational MonomialOrder::weight(const ExponentVec& e) const {
  if (e.dim() != dim()) throw DimensionMismatch("order/exponent dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < e.dim(); ++i) s += weights_[static_cast<std::size_t>(i)] * e[i];
  return s;
}

std::strong_ordering MonomialOrder::compare(const ExponentVec& a, const ExponentVec& b) const {
  if (a.dim() != dim() || b.dim() != dim()) throw DimensionMismatch("order/exponent dimension mismatch");
  __int128 wa = 0, wb = 0;
  for (int i = 0; i < dim(); ++i) {
    wa += static_cast<__int128>(scaled_[static_cast<std::size_t>(i)]) * a[i];
    wb += static_cast<__int128>(scaled_[static_cast<std::size_t>(i)]) * b[i];
  }
  if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Larger exponent of the preferred variable means the smaller monomial.
  if (tiebreak_ == TieBreak::Lex) {
    for (int i = 0; i < dim(); ++i) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
  } else {
    for (int i = dim() - 1; i >= 0; --i) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ",";
    out += weights_[i].str();
  }
  return out + ":" + germsum::to_string(tiebreak_);
}

std::string to_string(TieBreak t) { return t == TieBreak::Lex ? "lex" : "revlex"; }

TieBreak parse_tiebreak(const std::string& text) {
  if (text == "lex") return TieBreak::Lex;
  if (text == "revlex") return TieBreak::RevLex;
  throw std::invalid_argument("unknown tie-break '" + text + "' (expected lex or revlex)");
}

}  // namespace germsum
