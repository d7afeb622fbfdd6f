#pragma once

#include "germsum/scalar.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace germsum {

/// Multi-index of a monomial x1^e1 ... xd^ed.
class ExponentVec {
 public:
  ExponentVec() = default;
  explicit ExponentVec(int dim) : e_(static_cast<std::size_t>(dim), 0) {}
  ExponentVec(std::initializer_list<int> e) : e_(e) { check(); }
  explicit ExponentVec(std::vector<int> e) : e_(std::move(e)) { check(); }

  int dim() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return e_; }

  int degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
  }

  /// True iff every entry is >= the matching entry of `base`.
  bool dominates(const ExponentVec& base) const;

  friend ExponentVec operator+(const ExponentVec& a, const ExponentVec& b);
  /// Componentwise difference; caller guarantees a.dominates(b).
  friend ExponentVec operator-(const ExponentVec& a, const ExponentVec& b);

  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
  /// Plain lexicographic order; used for storage and byte-stable output.
  friend auto operator<=>(const ExponentVec& a, const ExponentVec& b) { return a.e_ <=> b.e_; }

 private:
  void check() const;
  std::vector<int> e_;
};

enum class TieBreak {
  Lex,     ///< x1 < x2 < ... < xd among monomials of equal weight and degree
  RevLex,  ///< xd < ... < x1
};

/// Total order on monomials: weighted degree by positive rational weights,
/// then total degree, then the lexicographic tie-break. Compatible with
/// multiplication of monomials.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<Rational> weights, TieBreak tiebreak = TieBreak::Lex);

  /// "w1,w2,...[:lex|:revlex]" with each weight an integer or p/q.
  static MonomialOrder parse(const std::string& text);

  int dim() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  TieBreak tiebreak() const { return tiebreak_; }

  Rational weight(const ExponentVec& e) const;
  std::strong_ordering compare(const ExponentVec& a, const ExponentVec& b) const;
  bool less(const ExponentVec& a, const ExponentVec& b) const { return compare(a, b) < 0; }

  std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.weights_ == b.weights_ && a.tiebreak_ == b.tiebreak_;
  }

 private:
  std::vector<Rational> weights_;
  std::vector<std::int64_t> scaled_;  // weights times the lcm of denominators
  TieBreak tiebreak_ = TieBreak::Lex;
};

/// Map comparator adapter.
struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const ExponentVec& a, const ExponentVec& b) const { return order->less(a, b); }
};

std::string to_string(TieBreak t);
TieBreak parse_tiebreak(const std::string& text);

}  // namespace germsum
