#pragma once

#include "germsum/series.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace th {

using germsum::ExactScalar;
using germsum::ExponentVec;
using germsum::Rational;
using ES = germsum::Series<ExactScalar>;

/// Exact polynomial from (exponent, coefficient) pairs.
inline ES poly(int dim, std::initializer_list<std::pair<std::vector<int>, long>> terms,
               int trunc = germsum::kUnbounded) {
  ES s(dim, trunc);
  for (const auto& [e, c] : terms) s.add_term(ExponentVec(e), ExactScalar(c));
  return s;
}

inline ES x(int dim, int i) { return ES::variable(dim, i); }

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// sum_{n<=max_n} n! x2^(2n) (x1 x2)^n.
inline ES remark_series(int max_n) {
  ES f(2, germsum::kUnbounded);
  for (int n = 0; n <= max_n; ++n) f.add_term(ExponentVec{n, 3 * n}, ExactScalar(factorial(n)));
  return f;
}

}  // namespace th
