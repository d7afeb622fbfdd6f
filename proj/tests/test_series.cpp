#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

#include "germsum/series.hpp"

using namespace germsum;
using th::ES;
using th::poly;

TEST_SUITE("series") {

TEST_CASE("add") {
  ES x1 = th::x(2, 0);
  CHECK(add(x1, -x1).is_zero());
  ES a = poly(2, {{{0, 0}, 1}, {{1, 1}, 1}});
  ES b = poly(2, {{{0, 2}, 1}});
  CHECK(add(a, b) == poly(2, {{{0, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  ES t3 = poly(2, {{{1, 0}, 1}}, 3), t5 = poly(2, {{{0, 1}, 1}}, 5);
  CHECK(add(t3, t5).trunc() == 3);
  CHECK_THROWS_AS(add(th::x(2, 0), th::x(3, 0)), DimensionMismatch);
}

TEST_CASE("mul") {
  ES a = poly(1, {{{0}, 1}, {{1}, 1}}, 4), b = poly(1, {{{0}, 1}, {{1}, -1}}, 4);
  ES p = mul(a, b);
  CHECK(p.trunc() == 4);
  CHECK(p.terms().size() == 2);
  CHECK(p.coeff(ExponentVec{2}) == ExactScalar(-1));
  ES P = poly(2, {{{0, 2}, 1}, {{3, 0}, -1}});
  ES Q = poly(2, {{{3, 0}, -1}, {{0, 2}, -1}});
  CHECK(mul(P, Q) == poly(2, {{{6, 0}, 1}, {{0, 4}, -1}}));
  CHECK(mul(P, ES(2, kUnbounded)).is_zero());
}

TEST_CASE("mul truncation never exceeds what the operands determine") {
  // (1 + O(x^4)) * x1^2 is known through degree 5; (1 + O(x^4))^2 only through 3.
  ES a = poly(2, {{{0, 0}, 1}}, 3);
  CHECK(mul(a, poly(2, {{{2, 0}, 1}})).trunc() == 5);
  CHECK(mul(a, a).trunc() == 3);
  CHECK(mul(poly(2, {{{1, 0}, 1}}, 3), poly(2, {{{0, 1}, 1}}, 5)).trunc() == 4);
}

TEST_CASE("mul agrees with the schoolbook oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + trial % 3;
    int na = 2 + trial % 7, nb = 3 + (trial * 5) % 6;
    ES a = oracle::random_series(rng, d, na, 0.5, trial % 2 == 0);
    ES b = oracle::random_series(rng, d, nb, 0.5);
    ES p = mul(a, b);
    CHECK(p.trunc() >= std::min(na, nb));
    auto ref = oracle::mul(oracle::from_series(a), oracle::from_series(b), p.trunc());
    CHECK(oracle::equal(oracle::from_series(p), ref));
  }
}

TEST_CASE("ring axioms hold exactly") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    ES a = oracle::random_series(rng, 2, 7, 0.4, true);
    ES b = oracle::random_series(rng, 2, 6, 0.4);
    ES c = oracle::random_series(rng, 2, 8, 0.4, true);
    int n = 6;
    CHECK(mul(mul(a, b), c).truncated(n) == mul(a, mul(b, c)).truncated(n));
    CHECK(mul(a, add(b, c)).truncated(n) == add(mul(a, b), mul(a, c)).truncated(n));
    CHECK(mul(a, b) == mul(b, a));
  }
}

TEST_CASE("substitute") {
  ES v1 = th::x(2, 0), v2 = th::x(2, 1);
  ES one = ES::constant(2, ExactScalar(1));
  ES f = mul(th::x(2, 0), th::x(2, 1));
  ES img2 = mul(add(one, v1), v2);
  CHECK(substitute(f, {v2, img2}) == poly(2, {{{0, 2}, 1}, {{1, 2}, 1}}));
  ES g = add(th::x(2, 0), th::x(2, 1));
  CHECK(substitute(g, {mul(v1, v1), v2}) == poly(2, {{{2, 0}, 1}, {{0, 1}, 1}}));
  ES r = th::remark_series(10);
  ES expected(2, kUnbounded);
  for (int n = 0; n <= 10; ++n) expected.add_term(ExponentVec{3 * n, 4 * n}, ExactScalar(th::factorial(n)));
  CHECK(substitute(r, {v2, mul(v1, v2)}) == expected);
}

TEST_CASE("substitute truncation and errors") {
  ES f = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}, 4);
  ES v1 = th::x(2, 0), v2 = th::x(2, 1);
  // images of order 2: a tail term of degree 5 lands in degree >= 10
  CHECK(substitute(f, {mul(v1, v1), mul(v2, v2)}).trunc() == 9);
  ES shifted = add(v1, ES::constant(2, ExactScalar(1)));
  CHECK_THROWS_AS(substitute(f, {shifted, v2}), InsufficientTruncation);
  CHECK_THROWS_AS(substitute(f, {v1}), DimensionMismatch);
  // exact polynomial with an affine image is fine
  ES sq = substitute(mul(th::x(1, 0), th::x(1, 0)), {add(th::x(1, 0), ES::constant(1, ExactScalar(1)))});
  CHECK(sq == poly(1, {{{0}, 1}, {{1}, 2}, {{2}, 1}}));
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937_64 rng(17);
  ES v1 = th::x(2, 0), v2 = th::x(2, 1);
  std::vector<ES> images{v2, mul(add(v1, ES::constant(2, ExactScalar(Rational(2, 3)))), v2)};
  for (int trial = 0; trial < 15; ++trial) {
    ES f = oracle::random_series(rng, 2, 6, 0.5);
    ES g = oracle::random_series(rng, 2, 5, 0.5, true);
    ES lhs = substitute(mul(f, g), images), rhs = mul(substitute(f, images), substitute(g, images));
    int n = std::min(lhs.trunc(), rhs.trunc());
    CHECK(lhs.truncated(n) == rhs.truncated(n));
    ES s1 = substitute(add(f, g), images), s2 = add(substitute(f, images), substitute(g, images));
    n = std::min(s1.trunc(), s2.trunc());
    CHECK(s1.truncated(n) == s2.truncated(n));
  }
}

TEST_CASE("v_ell") {
  ES P = poly(2, {{{0, 2}, 1}, {{3, 0}, -1}});
  CHECK(v_ell(P, MonomialOrder({1, 2})) == ExponentVec{3, 0});
  CHECK(v_ell(P, MonomialOrder({1, 1})) == ExponentVec{0, 2});
  ES f = poly(2, {{{1, 1}, 1}, {{2, 1}, 1}});
  CHECK(v_ell(f, MonomialOrder({1, 5})) == ExponentVec{1, 1});
  CHECK(v_ell(f, MonomialOrder({Rational(7, 3), 1})) == ExponentVec{1, 1});
  ES g = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(v_ell(g, MonomialOrder({1, 1}, TieBreak::Lex)) == ExponentVec{1, 0});
  CHECK(v_ell(g, MonomialOrder({1, 1}, TieBreak::RevLex)) == ExponentVec{0, 1});
  CHECK_THROWS_AS(v_ell(ES(2, 5), MonomialOrder({1, 1})), DomainError);
}

TEST_CASE("v_ell is additive") {
  std::mt19937_64 rng(23);
  MonomialOrder ord({Rational(3, 2), 1, 2});
  for (int trial = 0; trial < 30; ++trial) {
    ES f = oracle::random_series(rng, 3, 5, 0.3), g = oracle::random_series(rng, 3, 5, 0.3, true);
    if (f.is_zero() || g.is_zero()) continue;
    ES p = mul(f, g);
    if (p.is_zero()) continue;
    CHECK(v_ell(p, ord) == v_ell(f, ord) + v_ell(g, ord));
  }
}

TEST_CASE("monomial order") {
  MonomialOrder o = MonomialOrder::parse("1,2/3:revlex");
  CHECK(o.weights()[1] == Rational(2, 3));
  CHECK(o.tiebreak() == TieBreak::RevLex);
  CHECK(MonomialOrder::parse(o.to_string()) == o);
  CHECK_THROWS(MonomialOrder({1, 0}));
  CHECK_THROWS(MonomialOrder::parse("1,-2"));
  // compatible with addition
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 4);
  MonomialOrder ord({Rational(1, 2), 1, 1});
  for (int i = 0; i < 200; ++i) {
    ExponentVec a{e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng)}, c{e(rng), e(rng), e(rng)};
    if (a == b) continue;
    CHECK(ord.less(a, b) != ord.less(b, a));
    CHECK(ord.less(a, b) == ord.less(a + c, b + c));
  }
}

TEST_CASE("majorant norm") {
  CHECK(majorant_norm(ES(2, 4), 0.5) == 0);
  for (int n = 0; n < 8; ++n) {
    ES f = ES::monomial(ExponentVec{0, 2 * n}, ExactScalar(th::factorial(n)));
    CHECK(majorant_norm(f, 0.5) == doctest::Approx(std::tgamma(n + 1.0) * std::pow(4.0, -n)));
  }
  CHECK(majorant_norm(poly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}), 1.0) == 3);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    ES f = oracle::random_series(rng, 2, 5, 0.5, true), g = oracle::random_series(rng, 2, 5, 0.5);
    double rho = 0.3 + 0.1 * (trial % 5);
    CHECK(majorant_norm(add(f, g), rho) <= majorant_norm(f, rho) + majorant_norm(g, rho) + 1e-12);
    CHECK(majorant_norm(mul(f, g), rho) <= majorant_norm(f, rho) * majorant_norm(g, rho) + 1e-12);
  }
}

TEST_CASE("float series prune cancellations") {
  Series<Complex> a = to_float(poly(1, {{{1}, 1}}));
  Series<Complex> third = Series<Complex>::monomial(ExponentVec{1}, Complex(Real(1) / 3));
  Series<Complex> s = sub(sub(sub(a, third), third), third);
  CHECK(s.is_zero());
  CHECK(to_float(poly(1, {{{2}, 3}})).coeff(ExponentVec{2}) == Complex(3));
}

TEST_CASE("scalars") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS(parse_rational("1.5"));
  ExactScalar z(Rational(1, 2), Rational(-3));
  CHECK(z * z.conj() == ExactScalar(Rational(37, 4)));
  CHECK(z / z == ExactScalar(1));
  {
    PrecisionGuard g(256);
    CHECK(current_precision_bits() >= 256);
    Real third = Real(1) / 3;
    CHECK(abs(third * 3 - 1) < Real(1e-70));
  }
  CHECK(current_precision_bits() < 256);
}

}  // TEST_SUITE
