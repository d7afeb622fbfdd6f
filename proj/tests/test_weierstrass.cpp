#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

#include "germsum/weierstrass.hpp"

using namespace germsum;
using th::ES;
using th::poly;

namespace {

ES cusp() { return poly(2, {{{0, 2}, 1}, {{3, 0}, -1}}); }

bool delta_supported(const ES& s, const Germ& g) {
  for (const auto& [e, c] : s.terms()) {
    if (!delta_member(e, g)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("weierstrass") {

TEST_CASE("germ validation") {
  CHECK_THROWS_AS(Germ(ES(2, kUnbounded), MonomialOrder({1, 1})), DomainError);
  CHECK_THROWS_AS(Germ(poly(2, {{{0, 0}, 1}, {{1, 0}, 1}}), MonomialOrder({1, 1})), DomainError);
  CHECK_THROWS_AS(Germ(th::x(2, 0), MonomialOrder({1, 1, 1})), DimensionMismatch);
  Germ g(cusp(), MonomialOrder({1, 2}));
  CHECK(g.lead_exp() == ExponentVec{3, 0});
  CHECK(g.lead_coeff() == ExactScalar(-1));
}

TEST_CASE("delta membership") {
  Germ g(cusp(), MonomialOrder({1, 2}));
  CHECK(delta_member(ExponentVec{2, 0}, g));
  CHECK_FALSE(delta_member(ExponentVec{3, 5}, g));
  Germ m(mul(th::x(2, 0), th::x(2, 1)), MonomialOrder({1, 1}));
  CHECK_FALSE(delta_member(ExponentVec{1, 1}, m));
  CHECK(delta_member(ExponentVec{0, 7}, m));
}

TEST_CASE("wdivide examples") {
  Germ g(cusp(), MonomialOrder({1, 2}));
  auto a = wdivide(poly(2, {{{3, 0}, 1}}), g);
  CHECK(a.q == poly(2, {{{0, 0}, -1}}));
  CHECK(a.r == poly(2, {{{0, 2}, 1}}));
  auto b = wdivide(poly(2, {{{6, 0}, 1}}), g);
  CHECK(b.q == poly(2, {{{3, 0}, -1}, {{0, 2}, -1}}));
  CHECK(b.r == poly(2, {{{0, 4}, 1}}));
  Germ m(mul(th::x(2, 0), th::x(2, 1)), MonomialOrder({1, 1}));
  auto c = wdivide(poly(2, {{{2, 1}, 1}, {{1, 0}, 1}, {{0, 2}, 1}}), m);
  CHECK(c.q == poly(2, {{{1, 0}, 1}}));
  CHECK(c.r == poly(2, {{{1, 0}, 1}, {{0, 2}, 1}}));
  CHECK_THROWS_AS(wdivide(th::x(3, 0), m), DimensionMismatch);
}

TEST_CASE("ties are broken by the order's tie-break") {
  ES P = add(th::x(2, 0), th::x(2, 1));
  ES g = mul(th::x(2, 0), th::x(2, 1));
  Germ lex(P, MonomialOrder({1, 1}, TieBreak::Lex)), rev(P, MonomialOrder({1, 1}, TieBreak::RevLex));
  CHECK(lex.lead_exp() == ExponentVec{1, 0});
  CHECK(rev.lead_exp() == ExponentVec{0, 1});
  auto a = wdivide(g, lex), b = wdivide(g, rev);
  CHECK(a.q == th::x(2, 1));
  CHECK(a.r == poly(2, {{{0, 2}, -1}}));
  CHECK(b.q == th::x(2, 0));
  CHECK(b.r == poly(2, {{{2, 0}, -1}}));
}

TEST_CASE("truncated division") {
  std::mt19937_64 rng(2);
  Germ g(add(mul(th::x(2, 0), th::x(2, 1)), poly(2, {{{0, 3}, 2}})), MonomialOrder({1, 1}));
  for (int trial = 0; trial < 40; ++trial) {
    ES f = oracle::random_series(rng, 2, 4 + trial % 8, 0.5, trial % 3 == 0);
    auto res = wdivide(f, g);
    CHECK(res.r.trunc() == f.trunc());
    CHECK(res.q.trunc() == f.trunc() - 2);
    CHECK(delta_supported(res.r, g));
    auto back = oracle::add(oracle::mul(oracle::from_series(res.q), oracle::from_series(g.series()), res.r.trunc()),
                            oracle::from_series(res.r));
    CHECK(oracle::equal(back, oracle::truncate(oracle::from_series(f), res.r.trunc())));
    auto shuffled = wdivide(f, g, DivisionSchedule::Shuffled, 99 + trial);
    CHECK(shuffled.q == res.q);
    CHECK(shuffled.r == res.r);
  }
}

TEST_CASE("lower-degree terms of P shrink the reliable truncation") {
  // lead x1^3 has degree 3 but P has degree 2: unknown x1^a terms of g cascade down.
  Germ g(cusp(), MonomialOrder({1, 2}));
  CHECK(reliable_trunc(g, 11) == 5);
  Germ h(cusp(), MonomialOrder({1, 1}));
  CHECK(reliable_trunc(h, 11) == 11);
  ES f = poly(2, {{{1, 0}, 1}, {{6, 0}, 1}}, 11);
  auto res = wdivide(f, g);
  CHECK(res.r.trunc() == 5);
  // two different completions of f above degree 11 agree on r up to degree 5
  ES f2 = add(f.with_trunc(kUnbounded), poly(2, {{{12, 0}, 1}}));
  auto exact = wdivide(f2.with_trunc(30), g);
  CHECK(exact.r.truncated(5) == res.r);
  // at N = 1 nothing of q is known: x1^3 already exceeds the weight bound
  auto low = wdivide(poly(2, {{{1, 0}, 1}}, 1), g);
  CHECK(low.q.trunc() == -1);
  CHECK(low.r.trunc() == 0);
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(4);
  Germ g(poly(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 2}, 3}}), MonomialOrder({1, 1}));
  ExactScalar al(Rational(2, 3), 1), be(Rational(-5, 2));
  for (int trial = 0; trial < 10; ++trial) {
    ES g1 = oracle::random_series(rng, 2, 8, 0.5), g2 = oracle::random_series(rng, 2, 8, 0.5, true);
    auto a = wdivide(g1, g), b = wdivide(g2, g);
    auto c = wdivide(add(g1.scaled(al), g2.scaled(be)), g);
    CHECK(c.q == add(a.q.scaled(al), b.q.scaled(be)));
    CHECK(c.r == add(a.r.scaled(al), b.r.scaled(be)));
  }
}

TEST_CASE("p_expand examples") {
  ES P = cusp();
  Germ g(P, MonomialOrder({1, 2}));
  ES geo(2, kUnbounded), pn = ES::constant(2, ExactScalar(1));
  for (int n = 0; n <= 8; ++n) {
    geo = add(geo, pn);
    pn = mul(pn, P);
  }
  auto e1 = p_expand(geo, g, 9);
  for (int n = 0; n <= 8; ++n) CHECK(e1.coeffs[static_cast<std::size_t>(n)] == ES::constant(2, ExactScalar(1)));

  Germ m(mul(th::x(2, 0), th::x(2, 1)), MonomialOrder({1, 1}));
  auto e2 = p_expand(th::remark_series(10), m, 11);
  for (int n = 0; n <= 10; ++n) {
    CHECK(e2.coeffs[static_cast<std::size_t>(n)] == ES::monomial(ExponentVec{0, 2 * n}, ExactScalar(th::factorial(n))));
  }

  ES f(2, kUnbounded);
  pn = P;
  for (int n = 0; n <= 8; ++n) {
    f = add(f, pn.scaled(ExactScalar(th::factorial(n))));
    pn = mul(pn, P);
  }
  f = mul(th::x(2, 0), f);
  auto e3 = p_expand(f, g, 10);
  CHECK(e3.coeffs[0].is_zero());
  for (int n = 1; n <= 9; ++n) {
    CHECK(e3.coeffs[static_cast<std::size_t>(n)] == th::x(2, 0).scaled(ExactScalar(th::factorial(n - 1))));
  }
  auto back = oracle::from_series(t_substitute(e3));
  CHECK(oracle::equal(back, oracle::from_series(f)));
}

TEST_CASE("truncated p_expand coefficients carry their own truncation") {
  Germ m(mul(th::x(2, 0), th::x(2, 1)), MonomialOrder({1, 1}));
  ES f = th::remark_series(10).truncated(20);
  auto e = p_expand(f, m, 6);
  for (int n = 0; n < 6; ++n) CHECK(e.coeffs[static_cast<std::size_t>(n)].trunc() == 20 - 2 * n);
  CHECK(e.reconstruction_trunc == 20);
  CHECK(t_substitute(e) == f);
  CHECK_THROWS(p_expand(f, m, 0));
}

TEST_CASE("t_map and t_substitute") {
  Germ m(mul(th::x(2, 0), th::x(2, 1)), MonomialOrder({1, 1}));
  auto e = t_map(poly(2, {{{2, 1}, 1}, {{1, 0}, 1}, {{0, 2}, 1}}), m, 3);
  CHECK(e.coeffs[0] == poly(2, {{{1, 0}, 1}, {{0, 2}, 1}}));
  CHECK(e.coeffs[1] == th::x(2, 0));
  CHECK(e.coeffs[2].is_zero());
  auto p = t_map(m.series(), m, 2);
  CHECK(p.coeffs[0].is_zero());
  CHECK(p.coeffs[1] == ES::constant(2, ExactScalar(1)));
  ES in_delta = poly(2, {{{5, 0}, 2}, {{0, 3}, 1}});
  auto d = t_map(in_delta, m, 3);
  CHECK(d.coeffs[0] == in_delta);
  CHECK(d.coeffs[1].is_zero());

  auto two = make_expansion(m, {ES::constant(2, ExactScalar(1)), ES::constant(2, ExactScalar(1))});
  CHECK(t_substitute(two) == poly(2, {{{0, 0}, 1}, {{1, 1}, 1}}));

  auto rem = t_map(th::remark_series(10), m, 11);
  CHECK(t_substitute(rem) == th::remark_series(10));
}

TEST_CASE("float division") {
  Germ g(cusp(), MonomialOrder({1, 2}));
  BasicGerm<Complex> gf(to_float(g.series()), g.order());
  auto res = wdivide(to_float(poly(2, {{{6, 0}, 1}})), gf);
  CHECK(res.q.terms().size() == 2);
  CHECK(res.q.coeff(ExponentVec{3, 0}) == Complex(-1));
  CHECK(res.r.coeff(ExponentVec{0, 4}) == Complex(1));
}

}  // TEST_SUITE
