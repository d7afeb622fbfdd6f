#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

#include "germsum/harness.hpp"
#include "germsum/json_io.hpp"

#include <boost/math/constants/constants.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace germsum;
using th::ES;
using th::poly;

namespace {

const double pi = boost::math::constants::pi<double>();

ES euler_P() { return poly(2, {{{2, 0}, 1}, {{0, 2}, -1}}); }

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the CLI with stderr folded into the captured output.
Run run_cli(const std::string& args) {
  std::string cmd = std::string(GERMSUM_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "germsum_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("gen_example") {
  auto r = gen_example(ExampleName::Remark79, 20);
  CHECK(r.series == th::remark_series(5).with_trunc(20));
  CHECK(r.germ.series() == mul(th::x(2, 0), th::x(2, 1)));

  auto o = gen_example(ExampleName::OdeEuler, 12);
  oracle::Poly P = oracle::from_series(euler_P()), y, pw = P;
  for (int m = 0; 2 * (m + 1) <= 12; ++m) {
    for (const auto& [e, c] : pw) y[e] += c * ExactScalar(th::factorial(m));
    pw = oracle::mul(pw, P, 100);
  }
  CHECK(o.series.trunc() == 12);
  CHECK(oracle::equal(oracle::from_series(o.series), y));

  auto q = gen_example(ExampleName::PdeQuasihom, 13);
  CHECK(q.series.trunc() == 13);
  CHECK(q.germ.order() == MonomialOrder({2, 3}));
  CHECK(q.series.coeff(ExponentVec{1, 2}) == ExactScalar(1));
  CHECK(q.series.coeff(ExponentVec{4, 0}) == ExactScalar(-1));
  CHECK_THROWS(parse_example("nope"));
  CHECK(parse_example(to_string(ExampleName::PdeQuasihom)) == ExampleName::PdeQuasihom);
}

TEST_CASE("formal ODE residual") {
  for (int N = 8; N <= 16; ++N) {
    auto rep = verify_ode_formal(gen_example(ExampleName::OdeEuler, N).series, euler_P());
    CHECK(rep.exact_to_truncation);
    CHECK(rep.residual.trunc() >= N - 1);
  }
  ES y = gen_example(ExampleName::OdeEuler, 12).series;
  auto bad = verify_ode_formal(add(y, th::x(2, 0)), euler_P());
  CHECK_FALSE(bad.exact_to_truncation);
  CHECK(bad.formal_valuation == 2);
}

TEST_CASE("ODE residual of partial sums") {
  // y_m = sum_{j<m} j! P^(j+1), exact; the residual is built here from plain
  // polynomial products and must match the library's, with valuation 2m + 3.
  oracle::Poly P = oracle::from_series(euler_P());
  oracle::Poly dP = {{{1, 0}, ExactScalar(2)}};
  int prev = -1;
  for (int m = 1; m <= 6; ++m) {
    ES y(2, kUnbounded);
    ES pw = euler_P();
    for (int j = 0; j < m; ++j) {
      y = add(y, pw.scaled(ExactScalar(th::factorial(j))));
      pw = mul(pw, euler_P());
    }
    auto rep = verify_ode_formal(y, euler_P());
    oracle::Poly Y = oracle::from_series(y), dY;
    for (const auto& [e, c] : Y) {
      if (e[0] > 0) dY[{e[0] - 1, e[1]}] += c * ExactScalar(e[0]);
    }
    const int cap = 1000;
    oracle::Poly res = oracle::add(oracle::mul(oracle::mul(P, P, cap), dY, cap),
                                   oracle::mul(oracle::mul(dP, Y, cap), {{{0, 0}, ExactScalar(-1)}}, cap));
    res = oracle::add(res, oracle::mul(P, dP, cap));
    CHECK(oracle::equal(oracle::from_series(rep.residual), res));
    CHECK(rep.formal_valuation == 2 * m + 3);
    CHECK(rep.formal_valuation > prev);
    prev = rep.formal_valuation;
  }
}

TEST_CASE("formal PDE check") {
  auto ex = gen_example(ExampleName::PdeQuasihom, 13);
  ES zero(2, kUnbounded);
  auto rep = verify_pde_formal(ex.series, ex.germ.series(), ExactScalar(0), ExactScalar(1), 1, zero, zero);
  CHECK(rep.divisible);
  CHECK(rep.remainder.is_zero());
  CHECK_FALSE(rep.matches_stated);
  CHECK(rep.cofactor == th::x(2, 0).with_trunc(rep.cofactor.trunc()));
  CHECK(rep.cofactor.trunc() >= 1);

  auto z = verify_pde_formal(ES(2, kUnbounded), ex.germ.series(), ExactScalar(0), ExactScalar(1), 1, zero, zero);
  CHECK(z.h.is_zero());
  ES f = poly(2, {{{1, 1}, 3}, {{0, 2}, 1}});
  auto p = verify_pde_formal(f, ex.germ.series(), ExactScalar(0), ExactScalar(1), 1, zero, zero);
  CHECK(p.h.exact());
  for (const auto& [e, c] : p.h.terms()) CHECK(abs(c.re) < 1000);
}

TEST_CASE("P-sector sampling") {
  ES P = euler_P();
  auto s = sample_p_sector(P, pi - 0.3, pi + 0.3, 0.5, 25, 7);
  CHECK(s.points.size() == 25);
  CHECK(s.check(P));
  for (const auto& x : s.points) {
    double a = arg(evaluate(P, x)).convert_to<double>();
    CHECK(std::abs(angle_diff(a, pi)) < 0.3);
  }
  auto broken = s;
  broken.points[3][0] = Complex(Real(0.4));
  broken.points[3][1] = Complex(Real(0.1));
  CHECK_FALSE(broken.check(P));
  CHECK_THROWS(sample_p_sector(P, 1, 0, 0.5, 3));
}

TEST_CASE("numeric ODE residual") {
  std::vector<double> radii{0.05, 0.2};
  auto rep = verify_ode_numeric(1, pi, radii);
  REQUIRE(rep.numeric_max_residual);
  CHECK(*rep.numeric_max_residual < 1e-8);
  CHECK_THROWS_AS(verify_ode_numeric(1, 0, radii), SingularRayError);
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    ES s = oracle::random_series(rng, 2 + trial % 2, 5, 0.5, trial % 2 == 1);
    Json j = to_json(s);
    CHECK(exact_series_from_json(parse_json_text(j.dump(), "mem")) == s);
    auto f = to_float(s);
    CHECK(float_series_from_json(parse_json_text(to_json(f).dump(), "mem")) == f);
  }
  ES ex = th::remark_series(3);
  CHECK_FALSE(to_json(ex).contains("trunc"));
  CHECK(exact_series_from_json(to_json(ex)) == ex);

  Germ g(mul(th::x(2, 0), th::x(2, 1)), MonomialOrder({1, Rational(3, 2)}, TieBreak::RevLex));
  auto e = p_expand(th::remark_series(6).truncated(20), g, 5);
  auto back = exact_expansion_from_json(to_json(e));
  CHECK(back.germ.order() == g.order());
  CHECK(back.coeffs == e.coeffs);
  CHECK(order_from_json(to_json(g.order())) == g.order());

  Json mixed = {{"dim", 1}, {"terms", {{{"exp", {1}}, {"coeff", {{"re", 0.5}, {"im", 0}}}}}}};
  CHECK(std::holds_alternative<Series<Complex>>(any_series_from_json(mixed)));
  CHECK_THROWS_AS(exact_series_from_json(mixed), ParseError);
}

TEST_CASE("malformed JSON names the offending path") {
  Json bad = {{"dim", 2}, {"terms", {{{"exp", {1, 0}}, {"coeff", "1"}}, {{"exp", {1, -2}}, {"coeff", "1"}}}}};
  try {
    exact_series_from_json(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "$.terms[1].exp[1]");
  }
  CHECK_THROWS_AS(exact_series_from_json(Json{{"dim", 2}, {"terms", {{{"exp", {1, 0}}, {"coeff", "x/2"}}}}}), ParseError);
  CHECK_THROWS_AS(parse_json_text("{\"dim\": ", "file.json"), ParseError);
  CHECK_THROWS_AS(exact_series_from_json(Json{{"terms", Json::array()}}), ParseError);
}

TEST_CASE("cli") {
  std::string f = write_temp("f.json", to_json(th::remark_series(6).truncated(24)).dump());
  std::string P = write_temp("P.json", to_json(mul(th::x(2, 0), th::x(2, 1))).dump());

  Run e = run_cli("expand --germ " + P + " --order 1,1 --depth 4 " + f);
  REQUIRE(e.code == 0);
  auto exp = exact_expansion_from_json(Json::parse(e.out));
  CHECK(exp.coeffs[3] == ES::monomial(ExponentVec{0, 6}, ExactScalar(6), 18));

  Run b = run_cli("blowup --xi inf " + f);
  REQUIRE(b.code == 0);
  ES binf = exact_series_from_json(Json::parse(b.out));
  CHECK(binf.coeff(ExponentVec{2, 8}) == ExactScalar(2));
  CHECK(binf == blowup(th::remark_series(6).truncated(24), BlowupChart::infinity()));

  Run d = run_cli("divide --germ " + P + " --order 1,1 " + f);
  REQUIRE(d.code == 0);
  auto dj = Json::parse(d.out);
  CHECK(exact_series_from_json(dj.at("r"), "$.r") == ES::constant(2, ExactScalar(1), 24));

  std::string bad = write_temp("bad.json", R"({"dim": 2, "terms": [{"exp": [1], "coeff": "1"}]})");
  Run m = run_cli("blowup --xi 0 " + bad);
  CHECK(m.code == 2);
  CHECK(m.out.find("$.terms[0].exp") != std::string::npos);

  std::string zero = write_temp("zero.json", R"({"dim": 2, "terms": []})");
  CHECK(run_cli("divide --germ " + zero + " --order 1,1 " + f).code == 3);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("expand --germ " + P + " --depth 3 " + f).code == 2);

  Run v = run_cli("verify remark79");
  REQUIRE(v.code == 0);
  CHECK(Json::parse(v.out).at("pass") == true);
}

}  // TEST_SUITE
