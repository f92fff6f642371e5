#include "adombell/adomian.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace adombell;

namespace {
const MultiPoly u1 = MultiPoly::u(1), u2 = MultiPoly::u(2), u3 = MultiPoly::u(3);
const MultiPoly a = MultiPoly::alpha(), b = MultiPoly::beta(), E = MultiPoly::E();
}  // namespace

TEST_CASE("exponential nonlinearity rendering", "[adomian][golden]") {
  const auto exp1 = Nonlinearity::exp(1);
  CHECK(adomian_evaluate(adomian_rach(0), exp1, SymbolicU0{}).to_string() == "exp(u0)");
  CHECK(adomian_evaluate(adomian_rach(1), exp1, SymbolicU0{}).to_string() == "u1*exp(u0)");
  CHECK(adomian_evaluate(adomian_rach(2), exp1, SymbolicU0{}).to_string() == "(u2 + 1/2*u1^2)*exp(u0)");
  CHECK(adomian_evaluate(adomian_rach(3), exp1, SymbolicU0{}).to_string() == "(u3 + u1*u2 + 1/6*u1^3)*exp(u0)");
}

TEST_CASE("abstract Adomian polynomials", "[adomian]") {
  CHECK(adomian_rach(0).to_string() == "N^(0)(u0)");
  CHECK(adomian_rach(2).to_string() == "u2*N^(1)(u0) + 1/2*u1^2*N^(2)(u0)");
  CHECK(c_kn(2, 4) == u1 * u3 + u2 * u2 / Rational(2));
}

TEST_CASE("every construction route agrees with the parametrization oracle", "[adomian]") {
  for (unsigned n = 0; n <= 8; ++n) {
    INFO("n=" << n);
    const AdomianPoly o = adomian_param_oracle(n);
    CHECK(adomian_rach(n) == o);
    CHECK(adomian_from_bell(n) == o);
    CHECK(adomian_from_ord_bell(n) == o);
    CHECK(adomian_duan_rec1(n) == o);
    CHECK(adomian_duan_rec2(n) == o);
  }
}

TEST_CASE("structure of A_n", "[adomian][property]") {
  for (unsigned n = 1; n <= 9; ++n) {
    const AdomianPoly A = adomian_rach(n);
    CHECK(A.parts.size() == n);
    for (const auto& [j, p] : A.parts) {
      REQUIRE(j >= 1);
      REQUIRE(j <= n);
      for (const auto& [m, c] : p.terms()) {
        CHECK(m.degree() == j);
        unsigned weight = 0;
        for (const auto& [v, e] : m.factors()) weight += v.index * e;
        CHECK(weight == n);
      }
    }
    CHECK(A.parts.at(1) == MultiPoly::u(n));
    CHECK(A.parts.at(n) == pow(u1, n) / Rational(factorial(n)));
  }
}

TEST_CASE("exp collapse matches the exponential series recurrence", "[adomian][oracle]") {
  const auto series = oracle::exp_series(9);
  for (unsigned n = 1; n <= 9; ++n) {
    const auto ev = adomian_evaluate(adomian_rach(n), Nonlinearity::exp(1), SymbolicU0{});
    CHECK(ev.numerator == series[n]);
    CHECK(ev.numerator == adomian_complete_exp(n));
  }
}

TEST_CASE("polynomial nonlinearities match direct power expansion", "[adomian][oracle]") {
  for (unsigned m = 0; m <= 5; ++m) {
    std::vector<Rational> coeffs(m + 1, 0);
    coeffs[m] = 1;
    const auto N = Nonlinearity::polynomial(coeffs);
    for (unsigned n = 0; n <= 6; ++n) {
      INFO("u^" << m << " n=" << n);
      CHECK(adomian_evaluate(adomian_rach(n), N, SymbolicU0{}).numerator == oracle::power_adomian(n, m));
    }
  }
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(adomian_evaluate(adomian_rach(n), Nonlinearity::linear(), SymbolicU0{}).numerator == MultiPoly::u(n));
  }
}

TEST_CASE("exp(-beta u) at u0 = 1", "[adomian]") {
  const auto N = Nonlinearity::exp(-b);
  CHECK(adomian_evaluate(adomian_rach(0), N, Rational(1)).numerator == E);
  CHECK(adomian_evaluate(adomian_rach(1), N, Rational(1)).numerator == -b * u1 * E);
  CHECK(adomian_evaluate(adomian_rach(2), N, Rational(1)).numerator ==
        (b * b * u1 * u1 - b * u2 * 2) * E / Rational(2));
  CHECK(adomian_evaluate(adomian_rach(3), N, Rational(1)).numerator ==
        (-pow(b, 3) * pow(u1, 3) + b * b * u1 * u2 * 6 - b * u3 * 6) * E / Rational(6));
  CHECK(adomian_evaluate(adomian_rach(2), N, SymbolicU0{}).to_string() ==
        "(-u2*beta + 1/2*u1^2*beta^2)*exp(-beta*u0)");
  CHECK_THROWS_AS(adomian_evaluate(adomian_rach(1), N, Rational(1, 2)), std::domain_error);
}

TEST_CASE("power nonlinearity with exponent 1 - 1/alpha", "[adomian]") {
  const auto N = Nonlinearity::power(1, -1);
  const auto A1 = adomian_evaluate(adomian_rach(1), N, Rational(1));
  CHECK(A1.numerator == (a - 1) * u1);
  CHECK(A1.alpha_denominator == 1);
  const auto A2 = adomian_evaluate(adomian_rach(2), N, Rational(1));
  // (1/2)(1 - 1/alpha)(-u1^2/alpha + 2 u2)
  CHECK(A2.numerator == (a - 1) * (-u1 * u1 + a * u2 * 2) / Rational(2));
  CHECK(A2.alpha_denominator == 2);
  CHECK_THROWS_AS(adomian_evaluate(adomian_rach(1), N, Rational(2)), std::domain_error);
  CHECK_THROWS_AS(adomian_evaluate(adomian_rach(1), N, SymbolicU0{}), std::domain_error);
}

TEST_CASE("integer powers evaluate at any concrete u0", "[adomian]") {
  const auto N = Nonlinearity::power(3);
  // u^3 at u0 = 2: A_1 = 3*4*u1, A_2 = 3*4*u2 + 3*2*u1^2
  CHECK(adomian_evaluate(adomian_rach(1), N, Rational(2)).numerator == u1 * 12);
  CHECK(adomian_evaluate(adomian_rach(2), N, Rational(2)).numerator == u2 * 12 + u1 * u1 * 6);
  CHECK_THROWS_AS(adomian_evaluate(adomian_rach(1), Nonlinearity::power(-1), Rational(0)), std::domain_error);
}

TEST_CASE("taylor nonlinearity takes supplied derivative values", "[adomian]") {
  const auto N = Nonlinearity::taylor({MultiPoly(5), MultiPoly(2), MultiPoly(-1)});
  CHECK(adomian_evaluate(adomian_rach(2), N, Rational(0)).numerator == u2 * 2 - u1 * u1 / Rational(2));
  CHECK_THROWS_AS(adomian_evaluate(adomian_rach(3), N, Rational(0)), std::domain_error);
}
