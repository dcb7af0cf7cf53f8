#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctlab/bigfloat.hpp"
#include "ctlab/bipoly.hpp"
#include "ctlab/factorials.hpp"
#include "ctlab/gamma.hpp"
#include "ctlab/multipoly.hpp"
#include "ctlab/rational.hpp"
#include "ctlab/unipoly.hpp"

using namespace ctlab;

TEST_CASE("double factorial small values and conventions") {
  CHECK(double_factorial(9) == 945);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(2) == 2);
  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
  for (long n = 1; n <= 40; ++n)
    CHECK(double_factorial(n) == n * double_factorial(n - 2));
}

TEST_CASE("pochhammer on rationals and polynomials") {
  CHECK(pochhammer(rat(1, 2), 3) == rat(15, 8));
  CHECK(pochhammer(Rational(7), 0) == 1);

  UniPoly u = UniPoly::var();
  UniPoly expect = u * u + u;
  CHECK(pochhammer(u, 2) == expect);
  CHECK(pochhammer(u, 0) == UniPoly(1));
}

TEST_CASE("generalised binomial coefficient") {
  UniPoly u = UniPoly::var();
  CHECK(binomial_general(u, 2) == (u * u - u) / 2);
  for (long m = 0; m <= 8; ++m) CHECK(binomial_general(u, m).degree() == m);
  CHECK(binomial_general(rat(3, 2), 1) == rat(3, 2));
  CHECK(binomial_general(Rational(4), 2) == 6);
  // at nonnegative integers it reduces to the classical binomial
  for (long j = 0; j <= 30; ++j)
    for (long m = 0; m <= 30; ++m)
      CHECK(binomial_general(Rational(j), m) == Rational(binomial(j, m)));
}

TEST_CASE("gamma_half_exact encodings") {
  GammaHalfExact g3 = gamma_half_exact(3);
  CHECK(g3.df == 3);
  CHECK(g3.pow_sqrt2 == -3);
  CHECK(g3.has_sqrt_pi_half);

  GammaHalfExact g0 = gamma_half_exact(0);
  CHECK(g0.df == 1);
  CHECK(g0.pow_sqrt2 == 0);
  CHECK(!g0.has_sqrt_pi_half);
  CHECK(g0.to_rational() == 1);

  CHECK(gamma_half_exact(4).to_rational() == 2);  // Gamma(3)

  // numeric oracle: Gamma(1 + N/2) by the recurrence from Gamma(1) = 1
  // and Gamma(3/2) = sqrt(pi)/2
  const mpfr_prec_t prec = 256;
  const BigFloat eps = BigFloat::pow2(-200, prec);
  std::vector<BigFloat> expected;
  expected.push_back(BigFloat(1, prec));
  expected.push_back(sqrt(BigFloat::pi(prec)) / 2);
  for (long N = 2; N <= 25; ++N)
    expected.push_back(expected[N - 2] * BigFloat(Rational(N, 2), prec));
  for (long N = 0; N <= 25; ++N) {
    GammaHalfExact g = gamma_half_exact(N);
    BigFloat got = BigFloat(g.df, prec) *
                   pow(sqrt(BigFloat(2, prec)), g.pow_sqrt2);
    if (g.has_sqrt_pi_half) got = got * sqrt(BigFloat::pi(prec) / 2);
    CHECK(abs(got - expected[N]) < eps);
  }
}

TEST_CASE("pochhammer_half matches direct evaluation") {
  CHECK(pochhammer_half(3, 2) == rat(35, 4));
  CHECK(pochhammer_half(2, 1) == 2);
  for (long a = 0; a <= 8; ++a)
    CHECK(pochhammer_half(0, a) == Rational(factorial(a)));
  for (long N = 0; N <= 50; ++N)
    for (long a = 0; a <= 50; a += 7)
      CHECK(pochhammer_half(N, a) == pochhammer(1 + Rational(N, 2), a));
}

TEST_CASE("lgamma anchors against exact half-integer values") {
  const mpfr_prec_t prec = 128;
  const BigFloat eps = BigFloat::pow2(-120, prec);

  // Gamma(1/2) = sqrt(pi)
  BigFloat lg_half = lgamma(rat(1, 2), prec);
  BigFloat expect = log(BigFloat::pi(prec)) / 2;
  CHECK(abs(lg_half - expect) < eps);

  CHECK(abs(lgamma(Rational(1), prec)) < eps);

  // Gamma(7/2) = 15 sqrt(pi) / 8
  BigFloat lg = lgamma(rat(7, 2), prec);
  BigFloat want = log(BigFloat(15, prec) * sqrt(BigFloat::pi(prec)) / 8);
  CHECK(abs(lg - want) < eps);

  CHECK_THROWS_AS(lgamma(Rational(0), prec), std::domain_error);
  CHECK_THROWS_AS(lgamma(Rational(-3), prec), std::domain_error);
}

TEST_CASE("lgamma scales to higher precision") {
  const mpfr_prec_t prec = 512;
  BigFloat lg = lgamma(rat(1, 2), prec);
  BigFloat expect = log(BigFloat::pi(prec)) / 2;
  CHECK(abs(lg - expect) < BigFloat::pow2(-504, prec));
}

TEST_CASE("lgamma recurrence property and library cross-check") {
  const mpfr_prec_t prec = 192;
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<long> num(1, 400), den(1, 20);
  const BigFloat eps = BigFloat::pow2(-150, prec);
  for (int trial = 0; trial < 100; ++trial) {
    Rational x = rat(num(rng), den(rng));
    if (x > 20) x = x / 21;
    // exp(lgamma(x+1) - lgamma(x)) = x
    BigFloat ratio = exp(lgamma(x + 1, prec) - lgamma(x, prec));
    CHECK(abs(ratio - BigFloat(x, prec)) < eps * BigFloat(x, prec));
    // independent implementation
    BigFloat ref = BigFloat::zero(prec);
    int sign = 0;
    mpfr_lgamma(ref.raw(), &sign, BigFloat(x, prec).raw(), MPFR_RNDN);
    CHECK(abs(lgamma(x, prec) - ref) < eps);
  }
}

TEST_CASE("polynomial rings satisfy distributivity and commutativity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> cdist(-5, 5);
  std::uniform_int_distribution<int> edist(0, 3);

  auto random_uni = [&] {
    UniPoly p;
    for (int t = 0; t < 4; ++t) {
      UniPoly m(cdist(rng));
      for (int d = edist(rng); d > 0; --d) m = m * UniPoly::var();
      p = p + m;
    }
    return p;
  };
  for (int trial = 0; trial < 25; ++trial) {
    UniPoly a = random_uni(), b = random_uni(), c = random_uni();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
  }

  auto random_bi = [&] {
    BiPoly p;
    for (int t = 0; t < 4; ++t) {
      BiPoly m(cdist(rng));
      for (int d = edist(rng); d > 0; --d) m = m * BiPoly::var_u();
      for (int d = edist(rng); d > 0; --d) m = m * BiPoly::var_v();
      p = p + m;
    }
    return p;
  };
  for (int trial = 0; trial < 25; ++trial) {
    BiPoly a = random_bi(), b = random_bi(), c = random_bi();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }

  auto vars = MultiPoly::make_vars({"p", "q", "r"});
  auto random_multi = [&] {
    MultiPoly m = MultiPoly::constant(vars, 0);
    for (int t = 0; t < 4; ++t) {
      MultiPoly term = MultiPoly::constant(vars, cdist(rng));
      for (std::size_t i = 0; i < 3; ++i)
        for (int d = edist(rng); d > 0; --d)
          term = term * MultiPoly::var(vars, i);
      m = m + term;
    }
    return m;
  };
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly a = random_multi(), b = random_multi(), c = random_multi();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("multipoly evaluation and guards") {
  auto vars = MultiPoly::make_vars({"p", "q"});
  MultiPoly f = MultiPoly::var(vars, 0) * MultiPoly::var(vars, 0) -
                MultiPoly::var(vars, 1) * MultiPoly::constant(vars, 3);
  CHECK(f.eval({rat(2), rat(1)}) == 1);
  auto other = MultiPoly::make_vars({"z"});
  CHECK_THROWS_AS(f + MultiPoly::var(other, 0), std::invalid_argument);
}

TEST_CASE("bigfloat determinism and serialization") {
  BigFloat a(rat(1, 3), 128);
  BigFloat b(rat(1, 7), 256);
  BigFloat s = a + b;
  CHECK(s.precision() == 256);
  CHECK(s.to_string() == (a + b).to_string());
  CHECK(BigFloat(rat(-5, 2), 64).to_double() == -2.5);
  CHECK(is_zero(BigFloat(0, 64)));
}

TEST_CASE("rational helpers") {
  CHECK(to_string(rat(-6, 8)) == "-3/4");
  CHECK(rational_from_string("35/3") == rat(35, 3));
  CHECK(rational_from_string("-7") == rat(-7));
  CHECK(pow(rat(2, 3), -2) == rat(9, 4));
  CHECK(floor_int(rat(-7, 2)) == -4);
  CHECK_THROWS_AS(rational_from_string("x/y"), std::invalid_argument);
}
