#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctlab/factorials.hpp"
#include "ctlab/hyper.hpp"

using namespace ctlab;

TEST_CASE("terminating hypergeometric sums") {
  // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  HyperSeries h{{Rational(-2), Rational(1)}, {Rational(3)}};
  HyperSum s = hyper_sum(h);
  REQUIRE(s.exact.has_value());
  CHECK(*s.exact == rat(1, 2));

  for (long n = 0; n <= 6; ++n)
    for (const Rational& b : {rat(1, 2), rat(2), rat(-5, 3)})
      for (const Rational& c : {rat(3), rat(7, 2)}) {
        HyperSeries g{{Rational(-n), b}, {c}};
        HyperSum v = hyper_sum(g);
        REQUIRE(v.exact.has_value());
        CHECK(*v.exact == pochhammer(c - b, n) / pochhammer(c, n));
      }

  // 3F2(-2u, -2u, -2u; 1, 1; 1) at u = 1
  HyperSeries f0{{Rational(-2), Rational(-2), Rational(-2)},
                 {Rational(1), Rational(1)}};
  CHECK(*hyper_sum(f0).exact == -6);

  // numerator parameter 0: empty sum = 1
  HyperSeries e{{Rational(0), rat(5, 2)}, {rat(3, 2)}};
  CHECK(*hyper_sum(e).exact == 1);

  // denominator pole before termination
  HyperSeries bad{{Rational(-4), Rational(1)}, {Rational(-2)}};
  CHECK_THROWS_AS(hyper_sum(bad), std::domain_error);
}

TEST_CASE("dixon gamma product") {
  // diagonal case matching the terminating 3F2 at u = 1
  ComplexRhs d = dixon_rhs(Rational(-1), Rational(-2), Rational(-2), 256);
  CHECK(std::abs(d.value.to_double() - (-6.0)) < 1e-40);

  // b = 0 telescopes to 1
  ComplexRhs one = dixon_rhs(rat(1, 3), Rational(0), rat(-1, 5), 256);
  CHECK(std::abs(one.value.to_double() - 1.0) < 1e-30);

  // (a, b, c) = (1/2, -1/4, -1/4) against the truncated series
  HyperSeries h{{Rational(1), rat(-1, 4), rat(-1, 4)}, {rat(9, 4), rat(9, 4)}};
  h.term_cap = 40000;
  HyperSum s = hyper_sum(h, 256);
  ComplexRhs rhs = dixon_rhs(rat(1, 2), rat(-1, 4), rat(-1, 4), 256);
  BigFloat diff = abs(s.value - rhs.value);
  BigFloat tol = BigFloat(rat(1, 1), 64) / pow(BigFloat(10, 256), 20);
  CHECK(diff <= tol + s.tail * 3);

  CHECK_THROWS_AS(dixon_rhs(Rational(-1), Rational(1), Rational(1), 128),
                  std::domain_error);
}

TEST_CASE("dixon consistency: monotone tail shrinkage at u = 1/4") {
  // 3F2(-1/2, -1/2, -1/2; 1, 1; 1)
  HyperSeries h{{rat(-1, 2), rat(-1, 2), rat(-1, 2)}, {Rational(1), Rational(1)}};
  ComplexRhs rhs = dixon_rhs(rat(-1, 4), rat(-1, 2), rat(-1, 2), 256);
  double prev_tail = 1e9, prev_err = 1e9;
  for (long cap : {100L, 1000L, 10000L}) {
    HyperSeries g = h;
    g.term_cap = cap;
    HyperSum s = hyper_sum(g, 256);
    double tail = s.tail.to_double();
    double err = std::abs((s.value - rhs.value).to_double());
    CHECK(tail < prev_tail);
    CHECK(err < prev_err);
    prev_tail = tail;
    prev_err = err;
  }
  CHECK(prev_err < 1e-6);
}

TEST_CASE("lattice sum F_b") {
  // b = 0, u = 1: diagonal sum of binom(2, m)^3, finite and exact
  LatticeSum f0 = fb_lattice_sum(Rational(1), rat(1, 3), 0, 10);
  CHECK(f0.finite);
  CHECK(f0.value == -6);
  CHECK(f0.tail == 0);

  // the literal summand telescopes with an alternating sign:
  // F_b = -F_{b-1} prod_i (b+v-iu)/(b+iu), so F_1(1, 1) = 0
  LatticeSum f11 = fb_lattice_sum(Rational(1), Rational(1), 1, 10);
  CHECK(f11.value == 0);
  // and at v = 1/3 the value is (1+v) v (v-1)
  LatticeSum f13 = fb_lattice_sum(Rational(1), rat(1, 3), 1, 10);
  CHECK(f13.value == (1 + rat(1, 3)) * rat(1, 3) * (rat(1, 3) - 1));

  CHECK_THROWS_AS(fb_lattice_sum(rat(-1, 2), Rational(0), 0, 10),
                  std::domain_error);
}

TEST_CASE("lattice sum against the gamma value at u = 1/4") {
  LatticeSum s = fb_lattice_sum(rat(1, 4), Rational(0), 0, 400);
  CHECK(!s.finite);
  ComplexRhs rhs = dixon_rhs(rat(-1, 4), rat(-1, 2), rat(-1, 2), 256);
  double diff = std::abs(BigFloat(s.value, 256).to_double() - rhs.value.to_double());
  double tail = std::abs(BigFloat(s.tail, 64).to_double());
  CHECK(diff <= std::max(1e-6, 3 * tail));
}

TEST_CASE("telescoped recursion for F_b") {
  for (const Rational& v : {Rational(0), rat(1, 3)}) {
    const Rational u = rat(1, 2);
    for (long b = 1; b <= 3; ++b) {
      LatticeSum cur = fb_lattice_sum(u, v, b, 300);
      LatticeSum prev = fb_lattice_sum(u, v, b - 1, 300);
      Rational factor = -1;
      for (long i = 0; i < 3; ++i) factor *= (b + v - i * u) / (b + i * u);
      double lhs = BigFloat(cur.value, 128).to_double();
      double rhs = BigFloat(prev.value * factor, 128).to_double();
      double tails = std::abs(BigFloat(cur.tail, 64).to_double()) +
                     std::abs(BigFloat(prev.tail * factor, 64).to_double());
      CHECK(std::abs(lhs - rhs) <= 3 * tails + 1e-9);
    }
  }
}

TEST_CASE("telescoping certificate") {
  CertificateReport rep = verify_certificate();
  CHECK(rep.verified);
  CHECK(rep.difference.is_zero());
  CHECK(rep.degree >= 6);
  CHECK(rep.lhs_sample == rep.rhs_sample);

  CertificateReport bad = verify_certificate(/*perturb=*/true);
  CHECK(!bad.verified);
  CHECK(!bad.difference.is_zero());
}

TEST_CASE("d4 multisum") {
  CHECK(d4_multisum(2) == 192);
  CHECK(d4_multisum(1) == 0);
  CHECK(d4_multisum(3) == 0);
  CHECK_THROWS_AS(d4_multisum(4), std::invalid_argument);
  // cross-checks: Macdonald product over the D4 degrees and the complex
  // BC right side at u = 2
  CHECK(d4_multisum(2) == rhs_macdonald_equal({2, 4, 4, 6}, 1));
  KernelParams p;
  p.n = 4;
  p.u = Rational(2);
  CHECK(d4_multisum(2) == rhs_complex_exact("bc-complex", p));
}
