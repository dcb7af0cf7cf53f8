#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ctlab/bigfloat.hpp"
#include "ctlab/closed.hpp"
#include "ctlab/multipoly.hpp"
#include "ctlab/rational.hpp"

namespace ctlab {

// Generalised hypergeometric series at unit argument. Terminating when
// some numerator parameter is a nonpositive integer; then the sum is
// exact and the cap is ignored.
struct HyperSeries {
  std::vector<Rational> num, den;
  long term_cap = 1000;

  bool terminating() const;
};

struct HyperSum {
  std::optional<Rational> exact;  // set when the series terminates
  BigFloat value;
  BigFloat tail;  // |S(cap) - S(cap/2)|, zero when exact
};

HyperSum hyper_sum(const HyperSeries& h, mpfr_prec_t prec = 256);

// Gamma product of Dixon's summation for 3F2(2a, b, c; 1+2a-b, 1+2a-c; 1).
// The well-poised diagonal b = c = 2a is evaluated through its
// cosine form, which stays finite where the raw gamma factors pair up
// into poles.
ComplexRhs dixon_rhs(const Rational& a, const Rational& b, const Rational& c,
                     mpfr_prec_t prec = 256);

// Triple lattice sum
//   sum_{m in [0,M]^3} prod_i (-1)^(m_i) binom(2u, m_i)
//                             binom(-1-v, b + m_i - m_{i+1}),
// indices cyclic. Terms are exact rationals; requires 1 + 3u > 0.
struct LatticeSum {
  Rational value;
  Rational tail;  // value(M) - value(M/2)
  bool finite;    // binomials terminated before the cap
};
LatticeSum fb_lattice_sum(const Rational& u, const Rational& v, long b, long M);

// Verification of the telescoping certificate behind the contiguous
// b-recursion of the lattice sum: a rational function identity in the
// six indeterminates u, v, b, m0, m1, m2, checked by clearing all
// denominators. perturb flips one sign as a mutation control.
struct CertificateReport {
  bool verified = false;
  MultiPoly difference;  // cleared LHS minus cleared RHS
  long degree = 0;       // total degree of the cleared sides
  Rational lhs_sample, rhs_sample;  // cleared sides at a fixed rational point
};
CertificateReport verify_certificate(bool perturb = false);

// Constrained 12-index multisum equal to the D4 specialisation of the
// complex BC right side; exact by exhaustive enumeration. u in {1,2,3}.
Rational d4_multisum(long u);

}  // namespace ctlab
