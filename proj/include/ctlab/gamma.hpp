#pragma once

#include "ctlab/bigfloat.hpp"
#include "ctlab/rational.hpp"

namespace ctlab {

// Bernoulli number B_n (B_1 = -1/2 convention), exact; cached.
Rational bernoulli(long n);

// ln Gamma(x) for rational x > 0 with absolute error <= 2^-(precision_bits-8).
// The argument is shifted upward until Stirling's series converges fast
// enough, then the series is truncated with the first-omitted-term bound.
BigFloat lgamma(const Rational& x, mpfr_prec_t precision_bits);

// Gamma at any non-pole rational argument, as sign and ln|Gamma(x)|;
// negative arguments are shifted up through the functional equation.
struct SignedLogGamma {
  int sign = 1;
  BigFloat log_abs;
};
SignedLogGamma lgamma_signed(const Rational& x, mpfr_prec_t precision_bits);

}  // namespace ctlab
