#pragma once

#include <stdexcept>

#include "ctlab/rational.hpp"

namespace ctlab {

Integer factorial(long n);

// n!! = n(n-2)(n-4)... ending at 1 or 2, with (-1)!! = 0!! = 1.
Integer double_factorial(long n);

Integer binomial(long n, long k);

namespace detail {

template <typename T>
T pochhammer_impl(T x, long m) {
  if (m < 0) throw std::invalid_argument("pochhammer: negative m");
  T acc(1);
  for (long i = 0; i < m; ++i) acc = acc * (x + T(i));
  return acc;
}

template <typename T>
T binomial_general_impl(T x, long m) {
  if (m < 0) throw std::invalid_argument("binomial_general: negative m");
  T acc(1);
  for (long j = 0; j < m; ++j) acc = (acc * (x - T(j))) / (j + 1);
  return acc;
}

}  // namespace detail

class UniPoly;

// Rising factorial (x)_m = x(x+1)...(x+m-1).
inline Rational pochhammer(const Rational& x, long m) {
  return detail::pochhammer_impl(x, m);
}
UniPoly pochhammer(const UniPoly& x, long m);

// Generalised binomial coefficient binom(x, m) = (-1)^m (-x)_m / m!,
// accumulated as prod_{j<m} (x - j)/(j + 1) so each division is by a
// small integer.
inline Rational binomial_general(const Rational& x, long m) {
  return detail::binomial_general_impl(x, m);
}
UniPoly binomial_general(const UniPoly& x, long m);

// Exact value of Gamma(1 + N/2):
//   value = df * (sqrt 2)^pow_sqrt2 * (pi/2)^(has_sqrt_pi_half / 2).
// Keeping the radical parts symbolic lets half-integer gamma ratios be
// simplified exactly; floats enter only for generic rational arguments.
struct GammaHalfExact {
  Rational df;
  long pow_sqrt2 = 0;
  bool has_sqrt_pi_half = false;

  bool operator==(const GammaHalfExact&) const = default;

  // Quotient of two encodings; the sqrt(pi/2) flags must cancel.
  GammaHalfExact div(const GammaHalfExact& o) const;
  // Rational part when no radicals remain.
  Rational to_rational() const;
};

GammaHalfExact gamma_half_exact(long N);

// (1 + N/2)_a = (N + 2a)!! / (2^a N!!), exact.
Rational pochhammer_half(long N, long a);

}  // namespace ctlab
