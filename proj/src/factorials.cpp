#include "ctlab/factorials.hpp"

#include "ctlab/unipoly.hpp"

namespace ctlab {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double factorial below -1");
  if (n <= 0) return 1;  // (-1)!! = 0!! = 1, empty products
  Integer f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

GammaHalfExact gamma_half_exact(long N) {
  if (N < 0) throw std::invalid_argument("gamma_half_exact: negative N");
  GammaHalfExact g;
  g.df = Rational(double_factorial(N));
  g.pow_sqrt2 = -N;
  g.has_sqrt_pi_half = (N % 2 == 1);
  return g;
}

GammaHalfExact GammaHalfExact::div(const GammaHalfExact& o) const {
  if (has_sqrt_pi_half != o.has_sqrt_pi_half)
    throw std::domain_error("gamma quotient leaves an unresolved sqrt(pi/2)");
  GammaHalfExact q;
  q.df = df / o.df;
  q.pow_sqrt2 = pow_sqrt2 - o.pow_sqrt2;
  q.has_sqrt_pi_half = false;
  return q;
}

Rational GammaHalfExact::to_rational() const {
  if (has_sqrt_pi_half || (pow_sqrt2 % 2) != 0)
    throw std::domain_error("gamma value is not rational");
  return df * pow(Rational(2), pow_sqrt2 / 2);
}

Rational pochhammer_half(long N, long a) {
  if (N < 0 || a < 0) throw std::invalid_argument("pochhammer_half: negative argument");
  return Rational(double_factorial(N + 2 * a)) /
         (pow(Rational(2), a) * double_factorial(N));
}

UniPoly pochhammer(const UniPoly& x, long m) {
  return detail::pochhammer_impl(x, m);
}

UniPoly binomial_general(const UniPoly& x, long m) {
  return detail::binomial_general_impl(x, m);
}

}  // namespace ctlab
