#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ctlab {

// Exact rational numbers. mpq_class keeps values canonical (gcd 1,
// positive denominator) after every arithmetic operation, which is the
// representation all exact right-hand sides live in.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical decimal string, "p/q" (the "/q" part is omitted when q = 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("unparseable rational: " + s);
  q.canonicalize();
  return q;
}

inline Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw std::domain_error("0 to a negative power");
    return 1 / pow(base, -e);
  }
  Rational out = 1, b = base;
  for (long n = e; n > 0; n >>= 1) {
    if (n & 1) out *= b;
    if (n > 1) b *= b;
  }
  return out;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Floor division is safe for any rational; get_num()/get_den() truncates.
inline Integer floor_int(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

}  // namespace ctlab
