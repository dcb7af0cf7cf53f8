#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "ctlab/rational.hpp"

namespace ctlab {

// Arbitrary-precision binary float. Every value carries its precision;
// binary operations round to nearest at the wider of the two operand
// precisions, so results are deterministic given operand order.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 64;

  BigFloat() { mpfr_init2(v_, kDefaultPrec); mpfr_set_zero(v_, 1); }
  static BigFloat zero(mpfr_prec_t prec) {
    BigFloat r;
    mpfr_set_prec(r.v_, prec);
    mpfr_set_zero(r.v_, 1);
    return r;
  }
  BigFloat(long x, mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(int x) : BigFloat(static_cast<long>(x)) {}
  BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, kDefaultPrec);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Hex-float form, exact for the stored value.
  std::string to_string() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r = zero(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r = zero(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r = zero(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r = zero(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, long d) {
    BigFloat r = zero(a.precision());
    mpfr_div_si(r.v_, a.v_, d, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, long m) {
    BigFloat r = zero(a.precision());
    mpfr_mul_si(r.v_, a.v_, m, MPFR_RNDN);
    return r;
  }
  BigFloat operator-() const {
    BigFloat r = zero(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) { *this = *this + o; return *this; }
  BigFloat& operator-=(const BigFloat& o) { *this = *this - o; return *this; }
  BigFloat& operator*=(const BigFloat& o) { *this = *this * o; return *this; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r = zero(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r = zero(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat exp(const BigFloat& a) {
    BigFloat r = zero(a.precision());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    BigFloat r = zero(a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat cos(const BigFloat& a) {
    BigFloat r = zero(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& a, long e) {
    BigFloat r = zero(a.precision());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r = zero(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // 2^e as an error-bound scale.
  static BigFloat pow2(long e, mpfr_prec_t prec = kDefaultPrec) {
    BigFloat r = zero(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
  }
  mpfr_t v_;
};

inline bool is_zero(const BigFloat& x) { return x.is_zero(); }
inline std::string to_string(const BigFloat& x) { return x.to_string(); }

}  // namespace ctlab
