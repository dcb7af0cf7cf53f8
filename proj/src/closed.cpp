#include "ctlab/closed.hpp"

#include "ctlab/factorials.hpp"
#include "ctlab/gamma.hpp"

namespace ctlab {

namespace {

Rational fact(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative value");
  return Rational(factorial(n));
}

Rational dfact(long n) { return Rational(double_factorial(n)); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Rational rhs_dyson(const std::vector<long>& avec) {
  long total = 0;
  Rational den = 1;
  for (long a : avec) {
    require(a >= 0, "dyson rhs: negative exponent");
    total += a;
    den *= fact(a);
  }
  return fact(total) / den;
}

Rational rhs_macdonald_equal(const std::vector<long>& degrees, long k) {
  require(k >= 0, "macdonald rhs: k >= 0");
  Rational out = 1;
  for (long d : degrees) out *= Rational(binomial(k * d, k));
  return out;
}

Rational rhs_morris(int n, long a, long b, long k) {
  require(n >= 1 && a >= 0 && b >= 0 && k >= 0, "morris rhs: bad params");
  Rational out = 1;
  for (long i = 0; i < n; ++i)
    out *= fact(a + b + i * k) * fact((i + 1) * k) /
           (fact(a + i * k) * fact(b + i * k) * fact(k));
  return out;
}

Rational rhs_log_dyson(int n, long k) {
  require(n >= 1 && n % 2 == 1 && k >= 0, "log-dyson rhs: bad params");
  const long K = 2 * k + 1;
  return dfact(n * K) / (dfact(n) * pow(dfact(K), n));
}

Rational rhs_log_morris(int n, long a, long b, long k) {
  require(n >= 1 && n % 2 == 1 && a >= 0 && b >= 0 && k >= 0,
          "log-morris rhs: bad params");
  const long K = 2 * k + 1;
  Rational out = 1 / dfact(n);
  for (long i = 0; i < n; ++i)
    out *= dfact(2 * a + 2 * b + i * K) * dfact((i + 1) * K) /
           (dfact(2 * a + i * K) * dfact(2 * b + i * K) * dfact(K));
  return out;
}

Rational am_log_c3k(long k) {
  require(k >= 0, "c3k: k >= 0");
  const long K = 2 * k + 1;
  Rational c = fact(3 * K) * pow(fact(k), 3) /
               (6 * fact(3 * k + 1) * pow(fact(K), 3));
  c /= binomial_general(Rational(3 * K - 1), 2 * K - 1);
  c /= binomial_general(rat(5 * K - 2, 2), 2 * K - 1);
  return c;
}

Rational rhs_am_log(int n, long a, long k) {
  require(n == 3, "am-log rhs: closed form housed for n = 3 only");
  require(a >= 0 && k >= 0, "am-log rhs: bad params");
  const long K = 2 * k + 1;
  const long m = (n - 1) / 2;
  Rational out = am_log_c3k(k);
  for (long i = 0; i < n; ++i)
    out *= binomial_general(a + rat(K * i, 2), (m + 1) * K - 1);
  return out;
}

Rational rhs_g2_equal(long k) {
  require(k >= 0, "g2 rhs: k >= 0");
  return Rational(binomial(2 * k, k)) * Rational(binomial(6 * k, k));
}

Rational rhs_g2_hz(long k, long m) {
  require(k >= 0 && m >= 0, "g2 rhs: bad params");
  return fact(3 * k + 3 * m) * fact(3 * k) * fact(2 * k) * fact(2 * m) /
         (fact(3 * k + 2 * m) * fact(2 * k + m) * fact(k + m) * fact(k) *
          fact(k) * fact(m));
}

Rational rhs_g2_log(long K, long M) {
  require(K >= 0 && M >= 0, "g2 log rhs: bad params");
  return dfact(3 * K + 3 * M) * dfact(3 * K) * dfact(2 * K) * dfact(2 * M) /
         (3 * dfact(3 * K + 2 * M) * dfact(2 * K + M) * dfact(K + M) *
          dfact(K) * dfact(K) * dfact(M));
}

Rational rhs_bc(int n, long a, long b, long k) {
  require(n >= 1 && a >= 0 && b >= 0 && k >= 0, "bc rhs: bad params");
  Rational out = 1;
  for (long i = 0; i < n; ++i)
    out *= fact(k + i * k) * fact(2 * a + 2 * b + 2 * i * k) *
           fact(2 * b + 2 * i * k) /
           (fact(k) * fact(a + b + i * k) * fact(b + i * k) *
            fact(a + 2 * b + (n + i - 1) * k));
  return out;
}

Rational rhs_deriv_a(int n, long a, long b, long k) {
  require(n >= 3 && n % 2 == 1 && a >= 0 && b >= 0 && k >= 0,
          "deriv-a rhs: bad params");
  const long K = 2 * k + 1;
  const long m = (n - 1) / 2;
  Rational out = fact(m) / dfact(n - 2);
  if (((k + 1) * m) % 2 != 0) out = -out;
  for (long i = 0; i < n; ++i)
    out *= dfact(2 * a + 2 * b + i * K) * dfact((i + 1) * K) /
           (dfact(2 * a + i * K) * dfact(2 * b + i * K) * dfact(K));
  return out;
}

Rational rhs_deriv_bc(int n, long a, long b, long k) {
  const int zeta = n % 4;
  require(zeta == 0 || zeta == 1, "deriv-bc rhs: n must be 0 or 1 mod 4");
  require(a >= 0 && b >= 0 && k >= 0, "deriv-bc rhs: bad params");
  std::optional<UniPoly> pn = pn_poly(PnFamily::BC, n);
  require(pn.has_value(), "deriv-bc rhs: no stored P_n entry");
  const long K = 2 * k + 1;
  Rational out = fact(n - zeta) * pn->eval(0);
  out *= dfact(n * K) / (dfact((n - 1) * K) * pow(dfact(K), n));
  for (long i = 1; i < n; ++i) out *= dfact(2 * i * K) / dfact((2 * i - 1) * K);
  for (long i = 0; i < n; ++i)
    out *= dfact(2 * b + i * K - 1) * dfact(2 * a + 2 * b + i * K - 1) *
           dfact((n + i - 1) * K) /
           (dfact(2 * a + 4 * b + (n + i - 1) * K) * dfact(i * K - 1) *
            dfact(i * K - 1));
  return out;
}

Rational rhs_exact(const std::string& id, const KernelParams& p) {
  if (id == "dyson") return rhs_dyson(p.avec);
  if (id == "macdonald-equal") return rhs_macdonald_equal(p.avec, p.k);
  if (id == "morris") return rhs_morris(p.n, p.a, p.b, p.k);
  if (id == "log-dyson") return rhs_log_dyson(p.n, p.k);
  if (id == "log-morris") return rhs_log_morris(p.n, p.a, p.b, p.k);
  if (id == "am-log") return rhs_am_log(p.n, p.a, p.k);
  if (id == "g2-equal") return rhs_g2_equal(p.k);
  if (id == "g2-hz") return rhs_g2_hz(p.k, p.m);
  if (id == "g2-log-long") return rhs_g2_log(2 * p.k + 1, 2 * p.m);
  if (id == "g2-log-short") return rhs_g2_log(2 * p.k, 2 * p.m + 1);
  if (id == "g2-log") return rhs_g2_log(p.k, p.m);  // takes (K, M) directly
  if (id == "bc") return rhs_bc(p.n, p.a, p.b, p.k);
  if (id == "bc-sigma-tau") {
    // the sigma/tau rewrite carries no extra sign: n - zeta is a
    // multiple of 4, so (-1)^(k(n-zeta)) = 1
    return rhs_bc(p.n, p.a, p.b, p.k);
  }
  if (id == "morris-tau") {
    Rational v = rhs_morris(p.n, p.a, p.b, p.k);
    const long m = (p.n - 1) / 2;
    return ((p.k * m) % 2 != 0) ? -v : v;
  }
  if (id == "deriv-a") return rhs_deriv_a(p.n, p.a, p.b, p.k);
  if (id == "deriv-bc") return rhs_deriv_bc(p.n, p.a, p.b, p.k);
  throw std::invalid_argument("rhs_exact: unknown id " + id);
}

std::optional<UniPoly> pn_poly(PnFamily fam, int n) {
  const UniPoly s = UniPoly::var();
  if (fam == PnFamily::A) {
    if (n == 1 || n == 3) return UniPoly(1);
    if (n == 5) return (UniPoly(1) + s * Rational(2)) / 3;
    if (n == 7)
      return (UniPoly(3) + s * Rational(26) - s * s * Rational(16) +
              s * s * s * Rational(32)) /
             45;
    return std::nullopt;
  }
  if (n == 1 || n == 4) return UniPoly(1);
  if (n == 5) return (UniPoly(3) + s * Rational(4) + s * s * Rational(8)) / 15;
  return std::nullopt;
}

namespace {

// Coefficient vectors over the basis {z_0 = 1, z_1, z_2, ...} with the
// product rule z_a z_b = (z_{a+b} + z_{|a-b|}) / 2.
using CosVec = std::vector<Rational>;

CosVec cos_mul(const CosVec& f, const CosVec& g) {
  CosVec r(f.size() + g.size() - 1, 0);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (is_zero(f[a]) || is_zero(g[b])) continue;
      Rational half = f[a] * g[b] / 2;
      r[a + b] += half;
      r[a > b ? a - b : b - a] += half;
    }
  while (r.size() > 1 && is_zero(r.back())) r.pop_back();
  return r;
}

}  // namespace

ZBasis z_basis(int n) {
  std::optional<UniPoly> pn = pn_poly(PnFamily::A, n);
  if (!pn) throw std::invalid_argument("z_basis: no stored A-family entry");
  ZBasis out;
  out.m = (n - 1) / 2;
  // evaluate P_n at x^2 = (1 + z_1)/2 by Horner over the cosine algebra
  CosVec x2 = {rat(1, 2), rat(1, 2)};
  CosVec acc = {pn->coeff(pn->degree())};
  for (long d = pn->degree() - 1; d >= 0; --d) {
    acc = cos_mul(acc, x2);
    acc[0] += pn->coeff(d);
  }
  out.coeffs = acc;
  return out;
}

ComplexRhs gamma_quotient(const std::vector<Rational>& num,
                          const std::vector<Rational>& den, mpfr_prec_t prec) {
  BigFloat lg = BigFloat::zero(prec + 32);
  int sign = 1;
  for (const Rational& x : num) {
    SignedLogGamma g = lgamma_signed(x, prec);
    lg += g.log_abs;
    sign *= g.sign;
  }
  for (const Rational& x : den) {
    SignedLogGamma g = lgamma_signed(x, prec);
    lg -= g.log_abs;
    sign *= g.sign;
  }
  ComplexRhs out{exp(lg), BigFloat::zero(prec)};
  if (sign < 0) out.value = -out.value;
  // each lgamma carries <= 2^-(prec-8); first-order propagation through exp
  out.err = abs(out.value) *
            BigFloat::pow2(-static_cast<long>(prec) + 9, prec) *
            static_cast<long>(num.size() + den.size() + 1);
  return out;
}

namespace {

Rational gamma_int(const Rational& x) {
  require(is_integer(x) && sgn(x) > 0, "gamma_int: argument must be a positive integer");
  return fact(x.get_num().get_si() - 1);
}

// Pochhammer block of the complex Morris right side, exact for rational u:
// prod_{i<n} (1 + iu/2)_{a+b} / ((1 + iu/2)_a (1 + iu/2)_b)
Rational morris_poch_block(int n, long a, long b, const Rational& u) {
  Rational out = 1;
  for (long i = 0; i < n; ++i) {
    Rational base = 1 + Rational(i) * u / 2;
    out *= pochhammer(base, a + b) /
           (pochhammer(base, a) * pochhammer(base, b));
  }
  return out;
}

// BC Pochhammer block:
// prod_{i<n} (1/2 + iu/2)_{a+b} (1/2 + iu/2)_b / (1 + (n+i-1)u/2)_{a+2b}
Rational bc_poch_block(int n, long a, long b, const Rational& u) {
  Rational out = 1;
  for (long i = 0; i < n; ++i) {
    Rational base = rat(1, 2) + Rational(i) * u / 2;
    Rational dbase = 1 + Rational(n + i - 1) * u / 2;
    out *= pochhammer(base, a + b) * pochhammer(base, b) /
           pochhammer(dbase, a + 2 * b);
  }
  return out;
}

Rational pn_eval_checked(PnFamily fam, int n, const Rational& x2) {
  std::optional<UniPoly> pn = pn_poly(fam, n);
  require(pn.has_value(), "complex rhs: no stored P_n entry for this n");
  return pn->eval(x2);
}

}  // namespace

Rational rhs_complex_exact(const std::string& id, const KernelParams& p) {
  require(p.u.has_value(), "rhs_complex_exact: u not set");
  const Rational u = *p.u;
  require(is_integer(u) && sgn(u) >= 0,
          "rhs_complex_exact: u must be a nonnegative integer");
  if (mpz_odd_p(u.get_num_mpz_t())) {
    // cos(pi u / 2) vanishes and every family carries at least one power
    // of it (m >= 1, n - zeta >= 3, or the bare cosine factors)
    if (id == "complex-morris" || id == "complex-dyson")
      require(p.n >= 3, "rhs_complex_exact: n >= 3 for the odd-u zero");
    return 0;
  }
  if (id == "g2-complex" && p.v && is_integer(*p.v) && sgn(*p.v) >= 0 &&
      mpz_odd_p(p.v->get_num_mpz_t()))
    return 0;
  const long t = u.get_num().get_si() / 2;
  const Rational x = (t % 2 == 0) ? 1 : -1;  // cos(pi t)

  if (id == "complex-morris" || id == "complex-dyson") {
    const int n = p.n;
    require(n % 2 == 1, "complex rhs: n must be odd");
    const long m = (n - 1) / 2;
    Rational pn_val = pn_eval_checked(PnFamily::A, n, x * x);
    Rational gam = gamma_int(1 + Rational(n) * u / 2) /
                   pow(gamma_int(1 + u / 2), n);
    Rational poch = (id == "complex-dyson")
                        ? Rational(1)
                        : morris_poch_block(n, p.a, p.b, u);
    return pow(x, m) * pn_val * gam * poch;
  }
  if (id == "g2-complex") {
    require(p.v.has_value(), "g2-complex exact rhs: v not set");
    const Rational v = *p.v;
    require(is_integer(v) && mpz_even_p(v.get_num_mpz_t()) && sgn(v) >= 0,
            "g2-complex exact rhs: v must be an even nonnegative integer");
    const long tv = v.get_num().get_si() / 2;
    const Rational xv = (tv % 2 == 0) ? 1 : -1;
    Rational gam =
        gamma_int(1 + Rational(3) * (u + v) / 2) * gamma_int(1 + Rational(3) * u / 2) *
        gamma_int(1 + u) * gamma_int(1 + v) /
        (gamma_int(1 + Rational(3) * u / 2 + v) * gamma_int(1 + u + v / 2) *
         gamma_int(1 + (u + v) / 2) * pow(gamma_int(1 + u / 2), 2) *
         gamma_int(1 + v / 2));
    return x * xv * gam;
  }
  if (id == "bc-complex") {
    const int n = p.n;
    const int zeta = n % 4;
    require(zeta == 0 || zeta == 1, "bc-complex rhs: n must be 0 or 1 mod 4");
    Rational pn_val = pn_eval_checked(PnFamily::BC, n, x * x);
    Rational gam = gamma_int(1 + Rational(n) * u / 2) /
                   (gamma_int(1 + Rational(n - 1) * u / 2) *
                    pow(gamma_int(1 + u / 2), n));
    for (long i = 1; i < n; ++i)
      gam *= gamma_int(1 + i * u) / gamma_int(1 + Rational(2 * i - 1) * u / 2);
    return pow(x, n - zeta) * pn_val * gam * bc_poch_block(n, p.a, p.b, u);
  }
  throw std::invalid_argument("rhs_complex_exact: unknown id " + id);
}

ComplexRhs rhs_complex(const std::string& id, const KernelParams& p) {
  require(p.u.has_value(), "rhs_complex: u not set");
  const Rational u = *p.u;
  const mpfr_prec_t prec = p.prec;
  const mpfr_prec_t work = prec + 32;
  const BigFloat pi = BigFloat::pi(work);

  auto cos_half_pi = [&](const Rational& q) {
    return cos(pi * BigFloat(q, work) / 2);
  };

  if (id == "complex-morris" || id == "complex-dyson") {
    const int n = p.n;
    require(n % 2 == 1, "complex rhs: n must be odd");
    require(sgn(1 + Rational(n) * u / 2) > 0, "complex rhs: Re(1 + nu/2) > 0 required");
    const long m = (n - 1) / 2;
    BigFloat x = cos_half_pi(u);
    std::optional<UniPoly> pn = pn_poly(PnFamily::A, n);
    require(pn.has_value(), "complex rhs: no stored P_n entry for this n");
    // evaluate P_n(x^2) by Horner in floats
    BigFloat px = BigFloat::zero(work);
    for (long d = pn->degree(); d >= 0; --d)
      px = px * (x * x) + BigFloat(pn->coeff(d), work);
    std::vector<Rational> num = {1 + Rational(n) * u / 2};
    std::vector<Rational> den(static_cast<std::size_t>(n), 1 + u / 2);
    ComplexRhs g = gamma_quotient(num, den, prec);
    Rational poch = (id == "complex-dyson")
                        ? Rational(1)
                        : morris_poch_block(n, p.a, p.b, u);
    ComplexRhs out{pow(x, m) * px * g.value * BigFloat(poch, work),
                   BigFloat::zero(prec)};
    out.err = g.err * abs(pow(x, m) * px * BigFloat(poch, work)) +
              abs(out.value) * BigFloat::pow2(-static_cast<long>(prec) + 8, work);
    return out;
  }
  if (id == "g2-complex") {
    require(p.v.has_value(), "g2-complex rhs: v not set");
    const Rational v = *p.v;
    require(sgn(1 + Rational(3) * u / 2) > 0 && sgn(1 + Rational(3) * (u + v) / 2) > 0,
            "g2-complex rhs: convergence constraints violated");
    std::vector<Rational> num = {1 + Rational(3) * (u + v) / 2,
                                 1 + Rational(3) * u / 2, 1 + u, 1 + v};
    std::vector<Rational> den = {1 + Rational(3) * u / 2 + v, 1 + u + v / 2,
                                 1 + (u + v) / 2, 1 + u / 2, 1 + u / 2,
                                 1 + v / 2};
    ComplexRhs g = gamma_quotient(num, den, prec);
    BigFloat factor = cos_half_pi(u) * cos_half_pi(v);
    ComplexRhs out{factor * g.value, BigFloat::zero(prec)};
    out.err = g.err + abs(out.value) * BigFloat::pow2(-static_cast<long>(prec) + 8, work);
    return out;
  }
  if (id == "bc-complex") {
    const int n = p.n;
    const int zeta = n % 4;
    require(zeta == 0 || zeta == 1, "bc-complex rhs: n must be 0 or 1 mod 4");
    require(sgn(1 + 2 * Rational(p.b) + (n - 1) * u) > 0 &&
                sgn(1 + Rational(n) * u / 2) > 0,
            "bc-complex rhs: convergence constraints violated");
    std::optional<UniPoly> pn = pn_poly(PnFamily::BC, n);
    require(pn.has_value(), "bc-complex rhs: no stored P_n entry for this n");
    BigFloat x = cos_half_pi(u);
    BigFloat px = BigFloat::zero(work);
    for (long d = pn->degree(); d >= 0; --d)
      px = px * (x * x) + BigFloat(pn->coeff(d), work);
    std::vector<Rational> num = {1 + Rational(n) * u / 2};
    std::vector<Rational> den = {1 + Rational(n - 1) * u / 2};
    for (int i = 0; i < n; ++i) den.push_back(1 + u / 2);
    for (int i = 1; i < n; ++i) {
      num.push_back(1 + i * u);
      den.push_back(1 + Rational(2 * i - 1) * u / 2);
    }
    ComplexRhs g = gamma_quotient(num, den, prec);
    Rational poch = bc_poch_block(n, p.a, p.b, u);
    ComplexRhs out{pow(x, n - zeta) * px * g.value * BigFloat(poch, work),
                   BigFloat::zero(prec)};
    out.err = g.err * abs(pow(x, n - zeta) * px * BigFloat(poch, work)) +
              abs(out.value) * BigFloat::pow2(-static_cast<long>(prec) + 8, work);
    return out;
  }
  throw std::invalid_argument("rhs_complex: unknown id " + id);
}

}  // namespace ctlab
