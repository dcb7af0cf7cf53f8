#include "ctlab/hyper.hpp"

#include <map>

#include "ctlab/factorials.hpp"

namespace ctlab {

bool HyperSeries::terminating() const {
  for (const Rational& a : num)
    if (is_integer(a) && sgn(a) <= 0) return true;
  return false;
}

HyperSum hyper_sum(const HyperSeries& h, mpfr_prec_t prec) {
  long stop = -1;  // index of the last nonzero term, from termination
  for (const Rational& a : h.num)
    if (is_integer(a) && sgn(a) <= 0) {
      long s = -a.get_num().get_si();
      stop = (stop < 0) ? s : std::min(stop, s);
    }

  auto check_pole = [&](long t) {
    for (const Rational& d : h.den)
      if (d + t == 0)
        throw std::domain_error("hyper_sum: denominator parameter pole");
  };

  if (stop >= 0) {
    // terminating: exact rational accumulation
    Rational sum = 0, term = 1;
    for (long t = 0;; ++t) {
      sum += term;
      if (t == stop) break;
      check_pole(t);
      Rational ratio = 1;
      for (const Rational& a : h.num) ratio *= a + t;
      for (const Rational& d : h.den) ratio /= d + t;
      ratio /= t + 1;
      term *= ratio;
    }
    HyperSum out;
    out.exact = sum;
    out.value = BigFloat(sum, prec);
    out.tail = BigFloat(0, prec);
    return out;
  }

  const long cap = h.term_cap;
  const mpfr_prec_t work = prec + 32;
  BigFloat sum = BigFloat::zero(work), term(1, work);
  BigFloat at_half = BigFloat::zero(work);
  for (long t = 0; t <= cap; ++t) {
    sum += term;
    if (t == cap / 2) at_half = sum;
    check_pole(t);
    BigFloat ratio(1, work);
    for (const Rational& a : h.num) ratio *= BigFloat(a + t, work);
    for (const Rational& d : h.den) ratio = ratio / BigFloat(d + t, work);
    ratio = ratio / (t + 1);
    term *= ratio;
  }
  HyperSum out;
  out.value = sum;
  out.tail = abs(sum - at_half);
  return out;
}

ComplexRhs dixon_rhs(const Rational& a, const Rational& b, const Rational& c,
                     mpfr_prec_t prec) {
  if (sgn(1 + a - b - c) <= 0)
    throw std::domain_error("dixon_rhs: Re(1 + a - b - c) > 0 required");
  if (b == 2 * a && c == 2 * a) {
    // cos(pi a) Gamma(1-3a) / Gamma^3(1-a), the pole-free rewriting of
    // the well-poised diagonal
    const mpfr_prec_t work = prec + 32;
    ComplexRhs g = gamma_quotient({1 - 3 * a}, {1 - a, 1 - a, 1 - a}, prec);
    BigFloat factor = cos(BigFloat::pi(work) * BigFloat(a, work));
    return {factor * g.value, g.err + abs(factor * g.value) *
                                          BigFloat::pow2(-long(prec) + 8, work)};
  }
  return gamma_quotient(
      {1 + a, 1 + 2 * a - b, 1 + 2 * a - c, 1 + a - b - c},
      {1 + 2 * a, 1 + a - b, 1 + a - c, 1 + 2 * a - b - c}, prec);
}

LatticeSum fb_lattice_sum(const Rational& u, const Rational& v, long b, long M) {
  if (b < 0 || M < 1) throw std::invalid_argument("fb_lattice_sum: bad b or M");
  if (sgn(1 + 3 * u) <= 0)
    throw std::domain_error("fb_lattice_sum: Re(1 + 3u) > 0 required");

  // binom(2u, m) for m <= M and binom(-1-v, j) for j <= 3b
  const Rational two_u = 2 * u;
  std::vector<Rational> bu(M + 1);
  bu[0] = 1;
  for (long m = 0; m < M; ++m) bu[m + 1] = bu[m] * (two_u - m) / (m + 1);
  const Rational w = -1 - v;
  std::vector<Rational> bv(3 * b + 1);
  if (b >= 0) {
    bv[0] = 1;
    for (long j = 0; j < 3 * b; ++j) bv[j + 1] = bv[j] * (w - j) / (j + 1);
  }

  bool finite = is_integer(two_u) && sgn(two_u) >= 0 &&
                two_u.get_num().get_si() <= M;

  Rational sum = 0, at_half = 0;
  for (long m0 = 0; m0 <= M; ++m0) {
    for (long m1 = std::max<long>(0, m0 - 2 * b); m1 <= std::min(M, m0 + b);
         ++m1) {
      long j0 = b + m0 - m1;
      if (j0 < 0 || j0 > 3 * b) continue;
      if (is_zero(bu[m1]) && m1 > 0) continue;
      for (long m2 = std::max<long>(0, m0 - b); m2 <= std::min(M, m1 + b);
           ++m2) {
        long j1 = b + m1 - m2;
        long j2 = b + m2 - m0;
        if (j1 < 0 || j2 < 0 || j1 > 3 * b || j2 > 3 * b) continue;
        Rational term = bu[m0] * bu[m1] * bu[m2] * bv[j0] * bv[j1] * bv[j2];
        if ((m0 + m1 + m2) & 1) term = -term;
        sum += term;
      }
    }
    if (m0 == M / 2) at_half = sum;
  }
  return {sum, sum - at_half, finite};
}

namespace {

// rational function as numerator polynomial over a list of polynomial
// denominator factors (all monic by construction)
struct RatTerm {
  MultiPoly num;
  std::vector<MultiPoly> den;
};

RatTerm mul_terms(const RatTerm& a, const RatTerm& b) {
  RatTerm r;
  r.num = a.num * b.num;
  r.den = a.den;
  r.den.insert(r.den.end(), b.den.begin(), b.den.end());
  return r;
}

struct CertificateContext {
  MultiPoly::Vars vars;
  MultiPoly u, v, b, one;
  std::vector<MultiPoly> m;  // m0, m1, m2
  bool perturb = false;

  CertificateContext() {
    vars = MultiPoly::make_vars({"u", "v", "b", "m0", "m1", "m2"});
    u = MultiPoly::var(vars, 0);
    v = MultiPoly::var(vars, 1);
    b = MultiPoly::var(vars, 2);
    one = MultiPoly::constant(vars, 1);
    for (int i = 0; i < 3; ++i) m.push_back(MultiPoly::var(vars, 3 + i));
  }

  // r_b with argument slots (M0, M1, M2); the global sign pairs with
  // the minus on the constant term of the cleared identity below
  RatTerm r_term(const MultiPoly& M0, const MultiPoly& M1,
                 const MultiPoly& M2) const {
    const Rational two(2), three(3);
    MultiPoly bracket =
        (b * two + v) * (b * b * three + b * v * three + u * v * two) +
        (M1 - M2) *
            (b * b * three + b * v * three + v * v + (perturb ? u * v : -(u * v))) *
            two;
    RatTerm t;
    t.num = (M0 * (b + v + M2 - M0) * bracket) / 6;
    t.den = {b + M1 - M2, b + M2 - M0};
    return t;
  }

  RatTerm s_term(const MultiPoly& M0, const MultiPoly& M1,
                 const MultiPoly& M2) const {
    RatTerm t;
    t.num = (u * Rational(2) - M0) * (b + v + M0 - M1) * (b + M2 - M0 - one);
    t.den = {one + M0, b + M0 - M1, b + v + M2 - M0 - one};
    return t;
  }

  RatTerm t_term(const MultiPoly& M0, const MultiPoly& M1,
                 const MultiPoly& M2) const {
    RatTerm t;
    t.num = (b + v + M0 - M1) * (b + v + M1 - M2) * (b + v + M2 - M0);
    t.den = {b + M0 - M1, b + M1 - M2, b + M2 - M0};
    return t;
  }
};

// clear the union of all denominator factors and sum each side
std::pair<MultiPoly, MultiPoly> clear_and_sum(
    const std::vector<RatTerm>& lhs, const std::vector<RatTerm>& rhs) {
  // common denominator: per distinct factor, the maximal multiplicity
  // seen in any single term
  std::map<std::string, std::pair<MultiPoly, int>> lcm;
  auto scan = [&](const std::vector<RatTerm>& side) {
    for (const RatTerm& t : side) {
      std::map<std::string, std::pair<MultiPoly, int>> local;
      for (const MultiPoly& f : t.den) {
        auto [it, fresh] = local.try_emplace(f.to_string(), f, 0);
        ++it->second.second;
      }
      for (auto& [key, fc] : local) {
        auto [it, fresh] = lcm.try_emplace(key, fc.first, 0);
        it->second.second = std::max(it->second.second, fc.second);
      }
    }
  };
  scan(lhs);
  scan(rhs);

  auto cleared_sum = [&](const std::vector<RatTerm>& side) {
    MultiPoly sum;
    for (const RatTerm& t : side) {
      std::map<std::string, int> have;
      for (const MultiPoly& f : t.den) ++have[f.to_string()];
      MultiPoly p = t.num;
      for (const auto& [key, fc] : lcm) {
        int missing = fc.second - (have.count(key) ? have[key] : 0);
        for (int i = 0; i < missing; ++i) p = p * fc.first;
      }
      sum = sum + p;
    }
    return sum;
  };
  return {cleared_sum(lhs), cleared_sum(rhs)};
}

}  // namespace

CertificateReport verify_certificate(bool perturb) {
  CertificateContext cx;
  cx.perturb = perturb;

  // cyclic images of (m0, m1, m2)
  const std::vector<std::array<int, 3>> rot = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};

  std::vector<RatTerm> lhs, rhs;
  {
    RatTerm t = cx.t_term(cx.m[0], cx.m[1], cx.m[2]);
    for (int i = 0; i < 3; ++i)
      t.num = t.num * (cx.b + cx.u * Rational(i));
    lhs.push_back(t);
    RatTerm c;
    c.num = -cx.one;
    for (int i = 0; i < 3; ++i)
      c.num = c.num * (cx.b + cx.v - cx.u * Rational(i));
    lhs.push_back(c);
  }
  for (const auto& r : rot) {
    const MultiPoly& M0 = cx.m[r[0]];
    const MultiPoly& M1 = cx.m[r[1]];
    const MultiPoly& M2 = cx.m[r[2]];
    rhs.push_back(mul_terms(cx.r_term(M0 + cx.one, M1, M2), cx.s_term(M0, M1, M2)));
    rhs.push_back(cx.r_term(M0, M1, M2));
  }

  auto [ls, rs] = clear_and_sum(lhs, rhs);
  CertificateReport rep;
  rep.difference = ls - rs;
  rep.verified = rep.difference.is_zero();
  rep.degree = std::max(ls.total_degree(), rs.total_degree());
  // fixed sample point for the cleared sides
  std::vector<Rational> point = {rat(1, 2), rat(1, 3), 2, 1, 0, 2};
  rep.lhs_sample = ls.eval(point);
  rep.rhs_sample = rs.eval(point);
  return rep;
}

Rational d4_multisum(long u) {
  if (u < 1 || u > 3) throw std::invalid_argument("d4_multisum: u must be 1, 2 or 3");
  // binomials and sign pulled out per index
  std::vector<Rational> bn(u + 1);
  for (long t = 0; t <= u; ++t) bn[t] = Rational(binomial(u, t));

  // index order: pairs (12, 13, 14, 23, 24, 34)
  Rational sum = 0;
  long k12, k13, k14, k23, k24, k34, m12, m13, m23;
  for (k12 = 0; k12 <= u; ++k12)
    for (k13 = 0; k13 <= u; ++k13)
      for (k14 = 0; k14 <= u; ++k14)
        for (k23 = 0; k23 <= u; ++k23)
          for (k24 = 0; k24 <= u; ++k24)
            for (k34 = 0; k34 <= u; ++k34) {
              Rational kprod = bn[k12] * bn[k13] * bn[k14] * bn[k23] *
                               bn[k24] * bn[k34];
              if ((k12 + k13 + k14 + k23 + k24 + k34) & 1) kprod = -kprod;
              for (m12 = 0; m12 <= u; ++m12)
                for (m13 = 0; m13 <= u; ++m13)
                  for (m23 = 0; m23 <= u; ++m23) {
                    // solve the first three linear constraints
                    long m14 = k12 - k13 - k14 + m12 + m13;
                    long m24 = k12 - k23 + k24 - m12 + m23;
                    long m34 = k13 - k23 + k34 + m13 - m23;
                    if (m14 < 0 || m14 > u || m24 < 0 || m24 > u || m34 < 0 ||
                        m34 > u)
                      continue;
                    if (k14 + k24 - k34 - m14 + m24 - m34 != 0) continue;
                    sum += kprod * bn[m12] * bn[m13] * bn[m14] * bn[m23] *
                           bn[m24] * bn[m34];
                  }
            }
  return sum;
}

}  // namespace ctlab
