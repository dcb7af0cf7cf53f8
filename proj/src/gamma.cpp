#include "ctlab/gamma.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "ctlab/factorials.hpp"

namespace ctlab {

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache;  // guarded by bernoulli_mutex
}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  if (bernoulli_cache.empty()) bernoulli_cache.push_back(1);
  // sum_{j=0}^{m-1} C(m+1, j) B_j = -(m+1) B_m
  while (static_cast<long>(bernoulli_cache.size()) <= n) {
    long m = static_cast<long>(bernoulli_cache.size());
    Rational s = 0;
    for (long j = 0; j < m; ++j)
      s += Rational(binomial(m + 1, j)) * bernoulli_cache[j];
    bernoulli_cache.push_back(-s / (m + 1));
  }
  return bernoulli_cache[n];
}

BigFloat lgamma(const Rational& x, mpfr_prec_t precision_bits) {
  if (sgn(x) <= 0) throw std::domain_error("lgamma: argument must be positive");
  if (precision_bits < 64) throw std::invalid_argument("lgamma: precision below 64 bits");

  const mpfr_prec_t work = precision_bits + 64;
  const long target_exp = -static_cast<long>(precision_bits) - 16;

  // Shift x upward so the asymptotic series reaches the target in few terms.
  const long threshold =
      std::max<long>(32, static_cast<long>(precision_bits) / 4);
  long shift = 0;
  {
    Rational gap = Rational(threshold) - x;
    if (sgn(gap) > 0) {
      Integer f = floor_int(gap);
      shift = f.get_si() + 1;
    }
  }
  Rational yq = x + shift;

  BigFloat y(yq, work);
  BigFloat logy = log(y);

  // (y - 1/2) log y - y + log(2 pi)/2
  BigFloat acc = (y - BigFloat(rat(1, 2), work)) * logy - y +
                 log(BigFloat::pi(work) * 2) / 2;

  // sum_j B_2j / (2j (2j-1) y^(2j-1)); remainder bounded by the first
  // omitted term for real positive y.
  BigFloat y2 = y * y;
  BigFloat ypow = y;  // y^(2j-1)
  const BigFloat bound = BigFloat::pow2(target_exp, work);
  bool converged = false;
  for (long j = 1; j <= 4096; ++j) {
    BigFloat term(bernoulli(2 * j) / ((2 * j) * (2 * j - 1)), work);
    term = term / ypow;
    if (abs(term) < bound) {
      converged = true;
      break;
    }
    acc += term;
    ypow = ypow * y2;
  }
  if (!converged) throw std::runtime_error("lgamma: Stirling series did not reach target");

  // ln Gamma(x) = ln Gamma(x + s) - sum_{i<s} ln(x + i)
  for (long i = 0; i < shift; ++i)
    acc -= log(BigFloat(x + i, work));

  return acc;
}

SignedLogGamma lgamma_signed(const Rational& x, mpfr_prec_t precision_bits) {
  if (sgn(x) > 0) return {1, lgamma(x, precision_bits)};
  if (is_integer(x)) throw std::domain_error("gamma pole at a nonpositive integer");
  // Gamma(x) = Gamma(x + k) / prod_{i<k} (x + i), with x + k >= 1
  Integer kf = floor_int(1 - x);
  long k = kf.get_si() + 1;
  SignedLogGamma out{1, lgamma(x + k, precision_bits)};
  const mpfr_prec_t work = precision_bits + 64;
  for (long i = 0; i < k; ++i) {
    Rational t = x + i;
    if (sgn(t) < 0) out.sign = -out.sign;
    out.log_abs -= log(abs(BigFloat(t, work)));
  }
  return out;
}

}  // namespace ctlab
