#include "ctlab/series.hpp"

#include <numeric>

namespace ctlab {

LaurentSeries<Rational> vandermonde(const std::vector<std::string>& vars) {
  const std::size_t n = vars.size();
  if (n < 1) throw std::invalid_argument("vandermonde: need at least one variable");
  LaurentSeries<Rational> s(vars);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    // sgn(w) by counting inversions
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (w[i] > w[j]) ++inv;
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i)
      e[i] = static_cast<int32_t>(n - w[i]);
    s.add_term(e, (inv & 1) ? Rational(-1) : Rational(1));
  } while (std::next_permutation(w.begin(), w.end()));
  return s;
}

LogWindow infer_log_window(
    const std::vector<std::pair<int32_t, int32_t>>& poly_ranges,
    const std::vector<ExponentVector>& log_monomials) {
  const std::size_t n = poly_ranges.size();
  LogWindow out;
  out.orders.assign(log_monomials.size(), 0);

  for (std::size_t l = 0; l < log_monomials.size(); ++l) {
    const ExponentVector& mu = log_monomials[l];
    if (mu.size() != n)
      throw std::invalid_argument("infer_log_window: arity mismatch");
    long best = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (mu[c] == 0) continue;
      bool exclusive = true;
      for (std::size_t l2 = 0; l2 < log_monomials.size(); ++l2)
        if (l2 != l && log_monomials[l2][c] != 0) exclusive = false;
      if (!exclusive) continue;
      // t * mu_c must cancel an exponent reachable by the rest.
      long bound = (mu[c] > 0) ? std::max<long>(0, -poly_ranges[c].first) / mu[c]
                               : std::max<long>(0, poly_ranges[c].second) / (-mu[c]);
      best = (best < 0) ? bound : std::min(best, bound);
    }
    if (best < 0)
      throw std::domain_error(
          "infer_log_window: log monomial shares every variable with another log");
    out.orders[l] = best;
  }

  // Combined reachability window: poly ranges plus the log contributions.
  out.window.lo.assign(n, 0);
  out.window.hi.assign(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    long lo = poly_ranges[c].first, hi = poly_ranges[c].second;
    for (std::size_t l = 0; l < log_monomials.size(); ++l) {
      long contrib = static_cast<long>(log_monomials[l][c]) * out.orders[l];
      lo += std::min<long>(0, contrib);
      hi += std::max<long>(0, contrib);
    }
    out.window.lo[c] = static_cast<int32_t>(lo);
    out.window.hi[c] = static_cast<int32_t>(hi);
  }
  return out;
}

}  // namespace ctlab
