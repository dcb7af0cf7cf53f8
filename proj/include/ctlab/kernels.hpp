#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctlab/combin.hpp"
#include "ctlab/series.hpp"

namespace ctlab {

enum class KernelFamily {
  Dyson,
  Morris,
  MorrisTau,
  LogDyson,
  LogMorris,
  AmLog,
  ComplexMorris,
  ComplexDyson,
  G2Equal,
  G2Hz,
  G2Complex,
  G2LogLong,
  G2LogShort,
  Bc,
  BcSigmaTau,
  BcComplex,
};

std::string to_string(KernelFamily f);
KernelFamily kernel_family_from_string(const std::string& id);

struct KernelParams {
  int n = 3;
  std::vector<long> avec;   // per-variable exponents (dyson only)
  long a = 0, b = 0, k = 0, m = 0;
  std::optional<Rational> u, v;  // fixed exponent values; unset = formal
  long order = 0;                // truncation order for infinite factors
  mpfr_prec_t prec = 256;
};

// A kernel as a list of factors plus optional Vandermonde and monomial
// prefactors. Log factors enter with order -1, meaning "infer an exact
// order from the ranges of the remaining factors".
struct KernelRecipe {
  std::vector<std::string> vars;
  std::vector<FactorSpec> specs;
  bool has_delta = false;
  ExponentVector prefactor;
  bool truncated = false;  // some factor is cut at a finite order
};

KernelRecipe make_recipe(KernelFamily f, const KernelParams& p);

// e_r(X): sum over r-subsets of the variables.
LaurentSeries<Rational> elementary_symmetric(const std::vector<std::string>& vars,
                                             long r);

// Kernel times (-1)^r e_r(X).
template <typename C>
LaurentSeries<C> er_insert(const LaurentSeries<C>& kernel, long r) {
  const long n = static_cast<long>(kernel.var_count());
  if (r < 0 || r > n) throw std::invalid_argument("er_insert: r out of range");
  LaurentSeries<Rational> er = elementary_symmetric(kernel.vars(), r);
  LaurentSeries<C> erc(kernel.vars());
  CoeffCtx<C> ctx;
  for (const auto& [e, c] : er.terms())
    erc.add_term(e, coeff_from_rational<C>((r & 1) ? -c : c, ctx));
  return kernel.mul(erc);
}

template <typename C>
struct KernelBuild {
  std::vector<std::string> vars;
  std::vector<LaurentSeries<C>> pieces;
  bool truncated = false;
};

// Expand every factor of the recipe, inferring exact log orders from the
// exponent ranges of the other factors. extra_ranges widens the bound
// for callers that multiply additional pieces into the product.
template <typename C>
KernelBuild<C> assemble(const KernelRecipe& r, const CoeffCtx<C>& ctx = {},
                        const std::vector<std::pair<int32_t, int32_t>>*
                            extra_ranges = nullptr) {
  const std::size_t n = r.vars.size();
  KernelBuild<C> out;
  out.vars = r.vars;
  out.truncated = r.truncated;

  // summed per-variable ranges of all non-log factors (conservative
  // bound on the support of their product)
  std::vector<std::pair<int32_t, int32_t>> base(n, {0, 0});
  if (extra_ranges) {
    if (extra_ranges->size() != n)
      throw std::invalid_argument("assemble: extra range arity mismatch");
    base = *extra_ranges;
  }
  auto add_range = [&](std::size_t v, long lo, long hi) {
    base[v].first += static_cast<int32_t>(lo);
    base[v].second += static_cast<int32_t>(hi);
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (r.prefactor.size() == n && r.prefactor[v] != 0)
      add_range(v, r.prefactor[v], r.prefactor[v]);
    if (r.has_delta) add_range(v, 0, n - 1);
  }
  std::vector<ExponentVector> log_monomials;
  for (const FactorSpec& s : r.specs) {
    if (s.kind == FactorKind::Logarithm) {
      log_monomials.push_back(s.monomial);
      continue;
    }
    for (std::size_t v = 0; v < n; ++v) {
      long c = s.monomial[v];
      if (c == 0) continue;
      long lo = std::min<long>(0, c * s.max_power());
      long hi = std::max<long>(0, c * s.max_power());
      add_range(v, lo, hi);
    }
  }
  LogWindow lw = infer_log_window(base, log_monomials);

  if (r.prefactor.size() == n) {
    bool nonzero = false;
    for (std::size_t v = 0; v < n; ++v) nonzero |= (r.prefactor[v] != 0);
    if (nonzero)
      out.pieces.push_back(
          LaurentSeries<C>::monomial(r.vars, r.prefactor, C(1)));
  }
  if (r.has_delta) {
    LaurentSeries<Rational> d = vandermonde(r.vars);
    LaurentSeries<C> dc(r.vars);
    for (const auto& [e, c] : d.terms())
      dc.add_term(e, coeff_from_rational<C>(c, ctx));
    out.pieces.push_back(std::move(dc));
  }
  std::size_t log_idx = 0;
  for (const FactorSpec& s : r.specs) {
    FactorSpec spec = s;
    if (spec.kind == FactorKind::Logarithm && spec.order < 0)
      spec.order = std::max<long>(1, lw.orders[log_idx]);
    if (spec.kind == FactorKind::Logarithm) ++log_idx;
    out.pieces.push_back(expand_factor<C>(spec, r.vars, ctx));
  }
  return out;
}

namespace detail {

template <typename C>
bool cap_coeffs(LaurentSeries<C>& s, long cap) {
  if constexpr (std::is_same_v<C, UniPoly>) {
    bool dropped = false;
    LaurentSeries<C> trimmed(s.vars());
    for (const auto& [e, c] : s.sorted_terms()) {
      UniPoly p = c;
      dropped |= p.truncate_degree(cap);
      if (!p.is_zero()) trimmed.add_term(e, p);
    }
    s = std::move(trimmed);
    return dropped;
  }
  (void)s;
  (void)cap;
  return false;
}

}  // namespace detail

// Constant term of a product of factors. Factors are consumed variable
// by variable; once the last factor touching a variable is absorbed the
// window pins that exponent to zero, so supports shrink as the product
// proceeds. The window before each multiplication bounds every exponent
// by what the remaining factors can still cancel.
template <typename C>
struct CtProductResult {
  C value{0};
  bool coeff_capped = false;
};

template <typename C>
CtProductResult<C> ct_product(const std::vector<std::string>& vars0,
                              std::vector<LaurentSeries<C>> pieces,
                              long unipoly_cap = -1) {
  CtProductResult<C> res;
  if (pieces.empty()) {
    res.value = C(1);
    return res;
  }

  // Dehomogenize when every factor is isobaric and the degrees cancel:
  // dropping the last coordinate then preserves the constant term.
  std::vector<std::string> vars = vars0;
  if (vars.size() >= 2) {
    bool iso = true;
    long degsum = 0;
    for (const auto& p : pieces) {
      std::optional<int32_t> d;
      for (const auto& [e, c] : p.terms()) {
        if (!d)
          d = e.total_degree();
        else if (*d != e.total_degree())
          iso = false;
      }
      if (!iso) break;
      if (d) degsum += *d;
    }
    if (iso && degsum == 0) {
      std::vector<std::string> nv(vars.begin(), vars.end() - 1);
      std::vector<LaurentSeries<C>> np;
      for (const auto& p : pieces) {
        LaurentSeries<C> q(nv);
        for (const auto& [e, c] : p.terms()) q.add_term(e.dropped(e.size() - 1), c);
        np.push_back(std::move(q));
      }
      vars = std::move(nv);
      pieces = std::move(np);
    }
  }

  const std::size_t n = vars.size();
  std::vector<std::vector<std::pair<int32_t, int32_t>>> ranges;
  ranges.reserve(pieces.size());
  for (const auto& p : pieces) ranges.push_back(p.per_var_range());

  std::vector<bool> consumed(pieces.size(), false);
  auto window_excluding = [&](std::size_t skip) {
    Window w;
    w.lo.assign(n, 0);
    w.hi.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      long rl = 0, rh = 0;
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (consumed[p] || p == skip) continue;
        rl += ranges[p][v].first;
        rh += ranges[p][v].second;
      }
      w.lo[v] = static_cast<int32_t>(-rh);
      w.hi[v] = static_cast<int32_t>(-rl);
    }
    return w;
  };

  LaurentSeries<C> acc = LaurentSeries<C>::one(vars);
  auto absorb = [&](std::size_t p) {
    acc = acc.mul(pieces[p], window_excluding(p));
    consumed[p] = true;
    if (unipoly_cap >= 0)
      res.coeff_capped |= detail::cap_coeffs(acc, unipoly_cap);
  };

  for (std::size_t v = 0; v < n && !acc.is_zero(); ++v) {
    while (!acc.is_zero()) {
      std::size_t best = pieces.size();
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (consumed[p]) continue;
        if (ranges[p][v].first == 0 && ranges[p][v].second == 0) continue;
        if (best == pieces.size() ||
            pieces[p].term_count() < pieces[best].term_count())
          best = p;
      }
      if (best == pieces.size()) break;
      absorb(best);
    }
  }
  for (std::size_t p = 0; p < pieces.size() && !acc.is_zero(); ++p)
    if (!consumed[p]) absorb(p);

  res.value = acc.constant_term();
  return res;
}

template <typename C>
struct CtResult {
  C value{0};
  bool exact = false;
  C tail{0};  // difference against the halved-truncation value
};

// Constant term of a kernel family instance. When any factor is
// truncated the computation is repeated at half the truncation order and
// the difference is reported as the tail estimate.
template <typename C>
CtResult<C> ct(KernelFamily f, const KernelParams& p, const CoeffCtx<C>& ctx = {}) {
  KernelRecipe recipe = make_recipe(f, p);
  KernelBuild<C> b = assemble<C>(recipe, ctx);
  long cap = -1;
  if constexpr (std::is_same_v<C, UniPoly>) {
    if (b.truncated) cap = p.order;
  }
  CtProductResult<C> r = ct_product<C>(b.vars, b.pieces, cap);

  CtResult<C> out;
  out.value = r.value;
  out.exact = !b.truncated && !r.coeff_capped;
  if (!out.exact && b.truncated) {
    KernelParams half = p;
    half.order = std::max<long>(1, p.order / 2);
    KernelBuild<C> b2 = assemble<C>(make_recipe(f, half), ctx);
    CtProductResult<C> r2 = ct_product<C>(b2.vars, b2.pieces, cap < 0 ? -1 : half.order);
    out.tail = r.value - r2.value;
  }
  return out;
}

// Full expansion of the kernel (small instances only).
template <typename C>
LaurentSeries<C> build_kernel(KernelFamily f, const KernelParams& p,
                              const CoeffCtx<C>& ctx = {}) {
  KernelRecipe recipe = make_recipe(f, p);
  KernelBuild<C> b = assemble<C>(recipe, ctx);
  LaurentSeries<C> acc = LaurentSeries<C>::one(b.vars);
  for (const auto& piece : b.pieces) acc = acc.mul(piece);
  return acc;
}

}  // namespace ctlab
