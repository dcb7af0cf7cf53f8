#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctlab/bigfloat.hpp"
#include "ctlab/bipoly.hpp"
#include "ctlab/factorials.hpp"
#include "ctlab/rational.hpp"
#include "ctlab/unipoly.hpp"

namespace ctlab {

// Exponent vector of a Laurent monomial; entries may be negative.
class ExponentVector {
 public:
  static constexpr std::size_t kMaxVars = 6;

  ExponentVector() : n_(0) { e_.fill(0); }
  explicit ExponentVector(std::size_t n) : n_(static_cast<uint8_t>(n)) {
    if (n > kMaxVars) throw std::invalid_argument("too many variables");
    e_.fill(0);
  }
  ExponentVector(std::initializer_list<int32_t> init)
      : ExponentVector(init.size()) {
    std::size_t i = 0;
    for (int32_t v : init) e_[i++] = v;
  }

  std::size_t size() const { return n_; }
  int32_t operator[](std::size_t i) const { return e_[i]; }
  int32_t& operator[](std::size_t i) { return e_[i]; }

  int32_t total_degree() const {
    int32_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += e_[i];
    return s;
  }

  friend ExponentVector operator+(const ExponentVector& a,
                                  const ExponentVector& b) {
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  ExponentVector scaled(int32_t f) const {
    ExponentVector r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] * f;
    return r;
  }
  ExponentVector dropped(std::size_t idx) const {
    ExponentVector r(n_ - 1);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (i != idx) r.e_[j++] = e_[i];
    return r;
  }

  bool operator==(const ExponentVector& o) const {
    if (n_ != o.n_) return false;
    return std::equal(e_.begin(), e_.begin() + n_, o.e_.begin());
  }
  bool operator<(const ExponentVector& o) const {
    return std::lexicographical_compare(e_.begin(), e_.begin() + n_,
                                        o.e_.begin(), o.e_.begin() + o.n_);
  }

  struct Hash {
    std::size_t operator()(const ExponentVector& v) const {
      uint64_t h = 0x9e3779b97f4a7c15ull ^ v.n_;
      for (std::size_t i = 0; i < v.n_; ++i) {
        h ^= static_cast<uint64_t>(static_cast<uint32_t>(v.e_[i]));
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::array<int32_t, kMaxVars> e_;
  uint8_t n_;
};

// Truncation window: per-variable inclusive exponent bounds plus an
// optional restriction to total-degree-zero monomials.
struct Window {
  std::vector<int32_t> lo, hi;
  bool degree_zero_only = false;

  static Window unbounded(std::size_t n) {
    Window w;
    w.lo.assign(n, std::numeric_limits<int32_t>::min() / 4);
    w.hi.assign(n, std::numeric_limits<int32_t>::max() / 4);
    return w;
  }
  static Window box(std::size_t n, int32_t lo_v, int32_t hi_v) {
    Window w;
    w.lo.assign(n, lo_v);
    w.hi.assign(n, hi_v);
    return w;
  }

  void validate() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] > hi[i]) throw std::invalid_argument("window: lo > hi");
  }

  bool contains(const ExponentVector& e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return false;
    if (degree_zero_only && e.total_degree() != 0) return false;
    return true;
  }
};

template <typename C>
struct CoeffCtx {
  mpfr_prec_t prec = 256;
};

template <typename C>
C coeff_from_rational(const Rational& q, const CoeffCtx<C>& ctx) {
  if constexpr (std::is_same_v<C, BigFloat>)
    return BigFloat(q, ctx.prec);
  else
    return C(q);
}

// Sparse Laurent polynomial/series over the coefficient ring C
// (Rational, UniPoly, BiPoly or BigFloat).
template <typename C>
class LaurentSeries {
 public:
  using TermMap = std::unordered_map<ExponentVector, C, ExponentVector::Hash>;

  LaurentSeries() = default;
  explicit LaurentSeries(std::vector<std::string> vars)
      : vars_(std::move(vars)) {}

  static LaurentSeries zero(std::vector<std::string> vars) {
    return LaurentSeries(std::move(vars));
  }
  static LaurentSeries one(std::vector<std::string> vars) {
    LaurentSeries s(std::move(vars));
    s.add_term(ExponentVector(s.var_count()), C(1));
    return s;
  }
  static LaurentSeries monomial(std::vector<std::string> vars,
                                const ExponentVector& e, C coeff) {
    LaurentSeries s(std::move(vars));
    s.add_term(e, std::move(coeff));
    return s;
  }

  std::size_t var_count() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const ExponentVector& e, const C& c) {
    if (e.size() != var_count())
      throw std::invalid_argument("exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!ctlab::is_zero(c)) terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (ctlab::is_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  // Coefficient of the zero exponent vector.
  C constant_term() const { return coeff(ExponentVector(var_count())); }

  friend LaurentSeries operator+(const LaurentSeries& a,
                                 const LaurentSeries& b) {
    a.check_vars(b);
    LaurentSeries r = a;
    for (const auto& [e, c] : b.sorted_terms()) r.add_term(e, c);
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries& a,
                                 const LaurentSeries& b) {
    a.check_vars(b);
    LaurentSeries r = a;
    for (const auto& [e, c] : b.sorted_terms()) r.add_term(e, C(0) - c);
    return r;
  }
  LaurentSeries operator-() const {
    LaurentSeries r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(0) - c);
    return r;
  }
  LaurentSeries scaled(const C& s) const {
    LaurentSeries r(vars_);
    if (ctlab::is_zero(s)) return r;
    for (const auto& [e, c] : terms_) {
      C sc = c * s;
      if (!ctlab::is_zero(sc)) r.terms_.emplace(e, std::move(sc));
    }
    return r;
  }

  bool operator==(const LaurentSeries& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  // Windowed product. Terms outside w are discarded before accumulation.
  // Both operands are traversed in sorted exponent order so the additions
  // hitting each output slot happen in a reproducible order.
  LaurentSeries mul(const LaurentSeries& g, const Window& w) const {
    check_vars(g);
    if (w.lo.size() != var_count() || w.hi.size() != var_count())
      throw std::invalid_argument("window arity mismatch");
    w.validate();
    LaurentSeries r(vars_);
    auto at = sorted_terms();
    auto bt = g.sorted_terms();
    if (at.empty() || bt.empty()) return r;
    r.terms_.reserve(at.size() + bt.size());
    for (const auto& [ea, ca] : at) {
      for (const auto& [eb, cb] : bt) {
        ExponentVector e = ea + eb;
        if (!w.contains(e)) continue;
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  LaurentSeries mul(const LaurentSeries& g) const {
    return mul(g, Window::unbounded(var_count()));
  }

  // Monomial substitution x_i -> images[i]; exponent vectors transform
  // linearly, coefficients are untouched.
  LaurentSeries substitute(const std::vector<ExponentVector>& images) const {
    if (images.size() != var_count())
      throw std::invalid_argument("substitute: wrong image count");
    for (const auto& im : images)
      if (im.size() != var_count())
        throw std::invalid_argument("substitute: image arity mismatch");
    LaurentSeries r(vars_);
    for (const auto& [e, c] : terms_) {
      ExponentVector t(var_count());
      for (std::size_t i = 0; i < var_count(); ++i)
        if (e[i] != 0) t = t + images[i].scaled(e[i]);
      r.add_term(t, c);
    }
    return r;
  }

  // Set the last variable to 1. Requires a total-degree-0 homogeneous
  // input so that the constant term is preserved.
  LaurentSeries dehomogenize() const {
    for (const auto& [e, c] : terms_)
      if (e.total_degree() != 0)
        throw std::domain_error("dehomogenize: series is not homogeneous of degree 0");
    std::vector<std::string> nv(vars_.begin(), vars_.end() - 1);
    LaurentSeries r(std::move(nv));
    for (const auto& [e, c] : terms_) r.add_term(e.dropped(e.size() - 1), c);
    return r;
  }

  // Coefficient-of-x_idx^0 extraction, dropping the variable.
  LaurentSeries ct_in_var(std::size_t idx) const {
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != idx) nv.push_back(vars_[i]);
    LaurentSeries r(std::move(nv));
    for (const auto& [e, c] : terms_)
      if (e[idx] == 0) r.add_term(e.dropped(idx), c);
    return r;
  }

  // Per-variable exponent ranges over the support; [0, 0] for empty.
  std::vector<std::pair<int32_t, int32_t>> per_var_range() const {
    std::vector<std::pair<int32_t, int32_t>> r(var_count(), {0, 0});
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < var_count(); ++i) {
        if (first) {
          r[i] = {e[i], e[i]};
        } else {
          r[i].first = std::min(r[i].first, e[i]);
          r[i].second = std::max(r[i].second, e[i]);
        }
      }
      first = false;
    }
    return r;
  }

  std::vector<std::pair<ExponentVector, C>> sorted_terms() const {
    std::vector<std::pair<ExponentVector, C>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  // Fixture format: one line per monomial, "e1 e2 ... en : coeff",
  // sorted lexicographically.
  std::string dump() const {
    std::string out;
    for (const auto& [e, c] : sorted_terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(e[i]);
      }
      out += " : " + ctlab::to_string(c) + "\n";
    }
    return out;
  }

 private:
  void check_vars(const LaurentSeries& o) const {
    if (vars_ != o.vars_)
      throw std::invalid_argument("series variable sets differ");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class FactorKind {
  IntegerPower,   // (1 - M)^e, exact finite expansion
  FormalU,        // (1 - M)^(u + shift), truncated
  FormalV,        // (1 - M)^(v + shift), truncated
  FixedExponent,  // (1 - M)^q for a fixed rational q, truncated
  Logarithm,      // log(1 - M), truncated
};

// One factor of a kernel: a base monomial M raised to an integer, formal
// or fixed-rational exponent, or fed through log(1 - M).
struct FactorSpec {
  ExponentVector monomial;
  FactorKind kind = FactorKind::IntegerPower;
  long int_exponent = 0;    // IntegerPower, or the shift of a formal kind
  Rational fixed_exponent;  // FixedExponent
  long order = 0;           // truncation order for the infinite kinds

  bool finite() const { return kind == FactorKind::IntegerPower; }

  long max_power() const {
    return kind == FactorKind::IntegerPower ? int_exponent : order;
  }
  long min_power() const { return kind == FactorKind::Logarithm ? 1 : 0; }
};

namespace detail {

template <typename C>
struct FormalExponent {
  static C make(FactorKind kind, long shift) {
    if constexpr (std::is_same_v<C, UniPoly>) {
      if (kind != FactorKind::FormalU)
        throw std::invalid_argument("UniPoly coefficients carry only u");
      return UniPoly::var() + UniPoly(shift);
    } else if constexpr (std::is_same_v<C, BiPoly>) {
      return (kind == FactorKind::FormalU ? BiPoly::var_u()
                                          : BiPoly::var_v()) +
             BiPoly(shift);
    } else {
      throw std::invalid_argument(
          "formal exponent requires UniPoly or BiPoly coefficients");
    }
  }
};

}  // namespace detail

// Expand a single factor into a (possibly truncated) series.
//   IntegerPower:  sum_{j<=e}     binom(e, j) (-M)^j        -- exact
//   Formal/Fixed:  sum_{j<=order} binom(x, j) (-M)^j
//   Logarithm:    -sum_{1<=j<=order} M^j / j
template <typename C>
LaurentSeries<C> expand_factor(const FactorSpec& spec,
                               const std::vector<std::string>& vars,
                               const CoeffCtx<C>& ctx = {}) {
  if (spec.monomial.size() != vars.size())
    throw std::invalid_argument("expand_factor: monomial arity mismatch");
  LaurentSeries<C> s(vars);
  switch (spec.kind) {
    case FactorKind::IntegerPower: {
      if (spec.int_exponent < 0)
        throw std::invalid_argument("expand_factor: negative integer exponent");
      Rational b = 1;  // binom(e, j), updated incrementally
      for (long j = 0; j <= spec.int_exponent; ++j) {
        Rational c = (j & 1) ? -b : b;
        s.add_term(spec.monomial.scaled(static_cast<int32_t>(j)),
                   coeff_from_rational<C>(c, ctx));
        b = b * (spec.int_exponent - j) / (j + 1);
      }
      break;
    }
    case FactorKind::FormalU:
    case FactorKind::FormalV: {
      if (spec.order < 0)
        throw std::invalid_argument("expand_factor: negative truncation order");
      C x = detail::FormalExponent<C>::make(spec.kind, spec.int_exponent);
      C b{1};  // binom(x, j)
      for (long j = 0; j <= spec.order; ++j) {
        C c = (j & 1) ? C(0) - b : b;
        s.add_term(spec.monomial.scaled(static_cast<int32_t>(j)), c);
        b = (b * (x - C(j))) / (j + 1);
      }
      break;
    }
    case FactorKind::FixedExponent: {
      if (spec.order < 0)
        throw std::invalid_argument("expand_factor: negative truncation order");
      if constexpr (std::is_same_v<C, Rational> || std::is_same_v<C, BigFloat>) {
        C x = coeff_from_rational<C>(spec.fixed_exponent, ctx);
        C b{1};
        for (long j = 0; j <= spec.order; ++j) {
          C c = (j & 1) ? C(0) - b : b;
          s.add_term(spec.monomial.scaled(static_cast<int32_t>(j)), c);
          b = (b * (x - C(j))) / (j + 1);
        }
      } else {
        throw std::invalid_argument(
            "fixed-exponent factor requires Rational or BigFloat coefficients");
      }
      break;
    }
    case FactorKind::Logarithm: {
      if (spec.order < 1)
        throw std::invalid_argument("expand_factor: log needs order >= 1");
      for (long j = 1; j <= spec.order; ++j)
        s.add_term(spec.monomial.scaled(static_cast<int32_t>(j)),
                   coeff_from_rational<C>(rat(-1, j), ctx));
      break;
    }
  }
  return s;
}

// Vandermonde product prod_{i<j} (x_i - x_j), expanded via the
// determinant form sum_w sgn(w) prod_i x_i^(n - w_i).
LaurentSeries<Rational> vandermonde(const std::vector<std::string>& vars);

// Truncation orders for log factors multiplying a finite Laurent
// polynomial, chosen so the constant term of the full product is exact.
// For log(1 - M) only powers M^t with t*M cancellable against the rest of
// the product can reach the constant term; a variable of M touched by no
// other log yields the bound. Requires each log monomial to have such a
// coordinate.
struct LogWindow {
  std::vector<long> orders;
  Window window;
};

LogWindow infer_log_window(
    const std::vector<std::pair<int32_t, int32_t>>& poly_ranges,
    const std::vector<ExponentVector>& log_monomials);

}  // namespace ctlab
