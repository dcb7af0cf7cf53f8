#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctlab/rational.hpp"

namespace ctlab {

// Sparse polynomial over Q in a fixed set of named indeterminates.
// The indeterminate set is immutable per value; mixed-set arithmetic is
// rejected.
class MultiPoly {
 public:
  using Vars = std::shared_ptr<const std::vector<std::string>>;
  using Key = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(Vars vars) : vars_(std::move(vars)) {}
  // Scalar with an as-yet-unknown indeterminate set; keys are aligned on
  // first contact with a sized polynomial.
  MultiPoly(long v) {
    if (v != 0) t_[Key{}] = Rational(v);
  }
  MultiPoly(const Rational& v) {
    if (!ctlab::is_zero(v)) t_[Key{}] = v;
  }

  static Vars make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
  }
  static MultiPoly constant(Vars vars, const Rational& c) {
    MultiPoly p(vars);
    if (!ctlab::is_zero(c)) p.t_[Key(vars->size(), 0)] = c;
    return p;
  }
  static MultiPoly var(Vars vars, std::size_t i) {
    if (i >= vars->size()) throw std::out_of_range("MultiPoly::var index");
    MultiPoly p(vars);
    Key k(vars->size(), 0);
    k[i] = 1;
    p.t_[k] = 1;
    return p;
  }

  const Vars& vars() const { return vars_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  long total_degree() const {
    long d = 0;
    for (const auto& [k, c] : t_) {
      long s = 0;
      for (int e : k) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly aa = a.check(b), bb = b.check(a);
    for (const auto& [k, c] : bb.t_) aa.add(k, c);
    return aa;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly aa = a.check(b), bb = b.check(a);
    for (const auto& [k, c] : bb.t_) aa.add(k, -c);
    return aa;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly aa = a.check(b), bb = b.check(a);
    MultiPoly r(aa.vars_ ? aa.vars_ : bb.vars_);
    Key k(r.vars_ ? r.vars_->size() : 0, 0);
    for (const auto& [ka, ca] : aa.t_)
      for (const auto& [kb, cb] : bb.t_) {
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
        r.add(k, ca * cb);
      }
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
    if (ctlab::is_zero(s)) return MultiPoly(a.vars_);
    MultiPoly r = a;
    for (auto& [k, c] : r.t_) c *= s;
    return r;
  }
  friend MultiPoly operator/(const MultiPoly& a, long d) {
    if (d == 0) throw std::domain_error("MultiPoly division by zero");
    MultiPoly r = a;
    for (auto& [k, c] : r.t_) c /= d;
    return r;
  }

  Rational eval(const std::vector<Rational>& point) const {
    if (vars_ && point.size() != vars_->size())
      throw std::invalid_argument("MultiPoly::eval: wrong point arity");
    Rational acc = 0;
    for (const auto& [k, c] : t_) {
      Rational m = c;
      for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] != 0) m *= pow(point[i], k[i]);
      acc += m;
    }
    return acc;
  }

  // Leading coefficient in lexicographic key order (0 for the zero poly).
  Rational leading_coeff() const {
    if (t_.empty()) return 0;
    return t_.rbegin()->second;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
      if (!out.empty()) out += " + ";
      out += ctlab::to_string(c);
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0) continue;
        out += "*" + (*vars_)[i];
        if (k[i] != 1) out += "^" + std::to_string(k[i]);
      }
    }
    return out;
  }

 private:
  MultiPoly check(const MultiPoly& o) const {
    if (vars_ && o.vars_ && vars_ != o.vars_ && *vars_ != *o.vars_)
      throw std::invalid_argument("MultiPoly: indeterminate sets differ");
    MultiPoly r = *this;
    if (!r.vars_) r.vars_ = o.vars_;
    r.realign();
    return r;
  }
  // Scalars created without an indeterminate set carry empty keys; pad
  // them once the set is known.
  void realign() {
    if (!vars_ || t_.empty()) return;
    if (t_.begin()->first.size() == vars_->size()) return;
    std::map<Key, Rational> fixed;
    for (const auto& [k, c] : t_) {
      Key nk(vars_->size(), 0);
      std::copy(k.begin(), k.end(), nk.begin());
      fixed[nk] = c;
    }
    t_ = std::move(fixed);
  }
  void add(const Key& k, const Rational& c) {
    auto it = t_.find(k);
    if (it == t_.end()) {
      if (!ctlab::is_zero(c)) t_[k] = c;
    } else {
      it->second += c;
      if (ctlab::is_zero(it->second)) t_.erase(it);
    }
  }

  Vars vars_;
  std::map<Key, Rational> t_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

}  // namespace ctlab
