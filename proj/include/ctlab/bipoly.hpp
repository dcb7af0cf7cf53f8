#pragma once

#include <map>
#include <string>
#include <utility>

#include "ctlab/rational.hpp"

namespace ctlab {

// Sparse polynomial over Q in the two formal exponents u, v.
class BiPoly {
 public:
  using Key = std::pair<long, long>;  // (deg_u, deg_v)

  BiPoly() = default;
  BiPoly(long x) { if (x != 0) t_[{0, 0}] = Rational(x); }
  BiPoly(const Rational& x) { if (!ctlab::is_zero(x)) t_[{0, 0}] = x; }
  static BiPoly var_u() { BiPoly p; p.t_[{1, 0}] = 1; return p; }
  static BiPoly var_v() { BiPoly p; p.t_[{0, 1}] = 1; return p; }

  bool is_zero() const { return t_.empty(); }
  bool operator==(const BiPoly& o) const { return t_ == o.t_; }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.t_) r.add(k, c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.t_) r.add(k, -c);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_)
        r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }
  friend BiPoly operator/(const BiPoly& a, long d) {
    if (d == 0) throw std::domain_error("BiPoly division by zero");
    BiPoly r = a;
    for (auto& [k, c] : r.t_) c /= d;
    return r;
  }

  // Exchange the roles of u and v.
  BiPoly swapped() const {
    BiPoly r;
    for (const auto& [k, c] : t_) r.t_[{k.second, k.first}] = c;
    return r;
  }

  Rational eval(const Rational& u, const Rational& v) const {
    Rational acc = 0;
    for (const auto& [k, c] : t_)
      acc += c * pow(u, k.first) * pow(v, k.second);
    return acc;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
      if (!out.empty()) out += " + ";
      out += ctlab::to_string(c);
      if (k.first) out += "*u^" + std::to_string(k.first);
      if (k.second) out += "*v^" + std::to_string(k.second);
    }
    return out;
  }

 private:
  void add(const Key& k, const Rational& c) {
    auto it = t_.find(k);
    if (it == t_.end()) {
      if (!ctlab::is_zero(c)) t_[k] = c;
    } else {
      it->second += c;
      if (ctlab::is_zero(it->second)) t_.erase(it);
    }
  }
  std::map<Key, Rational> t_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }
inline std::string to_string(const BiPoly& p) { return p.to_string(); }

}  // namespace ctlab
