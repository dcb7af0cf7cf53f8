#pragma once

#include <string>
#include <vector>

#include "ctlab/rational.hpp"

namespace ctlab {

// Dense polynomial over Q in one formal exponent, conventionally "u".
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long v) { if (v != 0) c_.assign(1, Rational(v)); }
  UniPoly(const Rational& v) { if (!ctlab::is_zero(v)) c_.assign(1, v); }
  static UniPoly var() {
    UniPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
  }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Rational(0);
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const Rational& s) {
    if (ctlab::is_zero(s)) return {};
    UniPoly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend UniPoly operator/(const UniPoly& a, long d) {
    if (d == 0) throw std::domain_error("UniPoly division by zero");
    UniPoly r = a;
    for (auto& c : r.c_) c /= d;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Drop coefficients above the cap; returns true when something nonzero
  // was discarded.
  bool truncate_degree(long cap) {
    bool dropped = false;
    while (degree() > cap) {
      if (!ctlab::is_zero(c_.back())) dropped = true;
      c_.pop_back();
    }
    trim();
    return dropped;
  }

  std::string to_string(const std::string& name = "u") const;

 private:
  void trim() {
    while (!c_.empty() && ctlab::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline std::string to_string(const UniPoly& p) { return p.to_string(); }

inline std::string UniPoly::to_string(const std::string& name) const {
  if (c_.empty()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    if (ctlab::is_zero(c_[i])) continue;
    if (!out.empty()) out += " + ";
    out += ctlab::to_string(c_[i]);
    if (i >= 1) out += "*" + name;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ctlab
