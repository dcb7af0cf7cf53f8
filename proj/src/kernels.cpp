#include "ctlab/kernels.hpp"

#include <map>

namespace ctlab {

std::string to_string(KernelFamily f) {
  switch (f) {
    case KernelFamily::Dyson: return "dyson";
    case KernelFamily::Morris: return "morris";
    case KernelFamily::MorrisTau: return "morris-tau";
    case KernelFamily::LogDyson: return "log-dyson";
    case KernelFamily::LogMorris: return "log-morris";
    case KernelFamily::AmLog: return "am-log";
    case KernelFamily::ComplexMorris: return "complex-morris";
    case KernelFamily::ComplexDyson: return "complex-dyson";
    case KernelFamily::G2Equal: return "g2-equal";
    case KernelFamily::G2Hz: return "g2-hz";
    case KernelFamily::G2Complex: return "g2-complex";
    case KernelFamily::G2LogLong: return "g2-log-long";
    case KernelFamily::G2LogShort: return "g2-log-short";
    case KernelFamily::Bc: return "bc";
    case KernelFamily::BcSigmaTau: return "bc-sigma-tau";
    case KernelFamily::BcComplex: return "bc-complex";
  }
  throw std::logic_error("unreachable");
}

KernelFamily kernel_family_from_string(const std::string& id) {
  static const std::map<std::string, KernelFamily> table = {
      {"dyson", KernelFamily::Dyson},
      {"morris", KernelFamily::Morris},
      {"morris-tau", KernelFamily::MorrisTau},
      {"log-dyson", KernelFamily::LogDyson},
      {"log-morris", KernelFamily::LogMorris},
      {"am-log", KernelFamily::AmLog},
      {"complex-morris", KernelFamily::ComplexMorris},
      {"complex-dyson", KernelFamily::ComplexDyson},
      {"g2-equal", KernelFamily::G2Equal},
      {"g2-hz", KernelFamily::G2Hz},
      {"g2-complex", KernelFamily::G2Complex},
      {"g2-log-long", KernelFamily::G2LogLong},
      {"g2-log-short", KernelFamily::G2LogShort},
      {"bc", KernelFamily::Bc},
      {"bc-sigma-tau", KernelFamily::BcSigmaTau},
      {"bc-complex", KernelFamily::BcComplex},
  };
  auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown kernel family: " + id);
  return it->second;
}

namespace {

std::vector<std::string> x_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

ExponentVector mono(std::size_t n, std::initializer_list<std::pair<int, int>> exps) {
  ExponentVector e(n);
  for (auto [idx, val] : exps) e[idx] = val;
  return e;
}

FactorSpec int_power(ExponentVector m, long e) {
  FactorSpec f;
  f.monomial = m;
  f.kind = FactorKind::IntegerPower;
  f.int_exponent = e;
  return f;
}

FactorSpec log_spec(ExponentVector m) {
  FactorSpec f;
  f.monomial = m;
  f.kind = FactorKind::Logarithm;
  f.order = -1;  // inferred during assembly
  return f;
}

// (1 - M)^u-or-v with u either fixed (rational/integer) or formal.
// Returns whether the factor is truncated.
bool push_exponent_factor(std::vector<FactorSpec>& specs, ExponentVector m,
                          const std::optional<Rational>& value, bool is_u,
                          long order) {
  FactorSpec f;
  f.monomial = m;
  if (value) {
    if (is_integer(*value) && sgn(*value) >= 0) {
      f.kind = FactorKind::IntegerPower;
      f.int_exponent = value->get_num().get_si();
      specs.push_back(f);
      return false;
    }
    if (order < 0)
      throw std::invalid_argument(
          "kernel: non-integer exponent needs a truncation order");
    f.kind = FactorKind::FixedExponent;
    f.fixed_exponent = *value;
    f.order = order;
    specs.push_back(f);
    return true;
  }
  if (order < 0)
    throw std::invalid_argument("kernel: formal exponent needs a truncation order");
  f.kind = is_u ? FactorKind::FormalU : FactorKind::FormalV;
  f.order = order;
  specs.push_back(f);
  return true;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// the six long and six short G2 root monomials in (x, y, z)
const std::initializer_list<std::initializer_list<std::pair<int, int>>> kG2Long = {
    {{0, 2}, {1, -1}, {2, -1}},   // x^2/yz
    {{0, -1}, {1, 2}, {2, -1}},   // y^2/xz
    {{0, -1}, {1, -1}, {2, 2}},   // z^2/xy
    {{0, -2}, {1, 1}, {2, 1}},    // yz/x^2
    {{0, 1}, {1, -2}, {2, 1}},    // xz/y^2
    {{0, 1}, {1, 1}, {2, -2}},    // xy/z^2
};
const std::initializer_list<std::initializer_list<std::pair<int, int>>> kG2Short = {
    {{0, 1}, {1, -1}},  // x/y
    {{0, 1}, {2, -1}},  // x/z
    {{0, -1}, {1, 1}},  // y/x
    {{1, 1}, {2, -1}},  // y/z
    {{0, -1}, {2, 1}},  // z/x
    {{1, -1}, {2, 1}},  // z/y
};

}  // namespace

KernelRecipe make_recipe(KernelFamily f, const KernelParams& p) {
  KernelRecipe r;
  const int n = p.n;

  auto ab_factors = [&](std::size_t nn) {
    for (std::size_t i = 0; i < nn; ++i) {
      if (p.a > 0) r.specs.push_back(int_power(mono(nn, {{(int)i, 1}}), p.a));
      if (p.b > 0) r.specs.push_back(int_power(mono(nn, {{(int)i, -1}}), p.b));
    }
  };
  auto ratio_factors = [&](std::size_t nn, long e) {
    // prod_{i != j} (1 - x_i/x_j)^e
    if (e <= 0) return;
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) {
        if (i == j) continue;
        r.specs.push_back(int_power(mono(nn, {{(int)i, 1}, {(int)j, -1}}), e));
      }
  };
  auto log_pairs = [&](std::size_t nn) {
    // prod_{i=1}^m log(1 - x_{2i}/x_{2i-1})
    const int m = (static_cast<int>(nn) - 1) / 2;
    for (int i = 1; i <= m; ++i)
      r.specs.push_back(log_spec(mono(nn, {{2 * i - 1, 1}, {2 * i - 2, -1}})));
  };
  auto tau_pairs = [&]() {
    // prod_{i<j} (1 - (x_i/x_j)^tau_ij)^(exponent)
    SignatureMatrix tau = tau_matrix(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        ExponentVector m = tau.at(i, j) > 0
                               ? mono(n, {{i - 1, 1}, {j - 1, -1}})
                               : mono(n, {{i - 1, -1}, {j - 1, 1}});
        if (p.u)
          r.truncated |= push_exponent_factor(r.specs, m, p.u, true, p.order);
        else if (f == KernelFamily::MorrisTau)
          r.specs.push_back(int_power(m, 2 * p.k));
        else
          r.truncated |= push_exponent_factor(r.specs, m, std::nullopt, true, p.order);
      }
  };

  switch (f) {
    case KernelFamily::Dyson: {
      require(n >= 1, "dyson: n >= 1");
      require(static_cast<int>(p.avec.size()) == n, "dyson: needs n exponents");
      r.vars = x_vars(n);
      r.prefactor = ExponentVector(n);
      for (int i = 0; i < n; ++i) {
        require(p.avec[i] >= 0, "dyson: exponents must be nonnegative");
        for (int j = 0; j < n; ++j) {
          if (i == j || p.avec[i] == 0) continue;
          r.specs.push_back(int_power(mono(n, {{i, 1}, {j, -1}}), p.avec[i]));
        }
      }
      break;
    }
    case KernelFamily::Morris: {
      require(n >= 1 && p.a >= 0 && p.b >= 0 && p.k >= 0, "morris: bad params");
      r.vars = x_vars(n);
      r.prefactor = ExponentVector(n);
      ab_factors(n);
      ratio_factors(n, p.k);
      break;
    }
    case KernelFamily::MorrisTau:
    case KernelFamily::ComplexMorris: {
      require(n >= 1 && n % 2 == 1, "tau form: n must be odd");
      require(p.a >= 0 && p.b >= 0, "tau form: bad a/b");
      r.vars = x_vars(n);
      r.prefactor = ExponentVector(n);
      ab_factors(n);
      tau_pairs();
      break;
    }
    case KernelFamily::ComplexDyson: {
      require(n >= 1 && n % 2 == 1, "complex-dyson: n must be odd");
      r.vars = x_vars(n);
      r.prefactor = ExponentVector(n);
      tau_pairs();
      break;
    }
    case KernelFamily::LogDyson:
    case KernelFamily::LogMorris: {
      require(n >= 3 && n % 2 == 1, "log kernel: n must be odd >= 3");
      require(p.k >= 0, "log kernel: k >= 0");
      r.vars = x_vars(n);
      r.has_delta = true;
      const int m = (n - 1) / 2;
      r.prefactor = ExponentVector(n);
      for (int i = 0; i < n; ++i) r.prefactor[i] = -m;
      if (f == KernelFamily::LogMorris) ab_factors(n);
      log_pairs(n);
      ratio_factors(n, p.k);
      break;
    }
    case KernelFamily::AmLog: {
      require(n >= 3 && n % 2 == 1, "am-log: n must be odd >= 3");
      require(p.a >= 0 && p.k >= 0, "am-log: bad params");
      r.vars = x_vars(n);
      r.has_delta = true;
      r.prefactor = ExponentVector(n);
      for (int i = 0; i < n; ++i)
        r.prefactor[i] = static_cast<int32_t>(2 - (p.k + 1) * (n + 1));
      for (int i = 0; i < n; ++i)
        if (p.a > 0) r.specs.push_back(int_power(mono(n, {{i, 1}}), p.a));
      // Log pairs oriented so the identity holds with the printed
      // positive c_{3,k}; the other orientation flips the value by
      // (-1)^m against this Vandermonde convention.
      for (int i = 1; i <= (n - 1) / 2; ++i)
        r.specs.push_back(log_spec(mono(n, {{2 * i - 2, 1}, {2 * i - 1, -1}})));
      ratio_factors(n, p.k);
      break;
    }
    case KernelFamily::G2Equal:
    case KernelFamily::G2Hz: {
      long k = p.k;
      long m = (f == KernelFamily::G2Equal) ? p.k : p.m;
      require(k >= 0 && m >= 0, "g2: bad params");
      r.vars = {"x", "y", "z"};
      r.prefactor = ExponentVector(3);
      for (auto spec : kG2Long)
        if (k > 0) r.specs.push_back(int_power(mono(3, spec), k));
      for (auto spec : kG2Short)
        if (m > 0) r.specs.push_back(int_power(mono(3, spec), m));
      break;
    }
    case KernelFamily::G2Complex: {
      r.vars = {"x", "y", "z"};
      r.prefactor = ExponentVector(3);
      // (1 - yz/x^2)^u (1 - xz/y^2)^u (1 - xy/z^2)^u
      for (auto spec : {mono(3, {{0, -2}, {1, 1}, {2, 1}}),
                        mono(3, {{0, 1}, {1, -2}, {2, 1}}),
                        mono(3, {{0, 1}, {1, 1}, {2, -2}})})
        r.truncated |= push_exponent_factor(r.specs, spec, p.u, true, p.order);
      // (1 - x/y)^v (1 - y/z)^v (1 - z/x)^v
      for (auto spec : {mono(3, {{0, 1}, {1, -1}}), mono(3, {{1, 1}, {2, -1}}),
                        mono(3, {{0, -1}, {2, 1}})})
        r.truncated |= push_exponent_factor(r.specs, spec, p.v, false, p.order);
      break;
    }
    case KernelFamily::G2LogLong:
    case KernelFamily::G2LogShort: {
      require(p.k >= 0 && p.m >= 0, "g2 log: bad params");
      r.vars = {"x", "y", "z"};
      if (f == KernelFamily::G2LogLong) {
        // z^2/(xy) (1-x^2/yz)(1-y^2/xz)(1-xy/z^2) log(1-y^2/xz)
        r.prefactor = mono(3, {{0, -1}, {1, -1}, {2, 2}});
        r.specs.push_back(int_power(mono(3, {{0, 2}, {1, -1}, {2, -1}}), 1));
        r.specs.push_back(int_power(mono(3, {{0, -1}, {1, 2}, {2, -1}}), 1));
        r.specs.push_back(int_power(mono(3, {{0, 1}, {1, 1}, {2, -2}}), 1));
        r.specs.push_back(log_spec(mono(3, {{0, -1}, {1, 2}, {2, -1}})));
      } else {
        // z/x (1-x/y)(1-y/z)(1-x/z) log(1-x/y)
        r.prefactor = mono(3, {{0, -1}, {2, 1}});
        r.specs.push_back(int_power(mono(3, {{0, 1}, {1, -1}}), 1));
        r.specs.push_back(int_power(mono(3, {{1, 1}, {2, -1}}), 1));
        r.specs.push_back(int_power(mono(3, {{0, 1}, {2, -1}}), 1));
        r.specs.push_back(log_spec(mono(3, {{0, 1}, {1, -1}})));
      }
      for (auto spec : kG2Long)
        if (p.k > 0) r.specs.push_back(int_power(mono(3, spec), p.k));
      for (auto spec : kG2Short)
        if (p.m > 0) r.specs.push_back(int_power(mono(3, spec), p.m));
      break;
    }
    case KernelFamily::Bc: {
      require(n >= 1 && p.a >= 0 && p.b >= 0 && p.k >= 0, "bc: bad params");
      r.vars = x_vars(n);
      r.prefactor = ExponentVector(n);
      for (int i = 0; i < n; ++i) {
        if (p.a > 0) {
          r.specs.push_back(int_power(mono(n, {{i, 1}}), p.a));
          r.specs.push_back(int_power(mono(n, {{i, -1}}), p.a));
        }
        if (p.b > 0) {
          r.specs.push_back(int_power(mono(n, {{i, 2}}), p.b));
          r.specs.push_back(int_power(mono(n, {{i, -2}}), p.b));
        }
      }
      if (p.k > 0)
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            for (auto spec :
                 {mono(n, {{i, 1}, {j, 1}}), mono(n, {{i, 1}, {j, -1}}),
                  mono(n, {{i, -1}, {j, 1}}), mono(n, {{i, -1}, {j, -1}})})
              r.specs.push_back(int_power(spec, p.k));
      break;
    }
    case KernelFamily::BcSigmaTau:
    case KernelFamily::BcComplex: {
      require(n % 4 == 0 || n % 4 == 1, "bc sigma/tau: n must be 0 or 1 mod 4");
      require(p.a >= 0 && p.b >= 0, "bc sigma/tau: bad a/b");
      r.vars = x_vars(n);
      r.prefactor = ExponentVector(n);
      for (int i = 0; i < n; ++i) {
        if (p.a > 0) {
          r.specs.push_back(int_power(mono(n, {{i, 1}}), p.a));
          r.specs.push_back(int_power(mono(n, {{i, -1}}), p.a));
        }
        if (p.b > 0) {
          r.specs.push_back(int_power(mono(n, {{i, 2}}), p.b));
          r.specs.push_back(int_power(mono(n, {{i, -2}}), p.b));
        }
      }
      SignatureMatrix tau = (n % 2 == 1) ? tau_matrix(n) : tau_matrix_even(n);
      SignatureMatrix sigma = sigma_matrix(
          n, n % 4 == 1 ? SignatureKind::Sigma1Mod4 : SignatureKind::Sigma0Mod4);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          ExponentVector prod_m =
              sigma.at(i, j) > 0 ? mono(n, {{i - 1, 1}, {j - 1, 1}})
                                 : mono(n, {{i - 1, -1}, {j - 1, -1}});
          ExponentVector ratio_m =
              tau.at(i, j) > 0 ? mono(n, {{i - 1, 1}, {j - 1, -1}})
                               : mono(n, {{i - 1, -1}, {j - 1, 1}});
          if (p.u) {
            r.truncated |= push_exponent_factor(r.specs, prod_m, p.u, true, p.order);
            r.truncated |= push_exponent_factor(r.specs, ratio_m, p.u, true, p.order);
          } else {
            require(p.k >= 0, "bc sigma/tau: bad k");
            if (p.k > 0) {
              r.specs.push_back(int_power(prod_m, 2 * p.k));
              r.specs.push_back(int_power(ratio_m, 2 * p.k));
            }
          }
        }
      break;
    }
  }
  return r;
}

LaurentSeries<Rational> elementary_symmetric(const std::vector<std::string>& vars,
                                             long r) {
  const std::size_t n = vars.size();
  if (r < 0 || r > static_cast<long>(n))
    throw std::invalid_argument("elementary_symmetric: r out of range");
  LaurentSeries<Rational> s(vars);
  std::vector<int> subset(r);
  // iterate r-subsets of {0..n-1}
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r) {
      ExponentVector e(n);
      for (int i : subset) e[i] = 1;
      s.add_term(e, 1);
      return;
    }
    for (int i = start; i < static_cast<int>(n); ++i) {
      subset[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return s;
}

}  // namespace ctlab
