#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctlab/bigfloat.hpp"
#include "ctlab/kernels.hpp"
#include "ctlab/rational.hpp"
#include "ctlab/unipoly.hpp"

namespace ctlab {

// Exact right-hand sides, one evaluator per identity family.
Rational rhs_dyson(const std::vector<long>& avec);
Rational rhs_macdonald_equal(const std::vector<long>& degrees, long k);
Rational rhs_morris(int n, long a, long b, long k);
Rational rhs_log_dyson(int n, long k);
Rational rhs_log_morris(int n, long a, long b, long k);
Rational am_log_c3k(long k);
Rational rhs_am_log(int n, long a, long k);  // housed for n = 3 only
Rational rhs_g2_equal(long k);
Rational rhs_g2_hz(long k, long m);
Rational rhs_g2_log(long K, long M);  // G(K, M)
Rational rhs_bc(int n, long a, long b, long k);
// m-th derivative of the complex Morris right side at u = 2k+1
Rational rhs_deriv_a(int n, long a, long b, long k);
// (n - zeta)-th derivative of the complex BC right side at u = 2k+1
Rational rhs_deriv_bc(int n, long a, long b, long k);

// Dispatcher over the canonical id strings listed above; degrees for
// macdonald-equal travel in params.avec.
Rational rhs_exact(const std::string& id, const KernelParams& p);

enum class PnFamily { A, BC };

// Stored correction polynomials in s = cos^2(pi u / 2); P(1) = 1 for
// every entry. Absent entries signal the caller to fit instead.
std::optional<UniPoly> pn_poly(PnFamily fam, int n);

// Expansion of P_n(x^2(u)) in the basis {1, z_1, z_2, ...} with
// z_i = cos(i pi u); the x^m carrier is reported alongside.
struct ZBasis {
  int m = 0;
  std::vector<Rational> coeffs;
};
ZBasis z_basis(int n);

// Complex right sides at a fixed rational point. The exact path covers
// even integer u (and v), where every gamma argument is an integer.
Rational rhs_complex_exact(const std::string& id, const KernelParams& p);

struct ComplexRhs {
  BigFloat value;
  BigFloat err;  // propagated bound from the lgamma evaluations
};
ComplexRhs rhs_complex(const std::string& id, const KernelParams& p);

// prod Gamma(num_i) / prod Gamma(den_i) with sign tracking; arguments may
// be negative rationals but not poles.
ComplexRhs gamma_quotient(const std::vector<Rational>& num,
                          const std::vector<Rational>& den, mpfr_prec_t prec);

}  // namespace ctlab
