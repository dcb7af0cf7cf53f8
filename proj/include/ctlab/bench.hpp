#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctlab/closed.hpp"
#include "ctlab/hyper.hpp"
#include "ctlab/kernels.hpp"

namespace ctlab {

// One side of an identity: exact rational, numeric value, or both.
struct ClosedFormValue {
  std::optional<Rational> exact;
  std::optional<BigFloat> numeric;
  std::optional<BigFloat> err;

  static ClosedFormValue from_exact(Rational v) {
    ClosedFormValue c;
    c.exact = std::move(v);
    return c;
  }
  static ClosedFormValue from_numeric(BigFloat v, BigFloat e) {
    ClosedFormValue c;
    c.numeric = std::move(v);
    c.err = std::move(e);
    return c;
  }
};

enum class VerifyStatus { ExactEqual, WithinTolerance, Mismatch };

std::string to_string(VerifyStatus s);

struct VerifySettings {
  long trunc = 400;
  mpfr_prec_t prec = 256;
  double tol = 1e-6;
};

struct VerifyReport {
  std::string id;
  std::map<std::string, std::string> params;
  ClosedFormValue lhs, rhs;
  VerifyStatus status = VerifyStatus::Mismatch;
  double tol_used = 0;
  double tail = 0;
  double ms = 0;

  bool ok() const { return status != VerifyStatus::Mismatch; }
  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv() const;
};

// Left side through the kernel constant term, right side through the
// closed forms; exact comparison when both sides are exact, otherwise
// tolerance max(requested, 3 * tail estimate).
VerifyReport verify(const std::string& id, const KernelParams& p,
                    const VerifySettings& s = {});

// Matching-sum corollary: summing the log-dressed constant terms over
// all perfect matchings of [n+1] reproduces (-1)^binom(m,2) n times the
// consecutive-pairs instance. Exact; n in {3, 5}.
VerifyReport matching_sum_check(int n, long a, long b, long k);

// Sign law CT[f g(w; X)] = sgn(w) CT[f g(id; X)] on the log-free
// skew-symmetric kernel, for one permutation w of {1..n}.
bool sign_permutation_check(int n, long k, const std::vector<int>& w);

// f_r(a) = CT[(-1)^r e_r(X) G_ab(X)] together with the contiguous
// recursion, the binomial sum to f_0(a+1), the solved product form and
// the homogeneity reduction. All exact.
struct FrReport {
  std::vector<Rational> f;  // f_0 .. f_n
  bool recursion_ok = false;
  bool sum_ok = false;
  bool product_ok = false;
  bool homogeneity_ok = false;
  bool all_ok() const {
    return recursion_ok && sum_ok && product_ok && homogeneity_ok;
  }
};
FrReport fr_sequence(int n, long a, long b, long k);

// Residuals of the conjectural complex analogue of the recursion at a
// fixed rational u; reported, never asserted.
struct FrComplexReport {
  std::vector<Rational> f;          // truncated values
  std::vector<double> residual;     // per-r normalized residuals
  double max_tail = 0;
};
FrComplexReport fr_complex_residuals(int n, long a, long b, const Rational& u,
                                     long order);

// Fit of the correction polynomial from truncated complex-Dyson
// evaluations at the sample points; exact interpolation on floats.
struct FitResult {
  int n = 0;
  std::vector<Rational> u_samples;
  std::vector<double> s_values;
  std::vector<double> y_values;
  std::vector<double> tails;
  std::vector<double> coeffs;        // fitted, ascending degree
  std::vector<double> table_coeffs;  // stored entry, when present
  double coeff_error = 0;            // max |fitted - table|
  double heldout_residual = 0;
  bool table_available = false;
};
// n = 3 and n = 5 run at desk scale; n = 7 only with unbounded = true
// (the fit degree grows with binom(m, 2) and so does the truncation cost).
FitResult fit_pn(PnFamily fam, int n, const std::vector<Rational>& u_samples,
                 long trunc, mpfr_prec_t prec = 256, bool unbounded = false);

// Exact Lagrange interpolation (closed-loop oracle for the fitter).
std::vector<Rational> interpolate_exact(
    const std::vector<std::pair<Rational, Rational>>& points);

// Acceptance suites. Each suite returns the reports of its checks plus
// a pass flag; names follow the criterion list in the README.
struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::vector<VerifyReport> reports;
  bool pass = false;
  double ms = 0;
  std::string note;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name);

}  // namespace ctlab
