#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctlab/rational.hpp"

namespace ctlab {

// Perfect matching on {1, ..., 2N}: N ordered pairs (i, j), i < j, each
// vertex used exactly once.
struct Matching {
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return 2 * static_cast<int>(edges.size()); }
  bool operator==(const Matching&) const = default;

  // Edges (i,j), (k,l) cross iff i<k<j<l or k<i<l<j. Returns the total
  // crossing number; per-edge counts optionally via out-parameter.
  int crossing_number(std::vector<int>* per_edge = nullptr) const;

  std::string to_json() const;
};

// All (2N-1)!! perfect matchings on {1, ..., n_vertices}, lexicographic.
std::vector<Matching> enumerate_matchings(int n_vertices);

enum class SignatureKind { Tau, TauEven, Sigma1Mod4, Sigma0Mod4, Custom };

// Skew-symmetric +-1 matrix; only the strict upper triangle is stored.
class SignatureMatrix {
 public:
  SignatureMatrix(int n, SignatureKind kind);

  int size() const { return n_; }
  SignatureKind kind() const { return kind_; }

  // Entry with skew extension: s(i,i) = 0, s(j,i) = -s(i,j). 1-based.
  int at(int i, int j) const;
  void set_upper(int i, int j, int v);

  bool is_circulant() const;
  bool is_toeplitz() const;
  bool row_sums_vanish() const;

  std::string to_json() const;

 private:
  int upper_index(int i, int j) const;
  int n_;
  SignatureKind kind_;
  std::vector<int8_t> upper_;
};

// tau_ij = +1 if j <= m + i else -1 (i < j), m = (n-1)/2; n odd.
SignatureMatrix tau_matrix(int n);

// Even-size variant of tau with m = (n-2)/2, used alongside the
// n = 0 (mod 4) sigma construction.
SignatureMatrix tau_matrix_even(int n);

// sigma per residue class:
//   n = 1 (mod 4), p = (n-1)/4:  sigma_ij = -1 iff p < j-i <= 3p
//   n = 0 (mod 4), m = (n-2)/2:  sigma_ij = +1 iff i+j even or i+j = m+2
SignatureMatrix sigma_matrix(int n, SignatureKind kind);

// sum_{j>i} (sigma_ij + tau_ij) + sum_{j<i} (sigma_ji - tau_ji) = 0 for
// every i.
bool signature_condition(const SignatureMatrix& sigma,
                         const SignatureMatrix& tau);

// Skew-symmetric matrix over a commutative ring C.
template <typename C>
class SkewMatrix {
 public:
  explicit SkewMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, C(0)) {
    if (n < 0) throw std::invalid_argument("SkewMatrix: negative size");
  }

  int size() const { return n_; }
  const C& at(int i, int j) const { return a_[idx(i, j)]; }

  // Sets A(i,j) = v and A(j,i) = -v; 1-based, i != j.
  void set(int i, int j, const C& v) {
    if (i == j) throw std::invalid_argument("SkewMatrix: diagonal must stay zero");
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = C(0) - v;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
  int n_;
  std::vector<C> a_;
};

// Pfaffian straight from the definition: sum over perfect matchings of
// (-1)^c(pi) prod A_ij. Works over any commutative ring; guarded to
// sizes where the (2N-1)!! enumeration stays cheap.
template <typename C>
C pfaffian_definition(const SkewMatrix<C>& a) {
  const int n = a.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  if (n == 0) return C(1);
  if (n > 12) throw std::invalid_argument("pfaffian_definition: size > 12");
  C sum(0);
  for (const Matching& pi : enumerate_matchings(n)) {
    C prod = (pi.crossing_number() & 1) ? C(0) - C(1) : C(1);
    for (auto [i, j] : pi.edges) prod = prod * a.at(i, j);
    sum = sum + prod;
  }
  return sum;
}

// Pfaffian by skew Gaussian elimination with congruence (unipotent) row
// and column updates; exact over the rationals.
Rational pfaffian_elimination(SkewMatrix<Rational> a);

// Determinant by ordinary Gaussian elimination (independent of the
// Pfaffian path; used for the Pf^2 = det cross-check).
Rational determinant(const SkewMatrix<Rational>& a);

// Q-matrix built on the tau signatures: Q_ij = tau_ij a_i a_j for
// 1 <= i < j <= n (times (x_i + x_j) in the variant), and
// Q_{i,n+1} = a_i a_{n+1} b_i. Generic in the entry ring.
template <typename C>
SkewMatrix<C> q_matrix(const std::vector<C>& a, const std::vector<C>& b,
                       const std::vector<C>* x = nullptr) {
  const int n = static_cast<int>(b.size());
  if (static_cast<int>(a.size()) != n + 1)
    throw std::invalid_argument("q_matrix: need n+1 a-values and n b-values");
  if (n % 2 != 1) throw std::invalid_argument("q_matrix: n must be odd");
  if (x && static_cast<int>(x->size()) != n)
    throw std::invalid_argument("q_matrix: X must have length n");
  SignatureMatrix tau = tau_matrix(n);
  SkewMatrix<C> q(n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      C v = a[i - 1] * a[j - 1];
      if (tau.at(i, j) < 0) v = C(0) - v;
      if (x) v = v * ((*x)[i - 1] + (*x)[j - 1]);
      q.set(i, j, v);
    }
    q.set(i, n + 1, a[i - 1] * a[n] * b[i - 1]);
  }
  return q;
}

// Closed form for Pf(Q):
//   plain:   (-1)^binom(m,2) a_1...a_{n+1} sum_i b_i
//   variant: 2^(m-1) (-1)^binom(m,2) a_1...a_{n+1}
//              sum_i b_i (x_{i+1}...x_{i+m} + x_{i+m+1}...x_{i+n-1}),
// indices cyclic mod n, m = (n-1)/2.
template <typename C>
C pf_closed_q(const std::vector<C>& a, const std::vector<C>& b,
              const std::vector<C>* x = nullptr) {
  const int n = static_cast<int>(b.size());
  if (static_cast<int>(a.size()) != n + 1)
    throw std::invalid_argument("pf_closed_q: need n+1 a-values and n b-values");
  if (n % 2 != 1) throw std::invalid_argument("pf_closed_q: n must be odd");
  const int m = (n - 1) / 2;
  C prod_a(1);
  for (const C& ai : a) prod_a = prod_a * ai;
  C sum(0);
  if (!x) {
    for (const C& bi : b) sum = sum + bi;
  } else {
    auto cyc = [&](int i) -> const C& { return (*x)[(i - 1) % n]; };
    for (int i = 1; i <= n; ++i) {
      C left(1), right(1);
      for (int t = i + 1; t <= i + m; ++t) left = left * cyc(t);
      for (int t = i + m + 1; t <= i + n - 1; ++t) right = right * cyc(t);
      sum = sum + b[i - 1] * (left + right);
    }
    for (int t = 0; t < m - 1; ++t) sum = sum + sum;  // times 2^(m-1)
  }
  C out = prod_a * sum;
  if ((m * (m - 1) / 2) % 2 != 0) out = C(0) - out;
  return out;
}

}  // namespace ctlab
