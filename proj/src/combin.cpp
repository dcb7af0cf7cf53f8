#include "ctlab/combin.hpp"

#include <json.hpp>

namespace ctlab {

int Matching::crossing_number(std::vector<int>* per_edge) const {
  const std::size_t n = edges.size();
  std::vector<int> counts(n, 0);
  int total = 0;
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = e + 1; f < n; ++f) {
      auto [i, j] = edges[e];
      auto [k, l] = edges[f];
      bool cross = (i < k && k < j && j < l) || (k < i && i < l && l < j);
      if (cross) {
        ++counts[e];
        ++counts[f];
        ++total;
      }
    }
  if (per_edge) *per_edge = std::move(counts);
  return total;
}

std::string Matching::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (auto [a, b] : edges) j.push_back({a, b});
  return j.dump();
}

namespace {

void enumerate_rec(std::vector<bool>& used, std::vector<std::pair<int, int>>& acc,
                   std::vector<Matching>& out) {
  const int n = static_cast<int>(used.size());
  int first = -1;
  for (int v = 0; v < n; ++v)
    if (!used[v]) {
      first = v;
      break;
    }
  if (first < 0) {
    out.push_back(Matching{acc});
    return;
  }
  used[first] = true;
  for (int w = first + 1; w < n; ++w) {
    if (used[w]) continue;
    used[w] = true;
    acc.emplace_back(first + 1, w + 1);
    enumerate_rec(used, acc, out);
    acc.pop_back();
    used[w] = false;
  }
  used[first] = false;
}

}  // namespace

std::vector<Matching> enumerate_matchings(int n_vertices) {
  if (n_vertices < 2 || n_vertices % 2 != 0)
    throw std::invalid_argument("enumerate_matchings: need an even vertex count >= 2");
  if (n_vertices > 16)
    throw std::invalid_argument("enumerate_matchings: vertex count > 16");
  std::vector<Matching> out;
  std::vector<bool> used(n_vertices, false);
  std::vector<std::pair<int, int>> acc;
  enumerate_rec(used, acc, out);
  return out;
}

SignatureMatrix::SignatureMatrix(int n, SignatureKind kind)
    : n_(n), kind_(kind),
      upper_(static_cast<std::size_t>(n) * (n - 1) / 2, 1) {
  if (n < 1) throw std::invalid_argument("SignatureMatrix: size must be >= 1");
}

int SignatureMatrix::upper_index(int i, int j) const {
  // strict upper triangle, row-major: (i, j) with 1 <= i < j <= n
  return (i - 1) * n_ - i * (i + 1) / 2 + j - 1;
}

int SignatureMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::out_of_range("SignatureMatrix::at");
  if (i == j) return 0;
  if (i < j) return upper_[upper_index(i, j)];
  return -upper_[upper_index(j, i)];
}

void SignatureMatrix::set_upper(int i, int j, int v) {
  if (!(1 <= i && i < j && j <= n_))
    throw std::out_of_range("SignatureMatrix::set_upper");
  if (v != 1 && v != -1)
    throw std::invalid_argument("SignatureMatrix entries are +-1");
  upper_[upper_index(i, j)] = static_cast<int8_t>(v);
}

bool SignatureMatrix::is_circulant() const {
  auto wrap = [&](int i) { return i % n_ + 1; };
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(wrap(i), wrap(j)) != at(i, j)) return false;
  return true;
}

bool SignatureMatrix::is_toeplitz() const {
  for (int i = 1; i < n_; ++i)
    for (int j = 1; j < n_; ++j)
      if (at(i + 1, j + 1) != at(i, j)) return false;
  return true;
}

bool SignatureMatrix::row_sums_vanish() const {
  for (int i = 1; i <= n_; ++i) {
    int s = 0;
    for (int j = 1; j <= n_; ++j) s += at(i, j);
    if (s != 0) return false;
  }
  return true;
}

std::string SignatureMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= n_; ++j) row.push_back(at(i, j));
    rows.push_back(row);
  }
  return rows.dump();
}

SignatureMatrix tau_matrix(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("tau_matrix: n must be odd");
  SignatureMatrix t(n, SignatureKind::Tau);
  const int m = (n - 1) / 2;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      t.set_upper(i, j, j <= m + i ? 1 : -1);
  return t;
}

SignatureMatrix tau_matrix_even(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("tau_matrix_even: n must be even");
  SignatureMatrix t(n, SignatureKind::TauEven);
  const int m = (n - 2) / 2;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      t.set_upper(i, j, j <= m + i ? 1 : -1);
  return t;
}

SignatureMatrix sigma_matrix(int n, SignatureKind kind) {
  if (kind == SignatureKind::Sigma1Mod4) {
    if (n % 4 != 1 || n < 5)
      throw std::invalid_argument("sigma_matrix: kind needs n = 1 (mod 4), n >= 5");
    SignatureMatrix s(n, kind);
    const int p = (n - 1) / 4;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        s.set_upper(i, j, (p < j - i && j - i <= 3 * p) ? -1 : 1);
    return s;
  }
  if (kind == SignatureKind::Sigma0Mod4) {
    if (n % 4 != 0)
      throw std::invalid_argument("sigma_matrix: kind needs n = 0 (mod 4)");
    SignatureMatrix s(n, kind);
    const int m = (n - 2) / 2;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        bool plus = ((i + j) % 2 == 0) || (i + j == m + 2);
        s.set_upper(i, j, plus ? 1 : -1);
      }
    return s;
  }
  throw std::invalid_argument("sigma_matrix: unsupported kind");
}

bool signature_condition(const SignatureMatrix& sigma,
                         const SignatureMatrix& tau) {
  if (sigma.size() != tau.size())
    throw std::invalid_argument("signature_condition: size mismatch");
  const int n = sigma.size();
  for (int i = 1; i <= n; ++i) {
    int s = 0;
    for (int j = i + 1; j <= n; ++j) s += sigma.at(i, j) + tau.at(i, j);
    for (int j = 1; j < i; ++j) s += sigma.at(j, i) - tau.at(j, i);
    if (s != 0) return false;
  }
  return true;
}

Rational pfaffian_elimination(SkewMatrix<Rational> a) {
  const int n = a.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  if (n == 0) return 1;

  // dense working copy, 0-based
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = a.at(i + 1, j + 1);

  Rational pf = 1;
  for (int p = 0; p < n; p += 2) {
    int q = -1;
    for (int r = p + 1; r < n; ++r)
      if (!is_zero(m[p][r])) {
        q = r;
        break;
      }
    if (q < 0) return 0;
    if (q != p + 1) {
      // simultaneous row and column swap flips the sign
      std::swap(m[q], m[p + 1]);
      for (int r = 0; r < n; ++r) std::swap(m[r][q], m[r][p + 1]);
      pf = -pf;
    }
    const Rational pivot = m[p][p + 1];
    pf *= pivot;
    for (int r = p + 2; r < n; ++r) {
      if (is_zero(m[p][r])) continue;
      Rational f = m[p][r] / pivot;
      for (int c = 0; c < n; ++c) m[r][c] -= f * m[p + 1][c];
      for (int c = 0; c < n; ++c) m[c][r] -= f * m[c][p + 1];
    }
  }
  return pf;
}

Rational determinant(const SkewMatrix<Rational>& a) {
  const int n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = a.at(i + 1, j + 1);
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(m[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace ctlab
