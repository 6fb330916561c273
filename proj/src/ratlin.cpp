#include "qlie/ratlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlie {

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scale(const Rational& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string vec_key(const RatVec& v) {
  std::string key;
  for (const auto& x : v) {
    key += x.get_str();
    key += ',';
  }
  return key;
}

std::string mat_key(const RatMat& m) {
  std::string key;
  for (const auto& row : m) {
    key += vec_key(row);
    key += ';';
  }
  return key;
}

RatMat mat_identity(int n) {
  RatMat m(n, RatVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat r(n, RatVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
  RatVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

bool mat_equal(const RatMat& a, const RatMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

RrefResult rref(RatMat m) {
  RrefResult res;
  size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    res.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  res.rank = static_cast<int>(r);
  res.mat = std::move(m);
  return res;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  RatMat aug(rows, RatVec(cols + 1, 0));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  RrefResult rr = rref(std::move(aug));
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivot_cols[i] == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, 0);
  for (int i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.mat[i][cols];
  return x;
}

RatMat mat_inverse(const RatMat& a) {
  size_t n = a.size();
  RatMat aug(n, RatVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  RrefResult rr = rref(std::move(aug));
  if (rr.rank < static_cast<int>(n)) throw std::invalid_argument("mat_inverse: singular matrix");
  for (size_t i = 0; i < n; ++i)
    if (rr.pivot_cols[i] != static_cast<int>(i))
      throw std::invalid_argument("mat_inverse: singular matrix");
  RatMat inv(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = rr.mat[i][n + j];
  return inv;
}

std::vector<RatVec> nullspace(const RatMat& a) {
  size_t cols = a.empty() ? 0 : a[0].size();
  RrefResult rr = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.mat[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

void SparseRankAccumulator::normalize(Row& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) v /= g;
}

bool SparseRankAccumulator::add(Row row) {
  normalize(row);
  while (!row.empty()) {
    int lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    // row <- p*row - c*pivot, cancelling the leading column exactly.
    const Row& piv = it->second;
    BigInt p = piv.front().second;
    BigInt c = row.front().second;
    Row merged;
    merged.reserve(row.size() + piv.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        merged.emplace_back(row[i].first, p * row[i].second);
        ++i;
      } else if (i == row.size() || piv[j].first < row[i].first) {
        merged.emplace_back(piv[j].first, -c * piv[j].second);
        ++j;
      } else {
        BigInt v = p * row[i].second - c * piv[j].second;
        if (v != 0) merged.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    row = std::move(merged);
    normalize(row);
  }
  return false;
}

bool SparseRankAccumulator::add_rational(const std::map<int, Rational>& row) {
  BigInt lcm = 1;
  for (const auto& [c, v] : row)
    if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  Row scaled;
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    Rational s = v * lcm;
    scaled.emplace_back(c, BigInt(s.get_num()));
  }
  return add(std::move(scaled));
}

}  // namespace qlie
