#include "mfb/linalg.hpp"

#include <algorithm>
#include <utility>

namespace mfb {

Matrix zero_matrix(size_t rows, size_t cols) { return Matrix(rows, std::vector<BigInt>(cols, 0)); }

namespace {

struct Echelon {
  Matrix u;
  std::vector<size_t> cols;
  int sign = 1;
};

// row echelon form by unimodular row operations (extended Euclid on pairs of rows)
Echelon echelon(Matrix m) {
  size_t R = m.size(), C = R ? m[0].size() : 0;
  Echelon e;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t piv = r;
    while (piv < R && m[piv][c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      e.sign = -e.sign;
    }
    for (size_t i = r + 1; i < R; ++i) {
      if (m[i][c] == 0) continue;
      BigInt a = m[r][c], b = m[i][c];
      // x a + y b = g, rows become (x, y; -b/g, a/g) applied to (row r, row i)
      BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a, bb = b;
      while (bb != 0) {
        BigInt q = aa / bb, t = aa - q * bb;
        aa = bb;
        bb = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
      }
      BigInt g = aa, ag = a / g, bg = b / g;
      for (size_t j = c; j < C; ++j) {
        const BigInt &p = m[r][j], &q = m[i][j];
        if (p == 0 && q == 0) continue;
        BigInt top = x0 * p + y0 * q, bottom = ag * q - bg * p;
        m[r][j] = std::move(top);
        m[i][j] = std::move(bottom);
      }
    }
    e.cols.push_back(c);
    ++r;
  }
  m.resize(r);
  e.u = std::move(m);
  return e;
}

BigInt reduce_mod(const BigInt& x, const BigInt& n) {
  BigInt r = x % n;
  if (r < 0) r += n;
  if (2 * r > n) r -= n;
  return r;
}

}  // namespace

i64 rank(Matrix m) { return i64(echelon(std::move(m)).cols.size()); }

BigInt determinant(Matrix m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Echelon e = echelon(std::move(m));
  if (e.cols.size() < n) return 0;
  BigInt d = e.sign;
  for (size_t i = 0; i < n; ++i) d *= e.u[i][i];
  return d;
}

// echelon form first, then elimination modulo N = |product of its pivots|, a maximal minor the factors divide
std::vector<BigInt> smith_diagonal(Matrix m0) {
  Echelon e = echelon(std::move(m0));
  size_t rk = e.cols.size();
  if (rk == 0) return {};
  BigInt N = 1;
  for (size_t i = 0; i < rk; ++i) N *= e.u[i][e.cols[i]];
  N = abs(N);
  if (N == 1) return std::vector<BigInt>(rk, BigInt(1));
  Matrix& m = e.u;
  size_t R = m.size(), C = m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = reduce_mod(x, N);
  std::vector<BigInt> diag;
  size_t t = 0;
  while (t < R && t < C) {
    size_t pi = R, pj = C;
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j)
        if (m[i][j] != 0 && (pi == R || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == R) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < R; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (size_t j = t; j < C; ++j) m[i][j] = reduce_mod(m[i][j] - q * m[t][j], N);
        if (m[i][t] != 0) {
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < C; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (size_t i = t; i < R; ++i) m[i][j] = reduce_mod(m[i][j] - q * m[i][t], N);
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (size_t i = t + 1; i < R && clean; ++i)
        for (size_t j = t + 1; j < C; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (size_t k = t; k < C; ++k) m[t][k] = reduce_mod(m[t][k] + m[i][k], N);
            clean = false;
            break;
          }
    }
    diag.push_back(m[t][t]);
    ++t;
  }
  diag.resize(rk, BigInt(0));
  for (auto& d : diag) d = d == 0 ? N : BigInt(gcd(d, N));
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace mfb
