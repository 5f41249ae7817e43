#pragma once

#include "mfb/arith.hpp"
#include "mfb/graph.hpp"
#include "mfb/io.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace mfb::testing {

inline std::string fixture(const std::string& name) {
  const char* env = std::getenv("MFB_FIXTURES");
  std::string dir = env ? env : MFB_FIXTURES_DIR;
  return dir + "/" + name;
}

inline GammaC fixture_gc(const std::string& name) { return load_gammaC(fixture(name)); }
inline PlumbGraph fixture_pl(const std::string& name) { return load_plumb(fixture(name)); }

// [c1, ..., ck] = c1 - 1/(c2 - ...), evaluated from the right
inline Rational cf_oracle(const std::vector<i64>& c) {
  Rational v = c.back();
  for (int i = int(c.size()) - 2; i >= 0; --i) v = Rational(c[i]) - 1 / v;
  return v;
}

using QMatrix = std::vector<std::vector<Rational>>;

// Gaussian elimination over the rationals
inline Rational det_oracle(QMatrix m) {
  size_t n = m.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      Rational f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

inline i64 rank_oracle(QMatrix m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return i64(r);
}

// intersection matrix read straight off the graph, vertices in node order
inline QMatrix intersection_oracle(const PlumbGraph& p) {
  std::vector<int> vs = p.vertices();
  std::map<int, size_t> at;
  for (size_t i = 0; i < vs.size(); ++i) at[vs[i]] = i;
  QMatrix a(vs.size(), std::vector<Rational>(vs.size(), 0));
  for (size_t i = 0; i < vs.size(); ++i) a[i][i] = p.nodes[vs[i]].euler.value_or(0);
  for (const auto& e : p.edges) {
    if (!at.count(e.a) || !at.count(e.b)) continue;
    size_t i = at[e.a], j = at[e.b];
    if (i == j)
      a[i][i] += 2 * e.sign;
    else {
      a[i][j] += e.sign;
      a[j][i] += e.sign;
    }
  }
  return a;
}

// integer polynomials, lowest degree first
using Poly = std::vector<BigInt>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic-up-to-sign divisor; remainder must vanish
inline Poly poly_div(Poly a, const Poly& b) {
  Poly q(a.size() - b.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    BigInt c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (auto& x : a)
    if (x != 0) throw Error("poly_div: nonzero remainder");
  return q;
}

inline Poly t_k_minus_1(i64 k) {
  Poly p(size_t(k) + 1, 0);
  p[0] = -1;
  p[size_t(k)] = 1;
  return p;
}

// ∏ (t^k - 1)^{e_k} expanded, negative exponents divided out
inline Poly binomial_product(const std::vector<std::pair<i64, i64>>& factors) {
  Poly num{1}, den{1};
  for (auto [k, e] : factors)
    for (i64 i = 0; i < (e < 0 ? -e : e); ++i) (e > 0 ? num : den) = poly_mul(e > 0 ? num : den, t_k_minus_1(k));
  return poly_div(num, den);
}

// A'Campo: (t-1) ∏_v (t^{m_v} - 1)^{δ_v - 2} over a plane curve resolution, δ counting arrows
inline Poly acampo_oracle(const PlumbGraph& res) {
  std::vector<std::pair<i64, i64>> f{{1, 1}};
  for (int v : res.vertices()) f.push_back({*res.nodes[v].mult, res.degree(v) - 2});
  return binomial_product(f);
}

}  // namespace mfb::testing
