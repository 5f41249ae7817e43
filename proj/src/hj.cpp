#include "mfb/hj.hpp"

namespace mfb {

std::vector<i64> minus_cf(i64 p, i64 q) {
  if (q <= 0 || q >= p) throw ComputeError("minus_cf: need 0 < q < p");
  i64 g = gcd(p, q);
  p /= g;
  q /= g;
  std::vector<i64> out;
  while (q != 0) {
    i64 k = (p + q - 1) / q;
    out.push_back(k);
    i64 r = k * q - p;
    p = q;
    q = r;
  }
  return out;
}

Rational cf_value(const std::vector<i64>& entries) {
  if (entries.empty()) throw ComputeError("cf_value: empty entry list");
  Rational v = entries.back();
  for (int i = int(entries.size()) - 2; i >= 0; --i) {
    if (v == 0) throw ComputeError("cf_value: zero denominator");
    v = Rational(entries[i]) - 1 / v;
  }
  return v;
}

LambdaSeed hj_lambda(i64 a, i64 b, i64 c) {
  if (c < 1 || a < 0 || b < 0) throw ComputeError("hj_lambda: bad arguments");
  i64 g = gcd(a, c);
  i64 C = c / g, A = a / g;
  if (gcd(A, C) != 1) throw ComputeError("hj_lambda: no solution");
  i64 lambda = C == 1 ? 0 : mod(checked_mul(-mod(b, C), inverse_mod(A, C)), C);
  i64 m1 = exact_div(checked_add(b, checked_mul(lambda, A)), C, "hj_lambda m1");
  return {lambda, m1};
}

std::vector<i64> HJString::eulers() const {
  std::vector<i64> e;
  for (i64 k : cf) e.push_back(sign > 0 ? -k : k);
  return e;
}

HJString hj_string(const HJSpec& sp, int sign) {
  HJString h;
  h.spec = sp;
  h.sign = sign;
  i64 a = sp.a, b = sp.b, c = sp.c;
  if (c < 1) throw ComputeError("hj_string: c must be positive");
  i64 gac = gcd(a, c), gbc = gcd(b, c);
  if (a == 0 || b == 0) {
    h.degenerate = true;
  } else {
    h.lambda = hj_lambda(a, b, c).lambda;
    h.degenerate = h.lambda == 0;
  }
  if (h.degenerate) {
    h.z = {a / gac, b / gbc};
    h.x = {c / gac, 0};
    h.y = {0, c / gbc};
  } else {
    if (gcd({a, b, c}) != 1) throw ComputeError("hj_string: gcd(a, b, c) must be 1");
    i64 C = c / gac, A = a / gac;
    i64 gl = gcd(C, h.lambda);
    h.cf = minus_cf(C / gl, h.lambda / gl);
    int s = int(h.cf.size());
    auto run = [&](i64 left, i64 first) {
      std::vector<i64> v(s + 2);
      v[0] = left;
      v[1] = first;
      for (int i = 1; i <= s; ++i) v[i + 1] = checked_mul(h.cf[i - 1], v[i]) - v[i - 1];
      return v;
    };
    h.z = run(A, hj_lambda(a, b, c).m1);
    if (h.z[s + 1] != b / gbc) throw ComputeError("hj_string: z recursion does not close");
    h.x = run(C, h.lambda);
    if (h.x[s + 1] != 0) throw ComputeError("hj_string: x recursion does not close");
    i64 B2 = b / gbc, C2 = c / gbc;
    i64 lt = C2 == 1 ? 0 : mod(checked_mul(-mod(a, C2), inverse_mod(B2, C2)), C2);
    if (exact_div(checked_add(a, checked_mul(lt, B2)), C2, "hj_string y seed") != h.z[s])
      throw ComputeError("hj_string: y seed disagrees with z recursion");
    h.y.assign(s + 2, 0);
    h.y[s + 1] = C2;
    h.y[s] = lt;
    for (int i = s; i >= 1; --i) h.y[i - 1] = checked_mul(h.cf[i - 1], h.y[i]) - h.y[i + 1];
    if (h.y[0] != 0) throw ComputeError("hj_string: y recursion does not close");
  }
  h.combined.resize(h.z.size());
  for (size_t t = 0; t < h.z.size(); ++t)
    h.combined[t] = checked_add(checked_add(checked_mul(sp.i, h.x[t]), checked_mul(sp.j, h.y[t])),
                                checked_mul(sp.k, h.z[t]));
  return h;
}

}  // namespace mfb
