#include "mfb/arith.hpp"

#include <cstdlib>
#include <numeric>

namespace mfb {

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 gcd(std::initializer_list<i64> xs) {
  i64 g = 0;
  for (i64 x : xs) g = std::gcd(g, x);
  return g;
}

i64 gcd_all(const std::vector<i64>& xs) {
  i64 g = 0;
  for (i64 x : xs) g = std::gcd(g, x);
  return g;
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw ComputeError("integer overflow in addition");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ComputeError("integer overflow in multiplication");
  return r;
}

i64 exact_div(i64 a, i64 b, const char* what) {
  if (b == 0) throw ComputeError(std::string("division by zero: ") + what);
  if (a % b != 0)
    throw ComputeError(std::string("non-divisible: ") + what + " (" + std::to_string(a) + "/" +
                       std::to_string(b) + ")");
  return a / b;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 inverse_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw ComputeError("no modular inverse");
  return mod(s0, m);
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> lo, hi;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

i64 euler_phi(i64 n) {
  i64 r = n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

int moebius(i64 n) {
  int s = 1;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    s = -s;
  }
  if (n > 1) s = -s;
  return s;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  auto k = s.find('/');
  if (k == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, k)), BigInt(s.substr(k + 1)));
}

std::vector<i64> hirzebruch_cf(i64 p, i64 q) {
  if (p <= 0 || q <= 0) throw ValidationError("continued fraction needs positive p, q");
  std::vector<i64> cf;
  while (q != 0) {
    i64 c = (p + q - 1) / q;
    cf.push_back(c);
    i64 r = c * q - p;
    p = q;
    q = r;
  }
  return cf;
}

}  // namespace mfb
