#pragma once

#include "mfb/arith.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mfb {

// ∏_d Φ_d(t)^{e_d}
class CycloPoly {
 public:
  std::map<i64, i64> exps;

  static CycloPoly one() { return {}; }
  // (t^k - 1)^power
  static CycloPoly tk(i64 k, i64 power = 1);

  CycloPoly& operator*=(const CycloPoly& o);
  CycloPoly& operator/=(const CycloPoly& o);
  CycloPoly pow(i64 k) const;
  friend CycloPoly operator*(CycloPoly a, const CycloPoly& b) { return a *= b; }
  friend CycloPoly operator/(CycloPoly a, const CycloPoly& b) { return a /= b; }
  bool operator==(const CycloPoly& o) const { return exps == o.exps; }

  i64 degree() const;
  bool is_polynomial() const;
  i64 exponent(i64 d) const;
  // exponents a_k of the unique expression ∏ (t^k-1)^{a_k}
  std::map<i64, i64> binomial_exponents() const;
  // coefficients, lowest degree first
  std::vector<BigInt> expand() const;
  // "(t^3-1)^4 (t-1)^7", denominators after " / "
  std::string str() const;
  std::string cyclotomic_str() const;
};

std::vector<BigInt> cyclotomic_coeffs(i64 d);
CycloPoly parse_cyclo(const std::string& s);

// e^{2πi p/q} with 0 <= p < q, gcd(p,q) = 1
struct Root {
  i64 p = 0, q = 1;
  static Root make(i64 p, i64 q);
  auto operator<=>(const Root&) const = default;
  std::string str() const;
};

class BiDivisor {
 public:
  std::map<std::pair<Root, Root>, i64> terms;

  void add(Root a, Root b, i64 k = 1);
  BiDivisor& operator+=(const BiDivisor& o);
  BiDivisor scaled(i64 k) const;
  friend BiDivisor operator+(BiDivisor a, const BiDivisor& b) { return a += b; }
  bool operator==(const BiDivisor& o) const;
  i64 total() const;
  std::string str() const;

  CycloPoly project_hor() const;
  CycloPoly project_ver() const;
  // first coordinate restricted to the pairs with second coordinate 1
  CycloPoly project_hor_on_ver1() const;
};

BiDivisor lambda_div(i64 m, i64 n, i64 nu);
BiDivisor xi_d(const BiDivisor& div, i64 d);
// (λ,α) ↦ (λ,α^d), integral push-forward
BiDivisor omega_d(const BiDivisor& div, i64 d);

}  // namespace mfb
