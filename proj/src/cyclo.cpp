#include "mfb/cyclo.hpp"

#include <regex>
#include <sstream>

namespace mfb {

CycloPoly CycloPoly::tk(i64 k, i64 power) {
  if (k < 1) throw ComputeError("t^k-1 needs k >= 1");
  CycloPoly p;
  if (power == 0) return p;
  for (i64 d : divisors(k)) p.exps[d] += power;
  return p;
}

CycloPoly& CycloPoly::operator*=(const CycloPoly& o) {
  for (auto [d, e] : o.exps) {
    i64 v = checked_add(exps[d], e);
    if (v == 0)
      exps.erase(d);
    else
      exps[d] = v;
  }
  return *this;
}

CycloPoly& CycloPoly::operator/=(const CycloPoly& o) { return *this *= o.pow(-1); }

CycloPoly CycloPoly::pow(i64 k) const {
  CycloPoly p;
  if (k == 0) return p;
  for (auto [d, e] : exps) p.exps[d] = checked_mul(e, k);
  return p;
}

i64 CycloPoly::degree() const {
  i64 s = 0;
  for (auto [d, e] : exps) s = checked_add(s, checked_mul(e, euler_phi(d)));
  return s;
}

bool CycloPoly::is_polynomial() const {
  for (auto [d, e] : exps)
    if (e < 0) return false;
  return true;
}

i64 CycloPoly::exponent(i64 d) const {
  auto it = exps.find(d);
  return it == exps.end() ? 0 : it->second;
}

std::map<i64, i64> CycloPoly::binomial_exponents() const {
  std::map<i64, i64> a;
  if (exps.empty()) return a;
  i64 top = exps.rbegin()->first;
  std::map<i64, i64> rest = exps;
  for (i64 k = top; k >= 1; --k) {
    i64 v = rest.count(k) ? rest[k] : 0;
    if (v == 0) continue;
    a[k] = v;
    for (i64 d : divisors(k)) rest[d] -= v;
  }
  return a;
}

namespace {

std::vector<BigInt> mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic polynomial
std::vector<BigInt> divide(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  std::vector<BigInt> q(a.size() - b.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (auto& c : a)
    if (c != 0) throw ComputeError("inexact polynomial division");
  return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_coeffs(i64 d) {
  static std::map<i64, std::vector<BigInt>> cache;
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  std::vector<BigInt> p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (i64 e : divisors(d))
    if (e != d) p = divide(p, cyclotomic_coeffs(e));
  cache[d] = p;
  return p;
}

std::vector<BigInt> CycloPoly::expand() const {
  if (!is_polynomial()) throw ComputeError("expand: negative cyclotomic exponent");
  std::vector<BigInt> r{1};
  for (auto [d, e] : exps)
    for (i64 k = 0; k < e; ++k) r = mul(r, cyclotomic_coeffs(d));
  return r;
}

std::string CycloPoly::str() const {
  auto a = binomial_exponents();
  auto factor = [](i64 k, i64 e) {
    std::string s = k == 1 ? "(t-1)" : "(t^" + std::to_string(k) + "-1)";
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  std::string num, den;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    auto& side = it->second > 0 ? num : den;
    if (!side.empty()) side += " ";
    side += factor(it->first, std::abs(it->second));
  }
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  if (den.find(' ') != std::string::npos) den = "(" + den + ")";
  return num + " / " + den;
}

std::string CycloPoly::cyclotomic_str() const {
  if (exps.empty()) return "1";
  std::ostringstream o;
  bool first = true;
  for (auto [d, e] : exps) {
    if (!first) o << " ";
    first = false;
    o << "Phi" << d;
    if (e != 1) o << "^" << e;
  }
  return o.str();
}

CycloPoly parse_cyclo(const std::string& s) {
  CycloPoly p;
  auto slash = s.find(" / ");
  auto side = [&](const std::string& part, int sign) {
    static const std::regex f(R"(\(t(\^(\d+))?-1\)(\^(\d+))?)");
    for (std::sregex_iterator it(part.begin(), part.end(), f), end; it != end; ++it) {
      i64 k = (*it)[2].matched ? std::stoll((*it)[2]) : 1;
      i64 e = (*it)[4].matched ? std::stoll((*it)[4]) : 1;
      p *= CycloPoly::tk(k, sign * e);
    }
  };
  side(s.substr(0, slash), 1);
  if (slash != std::string::npos) side(s.substr(slash + 3), -1);
  return p;
}

Root Root::make(i64 p, i64 q) {
  if (q < 1) throw ComputeError("root of unity needs q >= 1");
  p = mod(p, q);
  i64 g = gcd(p, q);
  if (g == 0) g = q;
  return {p / g, q / g};
}

std::string Root::str() const { return std::to_string(p) + "/" + std::to_string(q); }

void BiDivisor::add(Root a, Root b, i64 k) {
  if (k == 0) return;
  auto key = std::make_pair(a, b);
  i64 v = checked_add(terms[key], k);
  if (v == 0)
    terms.erase(key);
  else
    terms[key] = v;
}

BiDivisor& BiDivisor::operator+=(const BiDivisor& o) {
  for (auto& [k, v] : o.terms) add(k.first, k.second, v);
  return *this;
}

BiDivisor BiDivisor::scaled(i64 k) const {
  BiDivisor r;
  for (auto& [key, v] : terms) r.add(key.first, key.second, checked_mul(v, k));
  return r;
}

bool BiDivisor::operator==(const BiDivisor& o) const { return terms == o.terms; }

i64 BiDivisor::total() const {
  i64 s = 0;
  for (auto& [k, v] : terms) s = checked_add(s, v);
  return s;
}

std::string BiDivisor::str() const {
  std::ostringstream o;
  bool first = true;
  for (auto& [k, v] : terms) {
    if (!first) o << " ";
    first = false;
    if (v != 1) o << v << "*";
    o << "(" << k.first.str() << "," << k.second.str() << ")";
  }
  return first ? "0" : o.str();
}

namespace {

CycloPoly from_counts(const std::map<i64, i64>& by_order) {
  CycloPoly p;
  for (auto [q, c] : by_order) {
    if (c == 0) continue;
    i64 ph = euler_phi(q);
    if (c % ph) throw ComputeError("divisor projection is not Galois-stable");
    p *= CycloPoly{{{q, c / ph}}};
  }
  return p;
}

}  // namespace

CycloPoly BiDivisor::project_hor() const {
  std::map<i64, i64> c;
  for (auto& [k, v] : terms) c[k.first.q] += v;
  return from_counts(c);
}

CycloPoly BiDivisor::project_ver() const {
  std::map<i64, i64> c;
  for (auto& [k, v] : terms) c[k.second.q] += v;
  return from_counts(c);
}

CycloPoly BiDivisor::project_hor_on_ver1() const {
  std::map<i64, i64> c;
  for (auto& [k, v] : terms)
    if (k.second.p == 0) c[k.first.q] += v;
  return from_counts(c);
}

BiDivisor lambda_div(i64 m, i64 n, i64 nu) {
  if (m < 1 || nu < 1 || n < 0) throw ComputeError("lambda_div: bad weights");
  BiDivisor d;
  i64 den = checked_mul(m, nu);
  for (i64 p = 0; p < m; ++p)
    for (i64 k = 0; k < nu; ++k) d.add(Root::make(p, m), Root::make(checked_mul(-n, p) + k * m, den));
  return d;
}

BiDivisor xi_d(const BiDivisor& div, i64 d) {
  if (d < 1) throw ComputeError("xi_d: d must be positive");
  BiDivisor r;
  for (auto& [key, v] : div.terms) {
    auto [p, q] = key.second;
    for (i64 k = 0; k < d; ++k) r.add(key.first, Root::make(p + k * q, checked_mul(q, d)), v);
  }
  return r;
}

BiDivisor omega_d(const BiDivisor& div, i64 d) {
  if (d < 1) throw ComputeError("omega_d: d must be positive");
  BiDivisor r;
  for (auto& [key, v] : div.terms) r.add(key.first, Root::make(checked_mul(key.second.p, d), key.second.q), v);
  return r;
}

}  // namespace mfb
