#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfb {

using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input does not satisfy a structural axiom
struct ValidationError : Error {
  using Error::Error;
};

// computation could not be carried out
struct ComputeError : Error {
  using Error::Error;
};

i64 gcd(i64 a, i64 b);
i64 gcd(std::initializer_list<i64> xs);
i64 gcd_all(const std::vector<i64>& xs);
i64 lcm(i64 a, i64 b);

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
// exact division, throws when b does not divide a
i64 exact_div(i64 a, i64 b, const char* what);
i64 mod(i64 a, i64 m);
// inverse of a modulo m, gcd(a,m) must be 1
i64 inverse_mod(i64 a, i64 m);

std::vector<i64> divisors(i64 n);
i64 euler_phi(i64 n);
int moebius(i64 n);

// Hirzebruch continued fraction p/q = [c0, c1, ...] with c0 >= 1 and ci >= 2 afterwards
std::vector<i64> hirzebruch_cf(i64 p, i64 q);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace mfb
