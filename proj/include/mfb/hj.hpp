#pragma once

#include "mfb/arith.hpp"

#include <vector>

namespace mfb {

// p/q = k1 - 1/(k2 - ... - 1/ks), all ki >= 2
std::vector<i64> minus_cf(i64 p, i64 q);
Rational cf_value(const std::vector<i64>& entries);

struct LambdaSeed {
  i64 lambda;
  i64 m1;
};

LambdaSeed hj_lambda(i64 a, i64 b, i64 c);

// string of x^a y^b = z^c decorated by the function x^i y^j z^k
struct HJSpec {
  i64 a = 0, b = 0, c = 1;
  i64 i = 0, j = 0, k = 0;
};

struct HJString {
  HJSpec spec;
  int sign = 1;
  bool degenerate = false;
  i64 lambda = 0;
  std::vector<i64> cf;
  // index 0 is the left arrow, index s+1 the right arrow
  std::vector<i64> z, x, y, combined;
  int length() const { return int(cf.size()); }
  // Euler numbers of the interior vertices for the chosen sign
  std::vector<i64> eulers() const;
};

HJString hj_string(const HJSpec& spec, int sign);

}  // namespace mfb
