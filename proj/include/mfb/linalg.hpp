#pragma once

#include "mfb/arith.hpp"

#include <vector>

namespace mfb {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix zero_matrix(size_t rows, size_t cols);
// fraction-free elimination
i64 rank(Matrix m);
BigInt determinant(Matrix m);
// nonzero invariant factors d1 | d2 | ...
std::vector<BigInt> smith_diagonal(Matrix m);

}  // namespace mfb
