#pragma once

#include "mfb/algorithm.hpp"
#include "mfb/cyclo.hpp"
#include "mfb/graph.hpp"
#include "mfb/linalg.hpp"

#include <string>
#include <vector>

namespace mfb {

struct IntersectionData {
  Matrix A, I;
  std::vector<int> rows;
  i64 corankA = 0, corankAI = 0;
  std::vector<BigInt> snf;
  BigInt det_abs = 0;
  std::vector<BigInt> torsion() const;
};

// columns of I: arrowheads, then dash-arrows; absent Euler numbers on dash vertices read as 0
IntersectionData intersection_data(const PlumbGraph& p);

BiDivisor div_phi(const GammaC& g);
BiDivisor div_j(const GammaC& g, int j);
BiDivisor div_prime_j(const GammaC& g, int j);

enum class Which {
  phi_hor, phi_ver, phi_hor_on_ver1,
  j_hor, j_ver, j_hor_on_ver1,
  jprime_hor, jprime_ver, jprime_hor_on_ver1
};

Which parse_which(const std::string& s);
std::string which_name(Which w);
bool which_needs_branch(Which w);
CycloPoly charpoly(Which which, const GammaC& g, int j = 0);

enum class PhVariant { full, hat, branch, branch_hat };
CycloPoly p_h_cover(const GammaC& g, PhVariant v, int j = 0);

struct RankReport {
  i64 rank_h1_boundary = 0;
  i64 rank_h1_minus_vg = 0;
  // 1-eigenspace of the monodromy on H1(boundary): 2g(Γ_C) + c(Γ_C) + corank(A), of Ĝ when the charpoly goes through it
  i64 rank_h1_boundary_eig1 = 0;
  std::vector<i64> rank_h1_partial2j;
  i64 geneig1_phi = 0;
  std::vector<i64> geneig1_j;
  i64 jordan2_phi = 0;
  std::vector<i64> jordan2_j;
  // Γ_C-side values of the same eigenvalue-1 ranks
  i64 geneig1_phi_divisor = 0;
  std::vector<i64> geneig1_j_divisor;
  std::vector<Branch> transversal;
};

RankReport rank_report(const GammaC& g);

struct BoundaryCharpoly {
  bool exact = false;
  // exact through the collapsed graph Ĝ
  bool hat = false;
  std::string reason;
  CycloPoly poly;
  // conditional case: P = (t-1)^{N} Q(t) with the known factors below
  CycloPoly known_factor;
  CycloPoly p_h;
  i64 n_base = 0;
};

BoundaryCharpoly charpoly_boundary(const GammaC& g);

Rational orbifold_euler(const PlumbGraph& p);

struct BoundaryNumbers {
  i64 c = 0, g = 0, corankA = 0, corankAI = 0, n_arrows = 0;
  i64 h1rank() const { return 2 * g + c + corankA; }
};

BoundaryNumbers boundary_numbers(const PlumbGraph& p);

}  // namespace mfb
