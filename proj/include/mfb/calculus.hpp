#pragma once

#include "mfb/graph.hpp"

#include <string>
#include <vector>

namespace mfb {

// reverse the signs of the non-loop edges at v
PlumbGraph r0a(const PlumbGraph& g, int v);
PlumbGraph r1_blowdown(const PlumbGraph& g, int v);
PlumbGraph r3_absorb(const PlumbGraph& g, int v);
PlumbGraph r5_handle(const PlumbGraph& g, int v);
PlumbGraph r8_annulus(const PlumbGraph& g, int v);
// v is a 0-leaf; drops v and its neighbour, adding isolated (0,[0]) vertices for the lost genus and loops
PlumbGraph r6_naive(const PlumbGraph& g, int v);

// empty string when the rule applies at v, otherwise the failing condition
std::string r1_failure(const PlumbGraph& g, int v);
std::string r3_failure(const PlumbGraph& g, int v);
std::string r5_failure(const PlumbGraph& g, int v);
std::string r8_failure(const PlumbGraph& g, int v);
std::string r6_failure(const PlumbGraph& g, int v);

struct ReduceStep {
  std::string rule;
  std::string vertex;
};

struct ReduceResult {
  PlumbGraph graph;
  std::vector<ReduceStep> steps;
};

// priority R1, R3, R5, R8, then R6-naive on a 0-leaf whose neighbour is a genus-0 chain vertex
ReduceResult reduce_traced(const PlumbGraph& g, bool allow_r5 = true);
PlumbGraph reduce(const PlumbGraph& g, bool allow_r5 = true);
// applies R6-naive to the lowest 0-leaf until none is left
PlumbGraph split_all(const PlumbGraph& g);

// Seifert normal form of a star-shaped tree without arrows: centre b, legs with entries <= -2;
// lens spaces (genus 0, at most two legs) become a single chain with entries <= -2
PlumbGraph normal_form(const PlumbGraph& g);

struct InvariantSignature {
  i64 cg = 0;
  i64 h1rank = 0;
  i64 n_arrows = 0;
  std::vector<BigInt> torsion;
  // order of the torsion of H1, |det A| when A is nondegenerate
  BigInt det_abs = 0;
  bool operator==(const InvariantSignature&) const = default;
  std::string str() const;
};

InvariantSignature invariant_signature(const PlumbGraph& g);

// exact search on at most 12 vertices; with up_to_r0a, edge signs are compared modulo R0(a)
bool isomorphic(const PlumbGraph& a, const PlumbGraph& b, bool up_to_r0a = false);

}  // namespace mfb
