#include "doctest.h"
#include "support.hpp"

#include "mfb/algorithm.hpp"
#include "mfb/builders.hpp"
#include "mfb/calculus.hpp"
#include "mfb/invariants.hpp"

#include <algorithm>

using namespace mfb;
using namespace mfb::testing;

namespace {

PlumbGraph chain(const std::vector<i64>& es, int sign = 1) {
  PlumbGraph p;
  for (size_t i = 0; i < es.size(); ++i) {
    p.add_vertex("c" + std::to_string(i), es[i]);
    if (i) p.add_edge(int(i) - 1, int(i), sign);
  }
  return p;
}

std::vector<i64> chain_eulers(const PlumbGraph& p) {
  std::vector<i64> e;
  for (int v : p.vertices()) e.push_back(*p.nodes[v].euler);
  return e;
}

}  // namespace

TEST_CASE("R0a flips the non-loop edges at a vertex") {
  PlumbGraph p = chain({-2, -2, -2});
  int v = p.add_vertex("l", -1);
  p.add_edge(1, v, 1);
  p.add_edge(1, 1, -1);
  PlumbGraph q = r0a(p, 1);
  for (size_t e = 0; e < q.edges.size(); ++e)
    CHECK(q.edges[e].sign == (q.edges[e].loop() ? -1 : -p.edges[e].sign));
  CHECK(invariant_signature(q) == invariant_signature(p));
}

TEST_CASE("R1 on a leaf") {
  PlumbGraph p = chain({-2, 1});
  PlumbGraph q = r1_blowdown(p, 1);
  REQUIRE(q.nodes.size() == 1);
  CHECK(*q.nodes[0].euler == -3);
}

TEST_CASE("R1 on a chain vertex joins its neighbours") {
  PlumbGraph p = chain({-2, -1, -3});
  p.edges[1].sign = -1;
  PlumbGraph q = r1_blowdown(p, 1);
  REQUIRE(q.nodes.size() == 2);
  CHECK(chain_eulers(q) == std::vector<i64>{-1, -2});
  REQUIRE(q.edges.size() == 1);
  // ε0 = -ε ε1 ε2 with ε = -1, ε1 = +, ε2 = -
  CHECK(q.edges[0].sign == -1);
  CHECK(invariant_signature(q) == invariant_signature(p));
}

TEST_CASE("R1 on a vertex doubly joined to one neighbour leaves a loop") {
  PlumbGraph p;
  p.add_vertex("a", -4);
  p.add_vertex("b", 1);
  p.add_edge(0, 1, 1);
  p.add_edge(0, 1, 1);
  PlumbGraph q = r1_blowdown(p, 1);
  REQUIRE(q.nodes.size() == 1);
  CHECK(*q.nodes[0].euler == -6);
  REQUIRE(q.edges.size() == 1);
  CHECK(q.edges[0].loop());
  CHECK(q.edges[0].sign == -1);
  CHECK(invariant_signature(q) == invariant_signature(p));
}

TEST_CASE("R1 refusals") {
  PlumbGraph p = chain({-1, -2});
  p.nodes[0].genus = 1;
  CHECK_FALSE(r1_failure(p, 0).empty());
  PlumbGraph q = chain({-2, -2});
  CHECK_FALSE(r1_failure(q, 0).empty());
  PlumbGraph a;
  a.add_vertex("v", -1);
  a.add_arrow("x");
  a.add_edge(0, 1, 1);
  CHECK_FALSE(r1_failure(a, 0).empty());
  CHECK_THROWS_AS(r1_blowdown(a, 0), ComputeError);
}

TEST_CASE("R3 absorbs a 0-chain vertex") {
  PlumbGraph p = chain({-2, 0, -3});
  p.nodes[0].genus = 1;
  p.nodes[2].genus = 2;
  PlumbGraph q = r3_absorb(p, 1);
  REQUIRE(q.vertices().size() == 1);
  CHECK(*q.nodes[0].euler == -5);
  CHECK(q.nodes[0].genus == 3);
  CHECK(invariant_signature(q) == invariant_signature(p));
}

TEST_CASE("R3 between two node clusters merges them") {
  PlumbGraph p;
  int a = p.add_vertex("a", -1);
  int z = p.add_vertex("z", 0);
  int b = p.add_vertex("b", -1);
  for (int i = 0; i < 3; ++i) {
    int l = p.add_vertex("la" + std::to_string(i), -2);
    p.add_edge(a, l, 1);
    int m = p.add_vertex("lb" + std::to_string(i), -3);
    p.add_edge(b, m, 1);
  }
  p.add_edge(a, z, 1);
  p.add_edge(z, b, 1);
  PlumbGraph q = r3_absorb(p, z);
  CHECK(q.vertices().size() == p.vertices().size() - 2);
  int hub = q.find("a");
  REQUIRE(hub >= 0);
  CHECK(q.degree(hub) == 6);
  CHECK(invariant_signature(q) == invariant_signature(p));
}

TEST_CASE("R5 absorbs an oriented handle") {
  PlumbGraph p;
  p.add_vertex("w", 3);
  p.add_vertex("z", 0);
  p.add_edge(0, 1, 1);
  p.add_edge(0, 1, -1);
  PlumbGraph q = r5_handle(p, 1);
  REQUIRE(q.nodes.size() == 1);
  CHECK(*q.nodes[0].euler == 3);
  CHECK(q.nodes[0].genus == 1);
  CHECK(invariant_signature(q) == invariant_signature(p));
  p.edges[1].sign = 1;
  CHECK_FALSE(r5_failure(p, 1).empty());
}

TEST_CASE("R8 moves a dash-arrow across its only edge") {
  PlumbGraph p = chain({-2, -3});
  p.add_dash("d", 0);
  PlumbGraph q = r8_annulus(p, 0);
  REQUIRE(q.nodes.size() == 1);
  REQUIRE(q.dashes.size() == 1);
  CHECK(q.dashes[0].at == 0);
  CHECK_FALSE(q.nodes[0].euler.has_value());
}

TEST_CASE("R6 splits off a 0-leaf and its neighbour") {
  PlumbGraph p = chain({0, -3, -2});
  p.nodes[1].genus = 1;
  PlumbGraph q = r6_naive(p, 0);
  auto st = graph_stats(q, true);
  CHECK(st.n_W == 3);
  CHECK(q.find("c2") >= 0);
  auto zeros = 0;
  for (const auto& v : q.nodes) zeros += v.id.find('~') != std::string::npos && *v.euler == 0;
  CHECK(zeros == 2);
  CHECK(invariant_signature(q).h1rank == invariant_signature(p).h1rank);
  CHECK_FALSE(r6_failure(chain({-1, -3}), 0).empty());
}

TEST_CASE("split_all on a star of 0-leaves leaves S2xS1 summands") {
  PlumbGraph p;
  int c = p.add_vertex("c", 1);
  for (int i = 0; i < 4; ++i) {
    int v = p.add_vertex("l" + std::to_string(i), 0);
    p.add_edge(c, v, 1);
  }
  PlumbGraph q = split_all(p);
  CHECK(q.edges.empty());
  CHECK(q.nodes.size() == 3);
  for (const auto& v : q.nodes) CHECK(*v.euler == 0);
  CHECK(invariant_signature(q).h1rank == 3);
  CHECK(invariant_signature(p).h1rank == 3);
}

TEST_CASE("reduce on xyz3 ends in a -4 vertex with a negative loop") {
  PlumbGraph r = reduce(strip_to_boundary(main_algorithm(fixture_gc("xyz3.gc"))));
  REQUIRE(r.nodes.size() == 1);
  CHECK(*r.nodes[0].euler == -4);
  REQUIRE(r.edges.size() == 1);
  CHECK(r.edges[0].loop());
  CHECK(r.edges[0].sign == -1);
  auto s = invariant_signature(r);
  CHECK(s.cg == 1);
  CHECK(s.h1rank == 1);
  // A = [-4 - 2]
  CHECK(s.torsion == std::vector<BigInt>{6});
}

TEST_CASE("reduce fixes a reduced graph") {
  PlumbGraph p = chain({-2, -8, -2});
  auto rr = reduce_traced(p);
  CHECK(rr.steps.empty());
  CHECK(write_plumb(rr.graph) == write_plumb(p));
}

TEST_CASE("reduce without R5 keeps the handle") {
  PlumbGraph p;
  p.add_vertex("w", 3);
  p.add_vertex("z", 0);
  p.add_edge(0, 1, 1);
  p.add_edge(0, 1, -1);
  CHECK(reduce(p, false).nodes.size() == 2);
  CHECK(reduce(p, true).nodes.size() == 1);
}

TEST_CASE("lens normal form") {
  PlumbGraph q = normal_form(chain({3, 2, 2, 2, 2, 2, 3}, -1));
  CHECK(chain_eulers(q) == std::vector<i64>{-2, -8, -2});
  CHECK(chain_eulers(normal_form(chain({-2, -8, -2}))) == std::vector<i64>{-2, -8, -2});
  CHECK(chain_eulers(normal_form(chain({5}))) == std::vector<i64>{-2, -2, -2, -2});
  CHECK(chain_eulers(normal_form(chain({0}))) == std::vector<i64>{0});
  CHECK(normal_form(chain({-1})).nodes.empty());
}

TEST_CASE("Seifert normal form keeps the orbifold Euler number") {
  PlumbGraph x = build_xayb(0, 4, 3, 7);
  PlumbGraph n = normal_form(x);
  CHECK(n.nodes.size() == 17);
  CHECK(orbifold_euler(n) == Rational(4, 21));
  CHECK(invariant_signature(n) == invariant_signature(x));
  int centre = n.find("c");
  REQUIRE(centre >= 0);
  CHECK(*n.nodes[centre].euler == -4);
  for (const auto& v : n.nodes) CHECK(*v.euler <= (v.id == "c" ? -4 : -2));
}

TEST_CASE("normal form refusals") {
  PlumbGraph p = chain({-2, -2});
  p.add_edge(0, 1, 1);
  CHECK_THROWS_AS(normal_form(p), ComputeError);
  PlumbGraph a = chain({-2});
  a.add_arrow("x");
  a.add_edge(0, 1, 1);
  CHECK_THROWS_AS(normal_form(a), ComputeError);
}

TEST_CASE("isomorphism test") {
  PlumbGraph a = chain({-2, -3, -4});
  PlumbGraph b = chain({-4, -3, -2});
  CHECK(isomorphic(a, b));
  PlumbGraph c = chain({-4, -3, -2}, -1);
  CHECK_FALSE(isomorphic(a, c));
  CHECK(isomorphic(a, c, true));
  CHECK_FALSE(isomorphic(a, chain({-2, -4, -3})));
}

TEST_CASE("invariant signature of S2xS1") {
  PlumbGraph p = chain({0});
  auto s = invariant_signature(p);
  CHECK(s.cg == 0);
  CHECK(s.h1rank == 1);
  CHECK(s.det_abs == 1);
}
