#include "doctest.h"
#include "support.hpp"

#include "mfb/algorithm.hpp"
#include "mfb/builders.hpp"
#include "mfb/calculus.hpp"
#include "mfb/io.hpp"

#include <algorithm>

using namespace mfb;
using namespace mfb::testing;

namespace {

std::vector<i64> sorted_eulers(const PlumbGraph& p) {
  std::vector<i64> e;
  for (int v : p.vertices()) e.push_back(*p.nodes[v].euler);
  std::sort(e.begin(), e.end());
  return e;
}

bool has_vertex(const GammaC& g, Triple t) {
  for (int v : g.vertices())
    if (g.nodes[v].triple() == t) return true;
  return false;
}

}  // namespace

TEST_CASE("assumption A: a weight-2 loop at an m=1 vertex gets a (2;n,1) vertex") {
  GammaC g;
  int v = g.add_vertex("v", 1, 4, 1);
  int a = g.add_arrow("a");
  g.add_edge(v, a, 1);
  g.add_edge(v, v, 2);
  GammaC p = prepare(g, false);
  CHECK(validate_gammaC(p).assumption_a_violations.empty());
  CHECK(p.nodes.size() == 3);
  CHECK(has_vertex(p, {2, 4, 1}));
  int w2 = 0;
  for (const auto& e : p.edges) w2 += e.w == 2;
  CHECK(w2 == 2);
}

TEST_CASE("prepare leaves a conforming graph alone") {
  GammaC g = fixture_gc("xyz3.gc");
  CHECK(write_gammaC(prepare(g, true)) == write_gammaC(g));
}

TEST_CASE("assumption B on the cylinder") {
  GammaC g = build_cylinder(fixture_pl("cyl.pl"));
  GammaC b = prepare(g, true);
  auto r = validate_gammaC(b);
  CHECK(r.ok());
  CHECK(r.assumption_b_violations.empty());
  CHECK(r.assumption_a_violations.empty());
  // (5;0,1) - (10;0,1) becomes (5;0,1) - (5;15,1) = (10;15,1) - (10;0,1)
  int v1b = b.at("v1^b0"), v2b = b.at("v2^b0");
  CHECK(b.nodes[v1b].triple() == Triple{5, 15, 1});
  CHECK(b.nodes[v2b].triple() == Triple{10, 15, 1});
  bool joined = false;
  for (const auto& e : b.edges) joined |= e.w == 2 && ((e.a == v1b && e.b == v2b) || (e.a == v2b && e.b == v1b));
  CHECK(joined);
  // the arrow side of a vanishing edge counts as (1;0,1)
  CHECK(b.nodes[b.at("a1^b4")].triple() == Triple{1, 11, 1});
}

TEST_CASE("covering data of the main algorithm on xyz3") {
  GammaC g = fixture_gc("xyz3.gc");
  auto d = covering_data_main(g);
  CHECK(d.nv[g.at("A")] == 3);
  CHECK(d.nv[g.at("B")] == 2);
  CHECK(d.nv[g.at("C")] == 1);
  CHECK(d.nv[g.at("D")] == 1);
  CHECK(d.nv[g.at("E")] == 1);
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    if (x.w == 2) CHECK(d.ne[e] == 1);
  }
  CHECK(d.ne[0] == 3);
  CHECK(d.ne[1] == 2);
}

TEST_CASE("isolated vertex with one arrow") {
  GammaC g;
  int v = g.add_vertex("v", 4, 6, 1);
  int a = g.add_arrow("a");
  g.add_edge(v, a, 1);
  CHECK(vertex_cover_index(g, v) == 2);
}

TEST_CASE("arrangement covering data is trivial") {
  auto [d, pts] = parse_arrangement(read_file(fixture("a3.arr")));
  GammaC g = build_arrangement(d, pts);
  auto cd = covering_data_main(prepare(g, true));
  for (i64 n : cd.nv) CHECK(n == 1);
  for (i64 n : cd.ne) CHECK(n == 1);
}

TEST_CASE("main algorithm on xyz3") {
  PlumbGraph G = main_algorithm(fixture_gc("xyz3.gc"));
  CHECK(sorted_eulers(G) == std::vector<i64>{-1, -1, -1, -1, -1, -1, 0, 1, 2, 2, 2});
  CHECK(G.arrows().size() == 1);
  for (const auto& v : G.nodes) CHECK(*v.mult == 1);
  CHECK(check_multiplicity_system(G).ok);
  int minus = 0;
  for (const auto& e : G.edges) minus += e.sign < 0;
  CHECK(minus == 6);
}

TEST_CASE("221 reduces to the lens space L(4,1)") {
  PlumbGraph r = reduce(strip_to_boundary(main_algorithm(fixture_gc("f221.gc"))));
  REQUIRE(r.nodes.size() == 1);
  CHECK(*r.nodes[0].euler == -4);
  CHECK(r.nodes[0].genus == 0);
  CHECK(r.edges.empty());
}

TEST_CASE("collapse of the cylinder") {
  GammaC g = prepare(build_cylinder(fixture_pl("cyl.pl")), false);
  Collapsed c = collapse_subtrees(g);
  CHECK(c.ghat.vertices().size() == 1);
  CHECK(c.ghat.arrows().size() == 2);
  CHECK(c.ghat.edges.size() == 2);
  REQUIRE(c.records.size() == 1);
  CHECK(c.records[0].n_gamma == 1);
  CHECK(c.records[0].m_gamma == 1);
  CHECK(c.records[0].g_gamma == 5);
  CHECK(c.records[0].members.size() == 5);
}

TEST_CASE("collapse without vanishing edges is the identity") {
  GammaC g = fixture_gc("xyz3.gc");
  Collapsed c = collapse_subtrees(g);
  CHECK(write_gammaC(c.ghat) == write_gammaC(g));
  // the two 0-vertices A and B are singleton records
  REQUIRE(c.records.size() == 2);
  for (const auto& r : c.records) CHECK(r.members.size() == 1);
  CHECK(write_plumb(collapsing_algorithm(g)) == write_plumb(main_algorithm(g)));
}

TEST_CASE("collapsing algorithm on the cylinder") {
  PlumbGraph h = collapsing_algorithm(build_cylinder(fixture_pl("cyl.pl")));
  CHECK(check_multiplicity_system(h).ok);
  auto vs = h.vertices();
  REQUIRE(vs.size() == 3);
  int centre = -1;
  for (int v : vs)
    if (h.nodes[v].genus) centre = v;
  REQUIRE(centre >= 0);
  CHECK(h.nodes[centre].genus == 5);
  for (int v : vs) {
    if (v == centre) continue;
    CHECK(*h.nodes[v].euler == 0);
    int arrows = 0;
    for (int e : h.incident(v)) arrows += h.nodes[h.other(e, v)].arrow;
    CHECK(arrows == 1);
  }
}

TEST_CASE("c+g agrees between the two pipelines on xyz3") {
  GammaC g = fixture_gc("xyz3.gc");
  Stats a = graph_stats(main_algorithm(g)), b = graph_stats(collapsing_algorithm(g));
  CHECK(a.c + a.g_sum == 1);
  CHECK(b.c + b.g_sum == 1);
}

TEST_CASE("G1 of xyz3") {
  PlumbGraph g1 = extract_g1(fixture_gc("xyz3.gc"), G1Mode::resolution);
  auto vs = g1.vertices();
  REQUIRE(vs.size() == 1);
  CHECK(*g1.nodes[vs[0]].euler == -1);
  CHECK(*g1.nodes[vs[0]].mult == 1);
  std::vector<i64> am;
  for (int a : g1.arrows()) am.push_back(*g1.nodes[a].mult);
  std::sort(am.begin(), am.end());
  CHECK(am == std::vector<i64>{0, 0, 1});
}

TEST_CASE("G1 modes of xyz3") {
  PlumbGraph b = extract_g1(fixture_gc("xyz3.gc"), G1Mode::boundary);
  CHECK(b.arrows().size() == 1);
  CHECK(b.dashes.size() == 2);
  PlumbGraph m = extract_g1(fixture_gc("xyz3.gc"), G1Mode::boundary_minus_vg);
  CHECK(m.arrows().empty());
  CHECK(m.dashes.size() == 3);
}

TEST_CASE("G1 of 221") {
  PlumbGraph g1 = extract_g1(fixture_gc("f221.gc"), G1Mode::resolution);
  REQUIRE(g1.vertices().size() == 2);
  int t = g1.at("T@0"), s = g1.at("S@0");
  CHECK(*g1.nodes[t].euler == -1);
  CHECK(*g1.nodes[t].mult == 2);
  CHECK(*g1.nodes[s].euler == -2);
  CHECK(*g1.nodes[s].mult == 1);
  std::vector<i64> am;
  for (int a : g1.arrows()) am.push_back(*g1.nodes[a].mult);
  std::sort(am.begin(), am.end());
  CHECK(am == std::vector<i64>{0, 1});
}

TEST_CASE("G1 of the cylinder is a pair of double arrows") {
  PlumbGraph g1 = extract_g1(build_cylinder(fixture_pl("cyl.pl")), G1Mode::resolution);
  auto comps = g1.components();
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) {
    int arrows = 0;
    for (int v : c) arrows += g1.nodes[v].arrow;
    CHECK(arrows == 2);
  }
}

TEST_CASE("G2 of xyz3 reduces to the double dash-arrow") {
  auto g2 = extract_g2(fixture_gc("xyz3.gc"));
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].dashes.size() == 2);
  PlumbGraph r = reduce(g2[0]);
  REQUIRE(r.nodes.size() == 1);
  CHECK(r.dashes.size() == 2);
  CHECK(r.edges.empty());
}

TEST_CASE("G2 of 221") {
  auto g2 = extract_g2(fixture_gc("f221.gc"));
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].dashes.size() == 1);
  std::vector<i64> e;
  for (int v : g2[0].vertices())
    if (g2[0].nodes[v].euler) e.push_back(*g2[0].nodes[v].euler);
  std::sort(e.begin(), e.end());
  CHECK(e == std::vector<i64>{-2, -2, -1});
}

TEST_CASE("transversal data") {
  auto x = transversal_data(fixture_gc("xyz3.gc"));
  REQUIRE(x.size() == 1);
  CHECK(x[0].d == 1);
  CHECK(x[0].cutting_edges.size() == 2);
  CHECK(x[0].d_e == std::vector<i64>{1, 1});
  CHECK(x[0].n_branches == 2);
  CHECK(x[0].gluing_tori == 2);

  auto y = transversal_data(fixture_gc("f221.gc"));
  REQUIRE(y.size() == 1);
  CHECK(y[0].d == 1);
  CHECK(y[0].d_e == std::vector<i64>{2});
  CHECK(y[0].n_branches == 2);
  CHECK(y[0].gluing_tori == 1);

  auto z = transversal_data(fixture_gc("nu2.gc"));
  REQUIRE(z.size() == 2);
  for (const auto& b : z) {
    CHECK(b.cutting_edges.size() == 1);
    CHECK(b.d == 1);
    CHECK(b.d_e == std::vector<i64>{2});
  }
}
