#include "property_suite.hpp"
#include "support.hpp"

#include "mfb/algorithm.hpp"
#include "mfb/builders.hpp"
#include "mfb/calculus.hpp"
#include "mfb/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mfb;
using namespace mfb::testing;

namespace {

constexpr long kBudgetMs = 5000;

// failed sub-checks of one criterion
struct Report {
  std::vector<std::string> failed;
  void expect(bool good, const std::string& what) {
    if (!good) failed.push_back(what);
  }
};

template <class T>
std::string show(const std::vector<T>& xs) {
  std::ostringstream o;
  o << "[";
  for (size_t i = 0; i < xs.size(); ++i) o << (i ? "," : "") << xs[i];
  o << "]";
  return o.str();
}

PlumbGraph boundary_of(const GammaC& g) { return strip_to_boundary(main_algorithm(prepare(g, true))); }

GammaC homogeneous(const std::string& file) {
  return build_homogeneous(parse_curve_data(read_file(fixture(file)), fixture("")));
}

std::vector<i64> eulers(const PlumbGraph& p) {
  std::vector<i64> e;
  for (int v : p.vertices()) e.push_back(p.nodes[v].euler.value_or(0));
  return e;
}

// centre (euler, genus) and the sorted legs read from the centre
std::string star_profile(const PlumbGraph& p) {
  int centre = -1;
  for (int v : p.vertices())
    if (centre < 0 || p.degree(v) > p.degree(centre)) centre = v;
  std::vector<std::vector<i64>> legs;
  for (int e : p.incident(centre)) {
    std::vector<i64> leg;
    int prev = centre, cur = p.other(e, centre);
    while (true) {
      leg.push_back(p.nodes[cur].euler.value_or(0));
      int next = -1;
      for (int f : p.incident(cur))
        if (p.other(f, cur) != prev) next = p.other(f, cur);
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    legs.push_back(leg);
  }
  std::sort(legs.begin(), legs.end());
  std::ostringstream o;
  o << p.nodes[centre].euler.value_or(0) << " g" << p.nodes[centre].genus;
  for (const auto& l : legs) o << " " << show(l);
  return o.str();
}

Report criterion1() {
  Report r;
  GammaC g = fixture_gc("f221.gc");
  PlumbGraph red = reduce(boundary_of(g));
  r.expect(red.nodes.size() == 1 && red.edges.empty() && eulers(red) == std::vector<i64>{-4} &&
               red.nodes[0].genus == 0,
           "reduced boundary is not the single -4 vertex");

  PlumbGraph printed;
  int t = printed.add_vertex("t", -1, 0, 2);
  int s = printed.add_vertex("s", -2, 0, 1);
  int a0 = printed.add_arrow("a0", 0), a1 = printed.add_arrow("a1", 1);
  printed.add_edge(t, s, 1);
  printed.add_edge(t, a0, 1);
  printed.add_edge(t, a1, 1);
  r.expect(isomorphic(extract_g1(g, G1Mode::resolution), printed), "G1 differs from the printed graph");

  auto br = transversal_data(g);
  r.expect(br.size() == 1, "expected one transversal branch");
  if (br.size() == 1) {
    r.expect(br[0].gluing_tori == 1, "gluing tori " + std::to_string(br[0].gluing_tori));
    r.expect(br[0].d_e == std::vector<i64>{2}, "d(e) " + show(br[0].d_e));
    r.expect(br[0].n_branches == 2, "#T(Sigma) " + std::to_string(br[0].n_branches));
  }
  return r;
}

Report criterion2() {
  Report r;
  GammaC g = fixture_gc("xyz3.gc");
  PlumbGraph G = main_algorithm(g);

  PlumbGraph printed;
  auto v = [&](const std::string& id, i64 e) { return printed.add_vertex(id, e, 0, 1); };
  int B = v("B", 0), T = v("T", -1), R = v("R", 1);
  for (int i = 0; i < 2; ++i) printed.add_edge(v("b" + std::to_string(i), -1), B, 1);
  for (int i = 0; i < 3; ++i) printed.add_edge(v("t" + std::to_string(i), -1), T, 1);
  printed.add_edge(T, B, -1);
  int u = v("u", 2);
  printed.add_edge(T, u, -1);
  printed.add_edge(u, R, -1);
  int w1 = v("w1", 2), w2 = v("w2", 2);
  printed.add_edge(B, w1, -1);
  printed.add_edge(w1, w2, -1);
  printed.add_edge(w2, R, -1);
  printed.add_edge(R, printed.add_arrow("a", 1), 1);
  r.expect(isomorphic(G, printed), "main algorithm output differs from the printed 11-vertex graph");

  PlumbGraph red = reduce(strip_to_boundary(G));
  r.expect(red.nodes.size() == 1 && eulers(red) == std::vector<i64>{-4}, "reduced graph is not one -4 vertex");
  r.expect(red.edges.size() == 1 && red.edges[0].loop() && red.edges[0].sign == -1, "expected a single negative loop");

  BiDivisor one;
  one.add(Root::make(0, 1), Root::make(0, 1));
  r.expect(div_prime_j(g, 0) == one, "Div'_1 is " + div_prime_j(g, 0).str());
  auto rr = rank_report(g);
  r.expect(rr.geneig1_j == std::vector<i64>{1}, "geneig1_j from G2 " + show(rr.geneig1_j));
  r.expect(rr.geneig1_j_divisor == std::vector<i64>{1}, "geneig1_j from the divisor " + show(rr.geneig1_j_divisor));
  return r;
}

Report criterion3() {
  Report r;
  PlumbGraph red = reduce(boundary_of(fixture_gc("f347.gc")));
  PlumbGraph model = reduce(build_xayb(0, 4, 3, 7));
  r.expect(orbifold_euler(red) == Rational(4, 21), "orbifold Euler number " + to_string(orbifold_euler(red)));
  r.expect(invariant_signature(red) == invariant_signature(model),
           invariant_signature(red).str() + " vs " + invariant_signature(model).str());
  PlumbGraph nf = normal_form(red), nm = normal_form(model);
  r.expect(star_profile(nf) == star_profile(nm), "normal forms " + star_profile(nf) + " vs " + star_profile(nm));
  r.expect(nf.nodes.size() == 17, "normal form has " + std::to_string(nf.nodes.size()) + " vertices");
  return r;
}

Report criterion4() {
  Report r;
  GammaC g = homogeneous("c4.hom");
  PlumbGraph G = main_algorithm(prepare(g, true));
  auto s = invariant_signature(strip_to_boundary(G));
  r.expect(s.torsion == std::vector<BigInt>{5}, "torsion " + show(s.torsion));
  r.expect(s.h1rank == 0, "free rank " + std::to_string(s.h1rank));
  int c = G.find("C@0");
  r.expect(c >= 0 && G.nodes[c].euler == 1, "central Euler number is not 1");
  return r;
}

Report criterion5() {
  Report r;
  auto [d, pts] = parse_arrangement(read_file(fixture("a3.arr")));
  GammaC g = build_arrangement(d, pts);
  auto cp = charpoly_boundary(g);
  r.expect(cp.exact && cp.poly == CycloPoly::tk(3, 4) * CycloPoly::tk(1, 7), "A3 charpoly " + cp.poly.str());
  PlumbGraph G = boundary_of(g);
  r.expect(graph_stats(G).c == 6, "c(G) " + std::to_string(graph_stats(G).c));
  r.expect(intersection_data(G).corankA == 5, "corank(A) " + std::to_string(intersection_data(G).corankA));
  for (i64 n = 3; n <= 6; ++n) {
    ArrangementPoint p;
    for (int i = 0; i < n; ++i) p.lines.push_back(i);
    GammaC pencil = build_arrangement(n, {p});
    auto pc = charpoly_boundary(pencil);
    r.expect(pc.exact && pc.poly == CycloPoly::tk(1) * CycloPoly::tk(n, n - 2),
             "pencil d=" + std::to_string(n) + " charpoly " + pc.poly.str());
    i64 rk = rank_report(pencil).rank_h1_boundary;
    r.expect(rk == (n - 1) * (n - 1), "pencil d=" + std::to_string(n) + " rank " + std::to_string(rk));
  }
  return r;
}

Report criterion6() {
  Report r;
  GammaC g = homogeneous("acirr.hom");
  auto rr = rank_report(g);
  r.expect(rr.rank_h1_boundary == 70, "dim H1 " + std::to_string(rr.rank_h1_boundary));
  r.expect(rr.rank_h1_boundary_eig1 == 61, "dim H1_1 " + std::to_string(rr.rank_h1_boundary_eig1));
  BigInt det = intersection_data(boundary_of(g)).det_abs;
  r.expect(det == 50, "|det A| " + det.str());
  auto cp = charpoly_boundary(g);
  CycloPoly want = CycloPoly::tk(1, 62) * CycloPoly::tk(10, 2) / CycloPoly::tk(2) / CycloPoly::tk(5, 2);
  r.expect(cp.exact && cp.poly == want, "charpoly " + cp.poly.str());
  return r;
}

Report criterion7() {
  Report r;
  PlumbGraph q = boundary_of(homogeneous("quartic27.hom"));
  PlumbGraph nf = normal_form(reduce(q));
  r.expect(eulers(nf) == std::vector<i64>{-2, -8, -2} && nf.edges.size() == 2,
           "quartic reduces to " + show(eulers(nf)));
  auto tq = invariant_signature(q).torsion;
  r.expect(tq == std::vector<BigInt>{28}, "quartic torsion " + show(tq));
  auto tc = invariant_signature(boundary_of(homogeneous("cubic.hom"))).torsion;
  r.expect(tc == std::vector<BigInt>{2, 6}, "cubic torsion " + show(tc));
  return r;
}

Report criterion8() {
  Report r;
  PlumbGraph res = fixture_pl("cyl.pl");
  GammaC g = build_cylinder(res);
  PlumbGraph H = strip_to_boundary(collapsing_algorithm(prepare(g, false)));
  auto vs = H.vertices();
  int centre = -1, zero_legs = 0;
  for (int v : vs) {
    if (H.nodes[v].genus == 5) centre = v;
    if (H.degree(v) == 1 && H.nodes[v].euler == 0) ++zero_legs;
  }
  r.expect(vs.size() == 3 && centre >= 0 && zero_legs == 2, "collapsed graph is not the genus-5 star with two 0-legs");
  i64 rk = rank_report(g).rank_h1_boundary;
  r.expect(rk == 11, "rank H1 " + std::to_string(rk));
  CycloPoly p = charpoly(Which::phi_hor, g);
  r.expect(p == CycloPoly::tk(10, 2) * CycloPoly::tk(1) / CycloPoly::tk(5, 2), "P_hor " + p.str());
  r.expect(p.degree() == 11, "degree " + std::to_string(p.degree()));
  r.expect(p.expand() == acampo_oracle(res), "P_hor differs from the A'Campo product");
  return r;
}

Report criterion9() {
  Report r;
  auto t = run_properties(20261018, 210, nullptr);
  r.expect(t.cases >= 200, "only " + std::to_string(t.cases) + " cases");
  for (const auto& f : t.failures) r.expect(false, f);
  r.expect(t.slowest_ms < kBudgetMs, "slowest case " + t.slowest + " took " + std::to_string(t.slowest_ms) + " ms");
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* what;
    std::function<Report()> run;
    bool whole_suite;
  };
  std::vector<Criterion> all = {
      {"221: lens space L(4,1), G1, transversal data", criterion1, false},
      {"x^3+y^2+xyz: printed G, -4 with a negative loop, geneig1_j = 1", criterion2, false},
      {"347: orbifold Euler 4/21, signature of xayb(0,4,3,7)", criterion3, false},
      {"bicuspidal quintic: H1 = Z/5, central Euler 1", criterion4, false},
      {"A3 arrangement and pencils", criterion5, false},
      {"ACirr d=10: ranks 70 and 61, |det A| = 50, charpoly", criterion6, false},
      {"(2,7) quartic and cuspidal cubic", criterion7, false},
      {"cylinder of (x^2-y^3)(y^2-x^3)", criterion8, false},
      {"property suite", criterion9, true},
  };
  int failed = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    try {
      r = all[i].run();
    } catch (const std::exception& e) {
      r.expect(false, std::string("threw ") + e.what());
    }
    long ms = long(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    if (!all[i].whole_suite && ms >= kBudgetMs) r.expect(false, "took " + std::to_string(ms) + " ms");
    bool ok = r.failed.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << all[i].what << " (" << ms << " ms)\n";
    for (const auto& f : r.failed) std::cout << "    " << f << "\n";
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
