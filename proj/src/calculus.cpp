#include "mfb/calculus.hpp"

#include "mfb/invariants.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace mfb {

namespace {

void require_vertex(const PlumbGraph& g, int v, const char* rule) {
  if (v < 0 || v >= int(g.nodes.size())) throw ComputeError(std::string(rule) + ": no such node");
  if (g.nodes[v].arrow) throw ComputeError(std::string(rule) + ": " + g.nodes[v].id + " is an arrowhead");
}

int arrow_edges(const PlumbGraph& g, int v) {
  int c = 0;
  for (int e : g.incident(v))
    if (g.nodes[g.other(e, v)].arrow) ++c;
  return c;
}

bool has_loop(const PlumbGraph& g, int v) {
  for (int e : g.incident(v))
    if (g.edges[e].loop()) return true;
  return false;
}

std::optional<i64> shift(std::optional<i64> e, i64 by) {
  if (!e) return e;
  return checked_add(*e, by);
}

PlumbGraph without(const PlumbGraph& g, std::vector<int> dead) {
  PlumbGraph q = g;
  std::vector<bool> kill(q.nodes.size());
  for (int v : dead) kill[v] = true;
  q.remove_nodes(kill);
  return q;
}

}  // namespace

PlumbGraph r0a(const PlumbGraph& g, int v) {
  require_vertex(g, v, "R0a");
  PlumbGraph q = g;
  for (auto& e : q.edges)
    if (!e.loop() && (e.a == v || e.b == v)) e.sign = -e.sign;
  return q;
}

std::string r1_failure(const PlumbGraph& g, int v) {
  if (v < 0 || v >= int(g.nodes.size()) || g.nodes[v].arrow) return "not a vertex";
  const auto& n = g.nodes[v];
  if (n.genus != 0) return "genus is not 0";
  if (!n.euler || (*n.euler != 1 && *n.euler != -1)) return "euler is not +-1";
  if (g.dash_count(v)) return "vertex carries a dash-arrow";
  int d = g.degree(v);
  if (d == 0) return "isolated vertex";
  if (d > 2) return "more than two edges";
  if (has_loop(g, v)) return "vertex has a loop";
  int arrows = arrow_edges(g, v);
  if (d == 1 && arrows == 1) return "sole edge supports an arrowhead";
  if (d == 2 && arrows == 2) return "both edges support arrowheads";
  return "";
}

PlumbGraph r1_blowdown(const PlumbGraph& g, int v) {
  require_vertex(g, v, "R1");
  if (auto why = r1_failure(g, v); !why.empty()) throw ComputeError("R1 at " + g.nodes[v].id + ": " + why);
  PlumbGraph q = g;
  i64 eps = *g.nodes[v].euler;
  auto inc = g.incident(v);
  if (inc.size() == 1) {
    int w = g.other(inc[0], v);
    q.nodes[w].euler = shift(q.nodes[w].euler, -eps);
  } else {
    const auto &e1 = g.edges[inc[0]], &e2 = g.edges[inc[1]];
    int w1 = g.other(inc[0], v), w2 = g.other(inc[1], v);
    int eps0 = int(-eps * e1.sign * e2.sign);
    if (w1 == w2) {
      q.nodes[w1].euler = shift(q.nodes[w1].euler, -2 * eps);
      q.add_edge(w1, w1, eps0);
    } else {
      if (!g.nodes[w1].arrow) q.nodes[w1].euler = shift(q.nodes[w1].euler, -eps);
      if (!g.nodes[w2].arrow) q.nodes[w2].euler = shift(q.nodes[w2].euler, -eps);
      q.add_edge(w1, w2, eps0);
    }
  }
  return without(q, {v});
}

std::string r3_failure(const PlumbGraph& g, int v) {
  if (v < 0 || v >= int(g.nodes.size()) || g.nodes[v].arrow) return "not a vertex";
  const auto& n = g.nodes[v];
  if (n.genus != 0) return "genus is not 0";
  if (!n.euler || *n.euler != 0) return "euler is not 0";
  if (g.dash_count(v)) return "vertex carries a dash-arrow";
  auto inc = g.incident(v);
  if (inc.size() != 2 || g.degree(v) != 2) return "not exactly two edges";
  int i = g.other(inc[0], v), j = g.other(inc[1], v);
  if (i == v || j == v) return "vertex has a loop";
  if (g.nodes[i].arrow || g.nodes[j].arrow) return "an edge supports an arrowhead";
  if (i == j) return "both edges go to the same vertex";
  return "";
}

PlumbGraph r3_absorb(const PlumbGraph& g, int v) {
  require_vertex(g, v, "R3");
  if (auto why = r3_failure(g, v); !why.empty()) throw ComputeError("R3 at " + g.nodes[v].id + ": " + why);
  auto inc = g.incident(v);
  int i = g.other(inc[0], v), j = g.other(inc[1], v);
  int eps = g.edges[inc[0]].sign, epsb = g.edges[inc[1]].sign;
  if (j < i) {
    std::swap(i, j);
    std::swap(eps, epsb);
  }
  int flip = -eps * epsb;
  PlumbGraph q = g;
  auto& I = q.nodes[i];
  const auto& J = g.nodes[j];
  I.euler = (I.euler && J.euler) ? std::optional<i64>(checked_add(*I.euler, *J.euler)) : std::nullopt;
  I.genus += J.genus;
  for (int e = 0; e < int(q.edges.size()); ++e) {
    auto& x = q.edges[e];
    if (e == inc[0] || e == inc[1]) continue;
    if (x.loop()) {
      if (x.a == j) x.a = x.b = i;
      continue;
    }
    if (x.a == j || x.b == j) {
      x.sign *= flip;
      if (x.a == j) x.a = i;
      if (x.b == j) x.b = i;
    }
  }
  for (auto& d : q.dashes)
    if (d.at == j) d.at = i;
  return without(q, {v, j});
}

std::string r5_failure(const PlumbGraph& g, int v) {
  if (v < 0 || v >= int(g.nodes.size()) || g.nodes[v].arrow) return "not a vertex";
  const auto& n = g.nodes[v];
  if (n.genus != 0) return "genus is not 0";
  if (!n.euler || *n.euler != 0) return "euler is not 0";
  if (g.dash_count(v)) return "vertex carries a dash-arrow";
  auto inc = g.incident(v);
  if (inc.size() != 2 || g.degree(v) != 2) return "not exactly two edges";
  int i = g.other(inc[0], v), j = g.other(inc[1], v);
  if (i != j || i == v) return "edges do not form a double edge";
  if (g.nodes[i].arrow) return "edges support arrowheads";
  if (g.edges[inc[0]].sign == g.edges[inc[1]].sign) return "double edge signs agree";
  return "";
}

PlumbGraph r5_handle(const PlumbGraph& g, int v) {
  require_vertex(g, v, "R5");
  if (auto why = r5_failure(g, v); !why.empty()) throw ComputeError("R5 at " + g.nodes[v].id + ": " + why);
  PlumbGraph q = g;
  q.nodes[g.other(g.incident(v)[0], v)].genus += 1;
  return without(q, {v});
}

std::string r8_failure(const PlumbGraph& g, int v) {
  if (v < 0 || v >= int(g.nodes.size()) || g.nodes[v].arrow) return "not a vertex";
  if (g.nodes[v].genus != 0) return "genus is not 0";
  if (g.dash_count(v) != 1) return "vertex does not carry exactly one dash-arrow";
  if (arrow_edges(g, v)) return "vertex carries an arrowhead";
  if (g.degree(v) != 1) return "not exactly one vertex-vertex edge";
  return "";
}

PlumbGraph r8_annulus(const PlumbGraph& g, int v) {
  require_vertex(g, v, "R8");
  if (auto why = r8_failure(g, v); !why.empty()) throw ComputeError("R8 at " + g.nodes[v].id + ": " + why);
  PlumbGraph q = g;
  int w = g.other(g.incident(v)[0], v);
  q.nodes[w].euler.reset();
  for (auto& d : q.dashes)
    if (d.at == v) d.at = w;
  return without(q, {v});
}

std::string r6_failure(const PlumbGraph& g, int v) {
  if (v < 0 || v >= int(g.nodes.size()) || g.nodes[v].arrow) return "not a vertex";
  const auto& n = g.nodes[v];
  if (n.genus != 0) return "genus is not 0";
  if (!n.euler || *n.euler != 0) return "euler is not 0";
  if (g.dash_count(v)) return "vertex carries a dash-arrow";
  if (g.degree(v) != 1) return "not a leaf";
  int w = g.other(g.incident(v)[0], v);
  if (g.nodes[w].arrow) return "leaf edge supports an arrowhead";
  if (g.dash_count(w) || arrow_edges(g, w)) return "neighbour carries arrows";
  if (g.degree(w) == 1 && g.nodes[w].genus == 0) return "pattern needs a remaining graph";
  return "";
}

PlumbGraph r6_naive(const PlumbGraph& g, int v) {
  require_vertex(g, v, "R6");
  if (auto why = r6_failure(g, v); !why.empty()) throw ComputeError("R6 at " + g.nodes[v].id + ": " + why);
  int w = g.other(g.incident(v)[0], v);
  i64 extra = 2 * g.nodes[w].genus;
  for (int e : g.incident(w))
    if (g.edges[e].loop()) ++extra;
  PlumbGraph q = without(g, {v, w});
  for (i64 k = 0; k < extra; ++k) {
    std::string id = g.nodes[w].id + "~" + std::to_string(k);
    while (q.find(id) >= 0) id += "'";
    q.add_vertex(id, 0, 0);
  }
  return q;
}

namespace {

// R6-naive restricted to a genus-0 neighbour with exactly one further edge; the graph stays connected
std::string r6_chain_failure(const PlumbGraph& g, int v) {
  if (auto why = r6_failure(g, v); !why.empty()) return why;
  int w = g.other(g.incident(v)[0], v);
  if (g.nodes[w].genus != 0) return "neighbour has genus";
  if (g.degree(w) != 2 || has_loop(g, w)) return "neighbour is not a chain vertex";
  return "";
}

}  // namespace

ReduceResult reduce_traced(const PlumbGraph& g, bool allow_r5) {
  using Fail = std::string (*)(const PlumbGraph&, int);
  using Apply = PlumbGraph (*)(const PlumbGraph&, int);
  struct Rule {
    const char* name;
    Fail fail;
    Apply apply;
  };
  std::vector<Rule> rules = {{"R1", r1_failure, r1_blowdown}, {"R3", r3_failure, r3_absorb}};
  if (allow_r5) rules.push_back({"R5", r5_failure, r5_handle});
  rules.push_back({"R8", r8_failure, r8_annulus});
  rules.push_back({"R6", r6_chain_failure, r6_naive});
  ReduceResult r{g, {}};
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& rule : rules) {
      for (int v : r.graph.vertices()) {
        if (!rule.fail(r.graph, v).empty()) continue;
        r.steps.push_back({rule.name, r.graph.nodes[v].id});
        r.graph = rule.apply(r.graph, v);
        moved = true;
        break;
      }
      if (moved) break;
    }
  }
  return r;
}

PlumbGraph reduce(const PlumbGraph& g, bool allow_r5) { return reduce_traced(g, allow_r5).graph; }

PlumbGraph split_all(const PlumbGraph& g) {
  PlumbGraph q = g;
  while (true) {
    bool moved = false;
    for (int v : q.vertices())
      if (r6_failure(q, v).empty()) {
        q = reduce(r6_naive(q, v));
        moved = true;
        break;
      }
    if (!moved) return q;
  }
}

std::string InvariantSignature::str() const {
  std::ostringstream s;
  s << "cg=" << cg << " h1rank=" << h1rank << " arrows=" << n_arrows << " torsion=[";
  for (size_t i = 0; i < torsion.size(); ++i) s << (i ? "," : "") << torsion[i];
  s << "] det_abs=" << det_abs;
  return s.str();
}

InvariantSignature invariant_signature(const PlumbGraph& g) {
  InvariantSignature s;
  Stats st = graph_stats(g, true);
  auto id = intersection_data(g);
  s.cg = st.c + st.g_sum;
  s.h1rank = 2 * st.g_sum + st.c + id.corankA;
  s.n_arrows = st.n_A + i64(g.dashes.size());
  s.torsion = id.torsion();
  s.det_abs = 1;
  for (const auto& d : s.torsion) s.det_abs *= d;
  return s;
}

namespace {

struct Shape {
  bool arrow;
  std::optional<i64> euler, mult;
  i64 genus;
  int dashes, degree;
  std::vector<int> loops;
  bool operator==(const Shape&) const = default;
};

Shape shape(const PlumbGraph& g, int v) {
  Shape s{g.nodes[v].arrow, g.nodes[v].euler, g.nodes[v].mult, g.nodes[v].genus, g.dash_count(v), g.degree(v), {}};
  for (int e : g.incident(v))
    if (g.edges[e].loop()) s.loops.push_back(g.edges[e].sign);
  std::sort(s.loops.begin(), s.loops.end());
  return s;
}

// sorted signs of the non-loop edges between a and b
using PairMap = std::map<std::pair<int, int>, std::vector<int>>;

PairMap pairs(const PlumbGraph& g) {
  PairMap m;
  for (const auto& e : g.edges) {
    if (e.loop()) continue;
    m[{std::min(e.a, e.b), std::max(e.a, e.b)}].push_back(e.sign);
  }
  for (auto& [k, v] : m) std::sort(v.begin(), v.end());
  return m;
}

std::vector<int> signs_of(const PairMap& m, int a, int b) {
  auto it = m.find({std::min(a, b), std::max(a, b)});
  return it == m.end() ? std::vector<int>{} : it->second;
}

std::vector<int> negated(std::vector<int> s) {
  for (int& x : s) x = -x;
  std::sort(s.begin(), s.end());
  return s;
}

bool switching_exists(const PlumbGraph& a, const std::vector<int>& phi, const PairMap& pa,
                      const PairMap& pb) {
  int n = int(a.nodes.size());
  // parity constraints s(x)s(y) = p
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& [k, sa] : pa) {
    auto sb = signs_of(pb, phi[k.first], phi[k.second]);
    bool same = sa == sb, flip = negated(sa) == sb;
    if (!same && !flip) return false;
    if (same && flip) continue;
    int p = same ? 1 : -1;
    adj[k.first].push_back({k.second, p});
    adj[k.second].push_back({k.first, p});
  }
  std::vector<int> s(n, 0);
  for (int start = 0; start < n; ++start) {
    if (s[start]) continue;
    s[start] = 1;
    std::vector<int> stack = {start};
    std::vector<int> comp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (auto [y, p] : adj[x]) {
        int want = s[x] * p;
        if (!s[y]) {
          s[y] = want;
          stack.push_back(y);
        } else if (s[y] != want) {
          return false;
        }
      }
    }
    // arrowheads cannot be switched, so all arrowheads of a component share one value
    int seen = 0;
    for (int x : comp)
      if (a.nodes[x].arrow) {
        if (!seen) seen = s[x];
        else if (s[x] != seen) return false;
      }
  }
  return true;
}

}  // namespace

bool isomorphic(const PlumbGraph& a, const PlumbGraph& b, bool up_to_r0a) {
  if (a.vertices().size() > 12 || b.vertices().size() > 12)
    throw ComputeError("isomorphism search is limited to 12 vertices");
  int n = int(a.nodes.size());
  if (n != int(b.nodes.size()) || a.edges.size() != b.edges.size() || a.dashes.size() != b.dashes.size()) return false;
  std::vector<Shape> sa(n), sb(n);
  for (int v = 0; v < n; ++v) {
    sa[v] = shape(a, v);
    sb[v] = shape(b, v);
  }
  PairMap pa = pairs(a), pb = pairs(b);
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n);
  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == n) return !up_to_r0a || switching_exists(a, phi, pa, pb);
    for (int w = 0; w < n; ++w) {
      if (used[w] || !(sa[v] == sb[w])) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        auto x = signs_of(pa, u, v), y = signs_of(pb, phi[u], w);
        ok = up_to_r0a ? x.size() == y.size() : x == y;
      }
      if (!ok) continue;
      phi[v] = w;
      used[w] = true;
      if (go(v + 1)) return true;
      used[w] = false;
    }
    phi[v] = -1;
    return false;
  };
  return go(0);
}

namespace {

BigInt floor_of(const Rational& x) {
  BigInt n = numerator(x), d = denominator(x);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

i64 to_i64(const BigInt& x, const char* what) {
  if (x > std::numeric_limits<i64>::max() || x < std::numeric_limits<i64>::min())
    throw ComputeError(std::string("normal form: ") + what + " overflows");
  return i64(x);
}

PlumbGraph chain_graph(const std::vector<i64>& es) {
  PlumbGraph c;
  for (size_t i = 0; i < es.size(); ++i) {
    c.add_vertex("v" + std::to_string(i), es[i]);
    if (i) c.add_edge(int(i) - 1, int(i), 1);
  }
  return c;
}

// chain (e1..ek) is L(p, q) with p/q = -[e1, ..., ek]
PlumbGraph lens_normal_form(const std::vector<i64>& es) {
  // continuants K(e_i..e_k), K of the empty tail is 1
  BigInt det = 1, tail = 0;
  for (size_t i = es.size(); i-- > 0;) {
    BigInt k = es[i] * det - tail;
    tail = det;
    det = k;
  }
  if (det == 0) return chain_graph({0});
  BigInt p = abs(det);
  if (p == 1) return PlumbGraph();
  BigInt q = (-tail * (det > 0 ? 1 : -1)) % p;
  if (q < 0) q += p;
  auto cf = hirzebruch_cf(to_i64(p, "lens order"), to_i64(q, "lens parameter"));
  for (auto& c : cf) c = -c;
  return chain_graph(cf);
}

}  // namespace

PlumbGraph normal_form(const PlumbGraph& g) {
  if (!g.arrows().empty() || !g.dashes.empty()) throw ComputeError("normal form: arrows present");
  if (g.nodes.empty()) return g;
  Stats s = graph_stats(g);
  if (s.c != 0) throw ComputeError("normal form: graph is not a tree");
  int n = int(g.nodes.size());
  int center = -1, big = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) {
      ++big;
      center = v;
    }
  if (big > 1) throw ComputeError("normal form: graph is not star-shaped");
  if (center < 0) {
    center = 0;
    for (int v = 0; v < n; ++v)
      if (g.nodes[v].genus > g.nodes[center].genus) center = v;
  }
  for (int v = 0; v < n; ++v) {
    if (!g.nodes[v].euler) throw ComputeError("normal form: missing euler at " + g.nodes[v].id);
    if (v != center && g.nodes[v].genus) throw ComputeError("normal form: genus off the centre");
  }
  BigInt b = *g.nodes[center].euler;
  std::vector<Rational> fracs;
  for (int e0 : g.incident(center)) {
    std::vector<i64> leg;
    int prev = center, cur = g.other(e0, center);
    while (true) {
      leg.push_back(*g.nodes[cur].euler);
      int next = -1;
      for (int f : g.incident(cur))
        if (g.other(f, cur) != prev) next = g.other(f, cur);
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    Rational v = leg.back();
    for (int i = int(leg.size()) - 2; i >= 0; --i) {
      if (v == 0) throw ComputeError("normal form: zero denominator");
      v = Rational(leg[i]) - 1 / v;
    }
    if (v == 0) throw ComputeError("normal form: zero denominator");
    Rational r = -1 / v;
    BigInt fl = floor_of(r);
    b += fl;
    if (r != Rational(fl)) fracs.push_back(r - Rational(fl));
  }
  std::sort(fracs.begin(), fracs.end(), std::greater<>());
  std::vector<std::vector<i64>> legs;
  for (const auto& f : fracs)
    legs.push_back(hirzebruch_cf(to_i64(denominator(f), "leg"), to_i64(numerator(f), "leg")));
  i64 genus = g.nodes[center].genus;
  if (genus == 0 && legs.size() <= 2) {
    std::vector<i64> es;
    if (!legs.empty())
      for (auto it = legs[0].rbegin(); it != legs[0].rend(); ++it) es.push_back(-*it);
    es.push_back(to_i64(b, "central euler"));
    if (legs.size() == 2)
      for (i64 c : legs[1]) es.push_back(-c);
    return lens_normal_form(es);
  }
  PlumbGraph out;
  out.add_vertex(g.nodes[center].id, to_i64(b, "central euler"), genus);
  for (size_t i = 0; i < legs.size(); ++i) {
    int prev = 0;
    for (size_t k = 0; k < legs[i].size(); ++k) {
      int v = out.add_vertex(g.nodes[center].id + "/" + std::to_string(i) + "." + std::to_string(k), -legs[i][k]);
      out.add_edge(prev, v, 1);
      prev = v;
    }
  }
  return out;
}

}  // namespace mfb
