#include "mfb/algorithm.hpp"

#include "mfb/hj.hpp"

#include <functional>
#include <numeric>
#include <set>

namespace mfb {

namespace {

void require_valid(const GammaC& g) {
  auto r = validate_gammaC(g);
  if (!r.structural.empty()) throw ValidationError(r.structural.front());
  if (!r.compatibility_errors.empty())
    throw ValidationError("edge " + g.edge_name(r.compatibility_errors.front()) + " fails the compatibility rule");
}

GammaC copy_nodes(const GammaC& g) {
  GammaC h;
  h.nodes = g.nodes;
  return h;
}

std::string fresh_id(const GammaC& g, const std::string& want) {
  std::string id = want;
  for (int k = 1; g.find(id) >= 0; ++k) id = want + "_" + std::to_string(k);
  return id;
}

// genus of one covering copy from the star of w
i64 lifted_genus(const GammaC& g, int w, i64 nw) {
  const auto& v = g.nodes[w];
  Star st = star_of(g, w);
  i64 gmn = gcd(v.m, v.n);
  i64 rhs = checked_mul(2 - 2 * v.genus - st.s - st.t, gmn);
  for (const auto& l : st.legs) rhs += gcd({v.m, v.n, l.w == 1 ? l.t.n : l.t.m});
  i64 num = 2 * nw - rhs;
  if (num < 0 || num % (2 * nw)) throw ComputeError("genus formula has no solution at " + v.id);
  return num / (2 * nw);
}

i64 node_n(const GammaC& g, int w) {
  const auto& v = g.nodes[w];
  if (v.arrow) return 1;
  std::vector<i64> xs{v.m, v.n};
  for (const auto& l : star_of(g, w).legs) xs.push_back(l.w == 1 ? l.t.n : l.t.m);
  return gcd_all(xs);
}

i64 edge_n(const GammaC& g, int e) {
  const auto& x = g.edges[e];
  Triple a = g.nodes[x.a].triple(), b = g.nodes[x.b].triple();
  if (x.w == 1) return gcd({a.m, a.n, b.n});
  if (g.vanishing(e)) throw ValidationError("vanishing 2-edge " + g.edge_name(e) + ": Assumption B is not satisfied");
  return gcd({a.m, b.m, a.n});
}

PNode copy_template(const GammaC& g, int w, i64 nw) {
  const auto& v = g.nodes[w];
  PNode n;
  n.id = v.id;
  if (v.arrow) {
    n.arrow = true;
    n.mult = 1;
    return n;
  }
  n.mult = checked_mul(v.m, v.nu) / gcd(v.m, v.n);
  n.genus = lifted_genus(g, w, nw);
  return n;
}

// string above a 1-edge (Case 1) or a non-vanishing 2-edge (Case 2)
EdgeLift edge_lift(const GammaC& g, int e, i64 ne, i64 mult_a, i64 mult_b) {
  const auto& x = g.edges[e];
  const auto &A = g.nodes[x.a], &B = g.nodes[x.b];
  if (A.arrow || B.arrow) {
    if (x.w != 1) throw ComputeError("2-edge to an arrowhead needs the collapsing algorithm");
    return EdgeLift::direct(1);
  }
  HJString h;
  if (x.w == 1)
    h = hj_string({A.n / ne, B.n / ne, A.m / ne, A.nu, B.nu, 0}, 1);
  else
    h = hj_string({A.m / ne, B.m / ne, A.n / ne, 0, 0, A.nu}, -1);
  if (h.combined.front() != mult_a || h.combined.back() != mult_b)
    throw ComputeError("string above " + g.edge_name(e) + " does not match the end multiplicities");
  std::vector<i64> mults(h.combined.begin() + 1, h.combined.end() - 1);
  return EdgeLift::chain(h.eulers(), mults, h.sign);
}

}  // namespace

GammaC blowup_assumption_a(const GammaC& g) {
  GammaC h = copy_nodes(g);
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    Triple a = g.nodes[x.a].triple(), b = g.nodes[x.b].triple();
    if (x.w == 2 && a.m == 1 && b.m == 1) {
      std::string base = g.nodes[x.a].arrow ? g.nodes[x.b].id : g.nodes[x.a].id;
      int z = h.add_vertex(fresh_id(h, base + "^a" + std::to_string(e)), 2, a.n, a.nu);
      h.add_edge(x.a, z, 2);
      h.add_edge(z, x.b, 2);
    } else {
      h.add_edge(x.a, x.b, x.w);
    }
  }
  return h;
}

GammaC blowup_assumption_b(const GammaC& g) {
  GammaC h = copy_nodes(g);
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    if (!g.vanishing(e)) {
      h.add_edge(x.a, x.b, x.w);
      continue;
    }
    if (x.loop()) throw ValidationError("vanishing 2-loop at " + g.nodes[x.a].id);
    Triple a = g.nodes[x.a].triple(), b = g.nodes[x.b].triple();
    i64 s = checked_add(a.m, b.m);
    std::string tag = "^b" + std::to_string(e);
    int u = h.add_vertex(fresh_id(h, g.nodes[x.a].id + tag), a.m, s, a.nu);
    int v = h.add_vertex(fresh_id(h, g.nodes[x.b].id + tag), b.m, s, b.nu);
    h.add_edge(x.a, u, 1);
    h.add_edge(u, v, 2);
    h.add_edge(v, x.b, 1);
  }
  return h;
}

GammaC prepare(const GammaC& g, bool blowup_b) {
  require_valid(g);
  GammaC h = blowup_assumption_a(g);
  if (blowup_b) h = blowup_assumption_b(h);
  return h;
}

CoveringData covering_data_main(const GammaC& g) {
  CoveringData d;
  for (int w = 0; w < int(g.nodes.size()); ++w) d.nv.push_back(node_n(g, w));
  for (int e = 0; e < int(g.edges.size()); ++e) d.ne.push_back(edge_n(g, e));
  return d;
}

AlgorithmOutput main_algorithm_full(const GammaC& g) {
  require_valid(g);
  auto rep = validate_gammaC(g);
  if (!rep.assumption_a_violations.empty())
    throw ValidationError("edge " + g.edge_name(rep.assumption_a_violations.front()) + " violates Assumption A");
  CoveringData d = covering_data_main(g);
  CoverBase base;
  for (int w = 0; w < int(g.nodes.size()); ++w) base.add_node(copy_template(g, w, d.nv[w]));
  std::vector<EdgeLift> lifts;
  for (int e = 0; e < int(g.edges.size()); ++e) {
    base.add_edge(g.edges[e].a, g.edges[e].b, g.edge_name(e));
    lifts.push_back(edge_lift(g, e, d.ne[e], *base.nodes[g.edges[e].a].mult, *base.nodes[g.edges[e].b].mult));
  }
  AlgorithmOutput out;
  out.cover = build_trivial_cover(base, d, lifts);
  out.graph = solve_euler_numbers(out.cover.cover);
  out.cover.cover = out.graph;
  return out;
}

PlumbGraph main_algorithm(const GammaC& g) { return main_algorithm_full(g).graph; }

Collapsed collapse_subtrees(const GammaC& g) {
  require_valid(g);
  int N = int(g.nodes.size());
  Collapsed out;
  out.record_of.assign(N, -1);
  std::vector<int> p(N);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  std::vector<int> internal_edges(N, 0);
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    if (!g.vanishing(e) || g.nodes[x.a].arrow || g.nodes[x.b].arrow) continue;
    if (x.loop()) throw ValidationError("vanishing 2-loop at " + g.nodes[x.a].id);
    int ra = find(x.a), rb = find(x.b);
    if (ra == rb) throw ValidationError("collapsed subgraph through " + g.nodes[x.a].id + " is not a tree");
    p[ra] = rb;
  }
  std::map<int, int> slot;
  for (int w : g.vertices()) {
    if (g.nodes[w].n != 0) continue;
    int r = find(w);
    if (!slot.count(r)) {
      slot[r] = int(out.records.size());
      out.records.emplace_back();
    }
    out.record_of[w] = slot[r];
    out.records[slot[r]].members.push_back(w);
  }
  for (auto& rec : out.records) {
    std::vector<i64> ns;
    i64 rhs = 0;
    rec.m_gamma = g.nodes[rec.members.front()].nu;
    for (int w : rec.members) {
      const auto& v = g.nodes[w];
      if (v.nu != rec.m_gamma) throw ValidationError("collapsed subgraph with different nu values");
      Star st = star_of(g, w);
      std::vector<i64> xs{v.m};
      i64 hat = 0;
      rhs += checked_mul(2 - 2 * v.genus - st.s - st.t, v.m);
      for (const auto& l : st.legs) {
        xs.push_back(l.w == 1 ? l.t.n : l.t.m);
        if (l.w == 1) rhs += gcd(v.m, l.t.n);
        if (l.w == 2 && g.nodes[l.far].arrow) ++hat;
      }
      rhs += hat;
      if (hat) rec.hat_t[w] = hat;
      ns.push_back(gcd_all(xs));
    }
    rec.n_gamma = gcd_all(ns);
    i64 num = 2 * rec.n_gamma - rhs;
    if (num < 0 || num % (2 * rec.n_gamma))
      throw ComputeError("collapsed genus formula has no solution at " + g.nodes[rec.members.front()].id);
    rec.g_gamma = num / (2 * rec.n_gamma);
  }
  // contracted graph: one node per record, every other node kept
  std::vector<int> map(N, -1);
  for (int w = 0; w < N; ++w) {
    const auto& v = g.nodes[w];
    int r = out.record_of[w];
    if (r >= 0) {
      const auto& rec = out.records[r];
      if (rec.members.front() != w) continue;
      int id = out.ghat.add_vertex(v.id + (rec.members.size() > 1 ? "+" : ""), v.m, 0, rec.m_gamma, rec.g_gamma);
      for (int u : rec.members) map[u] = id;
    } else if (v.arrow) {
      map[w] = out.ghat.add_arrow(v.id);
    } else {
      map[w] = out.ghat.add_vertex(v.id, v.m, v.n, v.nu, v.genus);
    }
  }
  for (int w = 0; w < N; ++w)
    if (map[w] < 0) map[w] = map[out.records[out.record_of[w]].members.front()];
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    int ra = out.record_of[x.a], rb = out.record_of[x.b];
    if (g.vanishing(e) && ra >= 0 && ra == rb) continue;
    out.ghat.add_edge(map[x.a], map[x.b], x.w);
  }
  return out;
}

AlgorithmOutput collapsing_algorithm_full(const GammaC& g) {
  require_valid(g);
  auto rep = validate_gammaC(g);
  if (!rep.assumption_a_violations.empty())
    throw ValidationError("edge " + g.edge_name(rep.assumption_a_violations.front()) + " violates Assumption A");
  Collapsed col = collapse_subtrees(g);
  int N = int(g.nodes.size());
  CoverBase base;
  CoveringData d;
  std::vector<int> node(N, -1);
  std::vector<int> rec_node(col.records.size(), -1);
  for (int w = 0; w < N; ++w) {
    int r = col.record_of[w];
    if (r >= 0) {
      if (rec_node[r] < 0) {
        const auto& rec = col.records[r];
        PNode n;
        n.id = g.nodes[rec.members.front()].id + (rec.members.size() > 1 ? "+" : "");
        n.mult = rec.m_gamma;
        n.genus = rec.g_gamma;
        rec_node[r] = base.add_node(n);
        d.nv.push_back(rec.n_gamma);
      }
      node[w] = rec_node[r];
      continue;
    }
    i64 nw = node_n(g, w);
    node[w] = base.add_node(copy_template(g, w, nw));
    d.nv.push_back(nw);
  }
  std::vector<EdgeLift> lifts;
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    int ra = col.record_of[x.a], rb = col.record_of[x.b];
    int a = node[x.a], b = node[x.b];
    if (g.vanishing(e)) {
      if (ra >= 0 && ra == rb) continue;
      // an arrow-supporting vanishing 2-edge: w -⊖- (0)[mult 1] -+- arrow
      if (!g.nodes[x.a].arrow && !g.nodes[x.b].arrow)
        throw ComputeError("vanishing 2-edge between two collapsed subgraphs");
      if (g.nodes[x.a].arrow) std::swap(a, b);
      if (d.nv[a] != 1) throw ComputeError("arrow-supporting collapsed subgraph with n>1");
      base.add_edge(a, b, g.edge_name(e));
      d.ne.push_back(1);
      lifts.push_back({{0}, {1}, {-1, 1}});
      continue;
    }
    base.add_edge(a, b, g.edge_name(e));
    d.ne.push_back(edge_n(g, e));
    lifts.push_back(edge_lift(g, e, d.ne.back(), *base.nodes[a].mult, *base.nodes[b].mult));
  }
  AlgorithmOutput out;
  out.cover = build_trivial_cover(base, d, lifts);
  out.graph = solve_euler_numbers(out.cover.cover);
  out.cover.cover = out.graph;
  return out;
}

PlumbGraph collapsing_algorithm(const GammaC& g) { return collapsing_algorithm_full(g).graph; }

namespace {

bool cutting(const GammaC& g, int e) {
  const auto& x = g.edges[e];
  if (x.w != 2 || g.nodes[x.a].arrow || g.nodes[x.b].arrow) return false;
  return (g.nodes[x.a].m == 1) != (g.nodes[x.b].m == 1);
}

std::vector<std::vector<int>> upper_components(const GammaC& g) {
  int N = int(g.nodes.size());
  std::vector<int> p(N);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  auto upper = [&](int v) { return !g.nodes[v].arrow && g.nodes[v].m >= 2; };
  for (const auto& x : g.edges)
    if (upper(x.a) && upper(x.b)) p[find(x.a)] = find(x.b);
  std::map<int, int> slot;
  std::vector<std::vector<int>> out;
  for (int v = 0; v < N; ++v) {
    if (!upper(v)) continue;
    int r = find(v);
    if (!slot.count(r)) {
      slot[r] = int(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

}  // namespace

PlumbGraph extract_g1(const GammaC& g0, G1Mode mode) {
  GammaC g = prepare(g0, true);
  CoverBase base;
  CoveringData d;
  std::vector<int> node(g.nodes.size(), -1);
  for (int w = 0; w < int(g.nodes.size()); ++w) {
    const auto& v = g.nodes[w];
    if (!v.arrow && v.m != 1) continue;
    i64 nw = node_n(g, w);
    node[w] = base.add_node(copy_template(g, w, nw));
    d.nv.push_back(nw);
  }
  std::vector<EdgeLift> lifts;
  std::vector<bool> cut_arrow;
  cut_arrow.assign(base.nodes.size(), false);
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    if (cutting(g, e)) {
      int low = g.nodes[x.a].m == 1 ? x.a : x.b;
      PNode n;
      n.id = "cut" + std::to_string(e);
      n.arrow = true;
      n.mult = 0;
      int a = base.add_node(n);
      d.nv.push_back(1);
      cut_arrow.push_back(true);
      base.add_edge(node[low], a, g.edge_name(e));
      d.ne.push_back(d.nv[node[low]]);
      lifts.push_back(EdgeLift::direct(1));
      continue;
    }
    if (node[x.a] < 0 || node[x.b] < 0) continue;
    base.add_edge(node[x.a], node[x.b], g.edge_name(e));
    d.ne.push_back(edge_n(g, e));
    lifts.push_back(edge_lift(g, e, d.ne.back(), *base.nodes[node[x.a]].mult, *base.nodes[node[x.b]].mult));
  }
  CoverResult cr = build_trivial_cover(base, d, lifts);
  PlumbGraph p = solve_euler_numbers(cr.cover);
  if (mode == G1Mode::resolution) return p;
  std::vector<bool> kill(p.nodes.size(), false);
  for (int i = 0; i < int(p.nodes.size()); ++i) {
    if (!p.nodes[i].arrow) continue;
    bool is_cut = cr.node_base[i] >= 0 && cut_arrow[cr.node_base[i]];
    if (!is_cut && mode == G1Mode::boundary) continue;
    int e = p.incident(i).front();
    int v = p.other(e, i);
    p.add_dash("d:" + p.nodes[i].id, v);
    kill[i] = true;
  }
  p.remove_nodes(kill);
  for (auto& dsh : p.dashes) p.nodes[dsh.at].euler.reset();
  return p;
}

std::vector<PlumbGraph> extract_g2(const GammaC& g0) {
  GammaC g = prepare(g0, true);
  AlgorithmOutput full = main_algorithm_full(g);
  const PlumbGraph& G = full.graph;
  const CoverResult& cr = full.cover;
  std::vector<PlumbGraph> out;
  for (const auto& comp : upper_components(g)) {
    std::set<int> in(comp.begin(), comp.end());
    std::vector<bool> kill(G.nodes.size(), true);
    for (int i = 0; i < int(G.nodes.size()); ++i) {
      if (cr.node_base[i] >= 0) {
        kill[i] = !in.count(cr.node_base[i]);
      } else {
        const auto& x = g.edges[cr.node_edge[i]];
        kill[i] = !(in.count(x.a) && in.count(x.b));
      }
    }
    PlumbGraph p = G;
    for (int k = 0; k < int(G.edges.size()); ++k) {
      int e = cr.edge_base[k];
      if (!cutting(g, e)) continue;
      const auto& x = G.edges[k];
      for (int end : {x.a, x.b})
        if (!kill[end] && cr.node_base[end] >= 0) p.add_dash("d:" + g.edge_name(e), end);
    }
    p.remove_nodes(kill);
    for (auto& dsh : p.dashes) p.nodes[dsh.at].euler.reset();
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Branch> transversal_data(const GammaC& g0) { return branches_of(prepare(g0, false)); }

i64 vertex_cover_index(const GammaC& g, int w) { return node_n(g, w); }
i64 edge_cover_index(const GammaC& g, int e) { return edge_n(g, e); }
bool is_cutting(const GammaC& g, int e) { return cutting(g, e); }

std::vector<Branch> branches_of(const GammaC& g) {
  std::vector<Branch> out;
  for (const auto& comp : upper_components(g)) {
    Branch b;
    b.vertices = comp;
    std::set<int> in(comp.begin(), comp.end());
    std::vector<i64> nus;
    for (int v : comp) nus.push_back(g.nodes[v].nu);
    b.d = gcd_all(nus);
    for (int e = 0; e < int(g.edges.size()); ++e) {
      if (!cutting(g, e)) continue;
      const auto& x = g.edges[e];
      if (!in.count(x.a) && !in.count(x.b)) continue;
      int up = in.count(x.a) ? x.a : x.b;
      b.cutting_edges.push_back(e);
      b.d_e.push_back(exact_div(g.nodes[up].nu, b.d, "d(e)"));
      b.n_branches += b.d_e.back();
    }
    b.gluing_tori = i64(b.cutting_edges.size());
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace mfb
