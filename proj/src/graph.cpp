#include "mfb/graph.hpp"

#include <algorithm>
#include <numeric>

namespace mfb {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

template <class G>
int count_components(const G& g) {
  int n = int(g.nodes.size());
  if (n == 0) return 0;
  Dsu d(n);
  for (auto& e : g.edges) d.join(e.a, e.b);
  int c = 0;
  for (int i = 0; i < n; ++i) c += d.find(i) == i;
  return c;
}

}  // namespace

int GammaC::add_vertex(std::string id, i64 m, i64 n, i64 nu, i64 genus) {
  GNode v;
  v.id = std::move(id);
  v.m = m;
  v.n = n;
  v.nu = nu;
  v.genus = genus;
  nodes.push_back(v);
  return int(nodes.size()) - 1;
}

int GammaC::add_arrow(std::string id) {
  GNode v;
  v.id = std::move(id);
  v.arrow = true;
  nodes.push_back(v);
  return int(nodes.size()) - 1;
}

int GammaC::add_edge(int a, int b, int w) {
  edges.push_back({a, b, w});
  return int(edges.size()) - 1;
}

int GammaC::find(const std::string& id) const {
  for (int i = 0; i < int(nodes.size()); ++i)
    if (nodes[i].id == id) return i;
  return -1;
}

int GammaC::at(const std::string& id) const {
  int i = find(id);
  if (i < 0) throw ValidationError("unknown node '" + id + "'");
  return i;
}

std::vector<int> GammaC::vertices() const {
  std::vector<int> r;
  for (int i = 0; i < int(nodes.size()); ++i)
    if (!nodes[i].arrow) r.push_back(i);
  return r;
}

std::vector<int> GammaC::arrows() const {
  std::vector<int> r;
  for (int i = 0; i < int(nodes.size()); ++i)
    if (nodes[i].arrow) r.push_back(i);
  return r;
}

std::vector<int> GammaC::incident(int v) const {
  std::vector<int> r;
  for (int e = 0; e < int(edges.size()); ++e)
    if (edges[e].a == v || edges[e].b == v) r.push_back(e);
  return r;
}

bool GammaC::vanishing(int e) const {
  const auto& x = edges[e];
  return x.w == 2 && nodes[x.a].triple().n == 0 && nodes[x.b].triple().n == 0;
}

std::string GammaC::edge_name(int e) const {
  return nodes[edges[e].a].id + "~" + nodes[edges[e].b].id + "." + std::to_string(e);
}

Star star_of(const GammaC& g, int v) {
  if (g.nodes[v].arrow) throw ValidationError("star of an arrowhead");
  Star s;
  for (int e : g.incident(v)) {
    const auto& x = g.edges[e];
    int far = g.other(e, v);
    int copies = x.loop() ? 2 : 1;
    for (int k = 0; k < copies; ++k) {
      s.legs.push_back({e, far, x.w, g.nodes[far].triple()});
      (x.w == 1 ? s.s : s.t) += 1;
    }
  }
  return s;
}

int delta(const GammaC& g, int v) {
  int d = 0;
  for (auto& e : g.edges) d += (e.a == v) + (e.b == v);
  return d;
}

bool compatible(const Triple& x, const Triple& y, int w) {
  if (w != 1 && w != 2) return false;
  bool same_nnu = x.n == y.n && x.nu == y.nu;
  if (x.m != y.m && !(same_nnu && w == 2)) return false;
  if (!same_nnu && !(x.m == y.m && w == 1)) return false;
  return true;
}

ValidationReport validate_gammaC(const GammaC& g) {
  ValidationReport r;
  for (const auto& v : g.nodes) {
    if (v.arrow) continue;
    if (v.m < 1 || v.nu < 1 || v.n < 0 || v.genus < 0)
      r.structural.push_back("vertex " + v.id + ": weights out of range");
    if (v.m >= 2 && v.genus != 0) r.structural.push_back("vertex " + v.id + ": m>=2 with genus");
  }
  for (int a : g.arrows()) {
    int d = delta(g, a);
    if (d != 1) r.structural.push_back("arrow " + g.nodes[a].id + ": " + std::to_string(d) + " edges");
  }
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    const auto &A = g.nodes[x.a], &B = g.nodes[x.b];
    if (A.arrow && B.arrow) r.structural.push_back("edge " + g.edge_name(e) + " joins two arrows");
    if (!compatible(A.triple(), B.triple(), x.w)) r.compatibility_errors.push_back(e);
    if (x.w == 2 && A.triple().m == 1 && B.triple().m == 1) r.assumption_a_violations.push_back(e);
    if (g.vanishing(e)) r.assumption_b_violations.push_back(e);
  }
  if (!g.nodes.empty() && count_components(g) != 1) r.structural.push_back("graph is disconnected");
  return r;
}

int PlumbGraph::add_vertex(std::string id, std::optional<i64> euler, i64 genus,
                           std::optional<i64> mult) {
  nodes.push_back({std::move(id), false, euler, genus, mult});
  return int(nodes.size()) - 1;
}

int PlumbGraph::add_arrow(std::string id, std::optional<i64> mult) {
  nodes.push_back({std::move(id), true, std::nullopt, 0, mult});
  return int(nodes.size()) - 1;
}

int PlumbGraph::add_edge(int a, int b, int sign) {
  edges.push_back({a, b, sign});
  return int(edges.size()) - 1;
}

void PlumbGraph::add_dash(std::string id, int at) { dashes.push_back({std::move(id), at}); }

int PlumbGraph::find(const std::string& id) const {
  for (int i = 0; i < int(nodes.size()); ++i)
    if (nodes[i].id == id) return i;
  return -1;
}

int PlumbGraph::at(const std::string& id) const {
  int i = find(id);
  if (i < 0) throw ValidationError("unknown node '" + id + "'");
  return i;
}

std::vector<int> PlumbGraph::vertices() const {
  std::vector<int> r;
  for (int i = 0; i < int(nodes.size()); ++i)
    if (!nodes[i].arrow) r.push_back(i);
  return r;
}

std::vector<int> PlumbGraph::arrows() const {
  std::vector<int> r;
  for (int i = 0; i < int(nodes.size()); ++i)
    if (nodes[i].arrow) r.push_back(i);
  return r;
}

std::vector<int> PlumbGraph::incident(int v) const {
  std::vector<int> r;
  for (int e = 0; e < int(edges.size()); ++e)
    if (edges[e].a == v || edges[e].b == v) r.push_back(e);
  return r;
}

int PlumbGraph::degree(int v) const {
  int d = 0;
  for (auto& e : edges) d += (e.a == v) + (e.b == v);
  return d;
}

int PlumbGraph::dash_count(int v) const {
  int c = 0;
  for (auto& d : dashes) c += d.at == v;
  return c;
}

void PlumbGraph::remove_nodes(const std::vector<bool>& kill) {
  std::vector<int> idx(nodes.size(), -1);
  std::vector<PNode> nn;
  for (int i = 0; i < int(nodes.size()); ++i) {
    if (kill[i]) continue;
    idx[i] = int(nn.size());
    nn.push_back(nodes[i]);
  }
  std::vector<PEdge> ne;
  for (auto e : edges) {
    if (idx[e.a] < 0 || idx[e.b] < 0) continue;
    ne.push_back({idx[e.a], idx[e.b], e.sign});
  }
  std::vector<PDash> nd;
  for (auto d : dashes)
    if (idx[d.at] >= 0) nd.push_back({d.id, idx[d.at]});
  nodes = std::move(nn);
  edges = std::move(ne);
  dashes = std::move(nd);
}

std::vector<std::vector<int>> PlumbGraph::components() const {
  int n = int(nodes.size());
  Dsu d(n);
  for (auto& e : edges) d.join(e.a, e.b);
  std::vector<int> slot(n, -1);
  std::vector<std::vector<int>> r;
  for (int i = 0; i < n; ++i) {
    int root = d.find(i);
    if (slot[root] < 0) {
      slot[root] = int(r.size());
      r.emplace_back();
    }
    r[slot[root]].push_back(i);
  }
  return r;
}

Stats graph_stats(const GammaC& g) {
  int k = count_components(g);
  if (k > 1) throw ValidationError("graph_stats: disconnected input");
  Stats s;
  for (const auto& v : g.nodes) {
    if (v.arrow)
      ++s.n_A;
    else {
      ++s.n_W;
      s.g_sum += v.genus;
    }
  }
  for (const auto& e : g.edges)
    if (!g.nodes[e.a].arrow && !g.nodes[e.b].arrow) ++s.n_EW;
  s.c = s.n_EW - s.n_W + k;
  return s;
}

Stats graph_stats(const PlumbGraph& p, bool allow_split) {
  int k = 0;
  for (auto& comp : p.components()) {
    bool has_vertex = false;
    for (int v : comp) has_vertex |= !p.nodes[v].arrow;
    k += has_vertex;
  }
  if (k > 1 && !allow_split) throw ValidationError("graph_stats: disconnected input");
  Stats s;
  for (const auto& v : p.nodes) {
    if (v.arrow)
      ++s.n_A;
    else {
      ++s.n_W;
      s.g_sum += v.genus;
    }
  }
  for (const auto& e : p.edges)
    if (!p.nodes[e.a].arrow && !p.nodes[e.b].arrow) ++s.n_EW;
  s.c = s.n_EW - s.n_W + k;
  return s;
}

namespace {

// Σ ε·m over edges at v, a loop counting twice; nullopt when a neighbour multiplicity is missing
std::optional<i64> neighbour_sum(const PlumbGraph& p, int v) {
  i64 s = 0;
  for (int e : p.incident(v)) {
    const auto& x = p.edges[e];
    const auto& u = p.nodes[p.other(e, v)];
    if (!u.mult) return std::nullopt;
    s = checked_add(s, checked_mul(x.loop() ? 2 * x.sign : x.sign, *u.mult));
  }
  return s;
}

}  // namespace

MultCheck check_multiplicity_system(const PlumbGraph& p) {
  MultCheck r;
  for (int v : p.vertices()) {
    if (p.dash_count(v)) continue;
    const auto& w = p.nodes[v];
    if (!w.euler || !w.mult) throw ComputeError("multiplicity check: vertex " + w.id + " lacks decorations");
    auto s = neighbour_sum(p, v);
    if (!s) throw ComputeError("multiplicity check: neighbour of " + w.id + " lacks a multiplicity");
    if (checked_add(checked_mul(*w.euler, *w.mult), *s) != 0) {
      r.ok = false;
      r.failures.push_back(v);
    }
  }
  return r;
}

PlumbGraph solve_euler_numbers(const PlumbGraph& p) {
  PlumbGraph q = p;
  for (int v : q.vertices()) {
    if (q.dash_count(v)) continue;
    auto& w = q.nodes[v];
    if (!w.mult) {
      if (!w.euler) throw ComputeError("euler solve: vertex " + w.id + " has neither euler nor mult");
      continue;
    }
    auto s = neighbour_sum(q, v);
    if (!s) throw ComputeError("euler solve: neighbour of " + w.id + " lacks a multiplicity");
    if (*w.mult == 0) {
      if (!w.euler) throw ComputeError("euler solve: vertex " + w.id + " has multiplicity 0");
      continue;
    }
    i64 e = exact_div(-*s, *w.mult, ("euler at " + w.id).c_str());
    if (w.euler && *w.euler != e)
      throw ComputeError("euler solve: vertex " + w.id + " has euler " + std::to_string(*w.euler) +
                         ", multiplicities force " + std::to_string(e));
    w.euler = e;
  }
  return q;
}

PlumbGraph strip_to_boundary(const PlumbGraph& p) {
  PlumbGraph q = p;
  std::vector<bool> kill(q.nodes.size());
  for (int i = 0; i < int(q.nodes.size()); ++i) kill[i] = q.nodes[i].arrow;
  q.remove_nodes(kill);
  for (auto& v : q.nodes) v.mult.reset();
  return q;
}

}  // namespace mfb
