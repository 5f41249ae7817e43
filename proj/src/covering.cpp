#include "mfb/covering.hpp"

#include <functional>
#include <numeric>

namespace mfb {

int CoverBase::add_node(PNode n) {
  nodes.push_back(std::move(n));
  return int(nodes.size()) - 1;
}

int CoverBase::add_edge(int a, int b, std::string name) {
  edges.push_back({a, b});
  edge_names.push_back(std::move(name));
  return int(edges.size()) - 1;
}

EdgeLift EdgeLift::direct(int sign) { return {{}, {}, {sign}}; }

EdgeLift EdgeLift::chain(std::vector<i64> euler, std::vector<i64> mult, int sign) {
  size_t n = euler.size() + 1;
  return {std::move(euler), std::move(mult), std::vector<int>(n, sign)};
}

std::string copy_id(const std::string& base, i64 copy) { return base + "@" + std::to_string(copy); }

std::string segment_id(const std::string& edge, i64 copy, int segment) {
  return edge + "@" + std::to_string(copy) + "/" + std::to_string(segment);
}

void check_covering_data(const CoverBase& g, const CoveringData& d) {
  if (d.nv.size() != g.nodes.size() || d.ne.size() != g.edges.size())
    throw ComputeError("covering data size mismatch");
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    if (d.nv[v] < 1) throw ComputeError("covering data: n_v must be positive at " + g.nodes[v].id);
    if (g.nodes[v].arrow && d.nv[v] != 1) throw ComputeError("covering data: arrowhead with n_v>1");
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    if (d.ne[e] < 1 || d.ne[e] % d.nv[a] || d.ne[e] % d.nv[b])
      throw ComputeError("covering data: n_v does not divide n_e on " + g.edge_names[e]);
  }
}

bool covering_unique_check(const CoverBase& g, const CoveringData& d) {
  int n = int(g.nodes.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    if (d.nv[a] <= 1 || d.nv[b] <= 1) continue;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    p[ra] = rb;
  }
  return true;
}

i64 component_count(const CoverBase& g, const CoveringData& d) {
  int n = int(g.nodes.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (auto [a, b] : g.edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) throw ComputeError("component_count: base graph is not a tree");
    p[ra] = rb;
  }
  for (int v = 0; v < n; ++v)
    if (find(v) != find(0)) throw ComputeError("component_count: base graph is not connected");
  return gcd_all(d.nv);
}

CoverResult build_trivial_cover(const CoverBase& g, const CoveringData& d,
                                const std::vector<EdgeLift>& lifts) {
  check_covering_data(g, d);
  if (!covering_unique_check(g, d))
    throw ComputeError("covering is not unique: the n_v>1 part of the base contains a cycle");
  if (lifts.size() != g.edges.size()) throw ComputeError("one lift per base edge is required");
  CoverResult r;
  auto& c = r.cover;
  std::vector<i64> first(g.nodes.size());
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    first[v] = i64(c.nodes.size());
    for (i64 i = 0; i < d.nv[v]; ++i) {
      PNode n = g.nodes[v];
      n.id = copy_id(g.nodes[v].id, i);
      c.nodes.push_back(n);
      r.projection.push_back(g.nodes[v].id);
      r.node_base.push_back(int(v));
      r.node_edge.push_back(-1);
    }
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    const auto& L = lifts[e];
    if (L.euler.size() != L.mult.size() || L.signs.size() != L.euler.size() + 1)
      throw ComputeError("edge lift: length mismatch");
    for (i64 i = 0; i < d.ne[e]; ++i) {
      int prev = int(first[a] + i % d.nv[a]);
      for (size_t k = 0; k < L.euler.size(); ++k) {
        int s = c.add_vertex(segment_id(g.edge_names[e], i, int(k) + 1), L.euler[k], 0, L.mult[k]);
        r.projection.push_back(g.edge_names[e]);
        r.node_base.push_back(-1);
        r.node_edge.push_back(int(e));
        c.add_edge(prev, s, L.signs[k]);
        r.edge_base.push_back(int(e));
        prev = s;
      }
      c.add_edge(prev, int(first[b] + i % d.nv[b]), L.signs.back());
      r.edge_base.push_back(int(e));
    }
  }
  return r;
}

}  // namespace mfb
