#pragma once

#include "mfb/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfb {

// weight triple (m;n,nu); arrowheads carry (1;0,1)
struct Triple {
  i64 m = 1, n = 0, nu = 1;
  bool operator==(const Triple&) const = default;
};

struct GNode {
  std::string id;
  bool arrow = false;
  i64 m = 1, n = 0, nu = 1, genus = 0;
  Triple triple() const { return arrow ? Triple{1, 0, 1} : Triple{m, n, nu}; }
};

struct GEdge {
  int a, b;
  int w;
  bool loop() const { return a == b; }
};

class GammaC {
 public:
  std::vector<GNode> nodes;
  std::vector<GEdge> edges;

  int add_vertex(std::string id, i64 m, i64 n, i64 nu, i64 genus = 0);
  int add_arrow(std::string id);
  int add_edge(int a, int b, int w);
  int find(const std::string& id) const;
  int at(const std::string& id) const;
  std::vector<int> vertices() const;
  std::vector<int> arrows() const;
  std::vector<int> incident(int v) const;
  int other(int e, int v) const { return edges[e].a == v ? edges[e].b : edges[e].a; }
  bool vanishing(int e) const;
  std::string edge_name(int e) const;
};

struct Leg {
  int edge;
  int far;
  int w;
  Triple t;
};

struct Star {
  int s = 0, t = 0;
  std::vector<Leg> legs;
};

Star star_of(const GammaC& g, int v);
// number of legs, a loop counts twice
int delta(const GammaC& g, int v);

bool compatible(const Triple& x, const Triple& y, int w);

struct ValidationReport {
  std::vector<int> assumption_a_violations;
  std::vector<int> assumption_b_violations;
  std::vector<int> compatibility_errors;
  std::vector<std::string> structural;
  bool ok() const { return compatibility_errors.empty() && structural.empty(); }
};

ValidationReport validate_gammaC(const GammaC& g);

struct PNode {
  std::string id;
  bool arrow = false;
  std::optional<i64> euler;
  i64 genus = 0;
  std::optional<i64> mult;
};

struct PEdge {
  int a, b;
  int sign;
  bool loop() const { return a == b; }
};

struct PDash {
  std::string id;
  int at;
};

class PlumbGraph {
 public:
  std::vector<PNode> nodes;
  std::vector<PEdge> edges;
  std::vector<PDash> dashes;

  int add_vertex(std::string id, std::optional<i64> euler = {}, i64 genus = 0,
                 std::optional<i64> mult = {});
  int add_arrow(std::string id, std::optional<i64> mult = {});
  int add_edge(int a, int b, int sign);
  void add_dash(std::string id, int at);
  int find(const std::string& id) const;
  int at(const std::string& id) const;
  std::vector<int> vertices() const;
  std::vector<int> arrows() const;
  std::vector<int> incident(int v) const;
  int other(int e, int v) const { return edges[e].a == v ? edges[e].b : edges[e].a; }
  // edge endpoints at v, loops count twice
  int degree(int v) const;
  int dash_count(int v) const;
  // drops nodes with kill[i] set together with their edges and dash-arrows
  void remove_nodes(const std::vector<bool>& kill);
  std::vector<std::vector<int>> components() const;
};

struct Stats {
  i64 c = 0, g_sum = 0, n_W = 0, n_EW = 0, n_A = 0;
};

// throws on disconnected input unless allow_split is set
Stats graph_stats(const GammaC& g);
Stats graph_stats(const PlumbGraph& p, bool allow_split = false);

struct MultCheck {
  bool ok = true;
  std::vector<int> failures;
};

MultCheck check_multiplicity_system(const PlumbGraph& p);
PlumbGraph solve_euler_numbers(const PlumbGraph& p);
// graph of the ambient manifold: arrowheads and multiplicities removed
PlumbGraph strip_to_boundary(const PlumbGraph& p);

}  // namespace mfb
