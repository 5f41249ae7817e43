#include "mfb/builders.hpp"

#include "mfb/io.hpp"
#include "textfmt.hpp"

#include <filesystem>
#include <set>

namespace mfb {

void check_plane_resolution(const PlumbGraph& res) {
  if (res.vertices().empty()) throw ValidationError("resolution graph has no vertex");
  if (!res.dashes.empty()) throw ValidationError("resolution graph carries dash-arrows");
  for (const auto& n : res.nodes) {
    if (!n.mult) throw ValidationError("resolution graph: " + n.id + " has no multiplicity");
    if (n.arrow && *n.mult != 1) throw ValidationError("resolution graph: arrow " + n.id + " must have multiplicity 1");
    if (!n.arrow && !n.euler) throw ValidationError("resolution graph: " + n.id + " has no euler number");
    if (*n.mult <= 0) throw ValidationError("resolution graph: " + n.id + " has non-positive multiplicity");
  }
  for (const auto& e : res.edges)
    if (e.sign != 1) throw ValidationError("resolution graph: edges must be +");
  if (!check_multiplicity_system(res).ok) throw ValidationError("resolution graph: multiplicity system fails");
  if (res.components().size() != 1) throw ValidationError("resolution graph is disconnected");
}

GammaC build_cylinder(const PlumbGraph& res) {
  check_plane_resolution(res);
  GammaC g;
  std::vector<int> idx(res.nodes.size());
  for (size_t i = 0; i < res.nodes.size(); ++i) {
    const auto& n = res.nodes[i];
    idx[i] = n.arrow ? g.add_arrow(n.id) : g.add_vertex(n.id, *n.mult, 0, 1, n.genus);
  }
  for (const auto& e : res.edges) g.add_edge(idx[e.a], idx[e.b], 2);
  return g;
}

GammaC build_homogeneous(const CurveData& data) {
  if (data.d <= 0) throw ValidationError("degree must be positive");
  GammaC g;
  std::map<std::string, int> comp;
  i64 total = 0;
  for (const auto& c : data.components) {
    if (c.degree <= 0 || c.genus < 0) throw ValidationError("component " + c.id + " has bad degree or genus");
    if (comp.count(c.id)) throw ValidationError("duplicate component " + c.id);
    total += c.degree;
    int v = g.add_vertex(c.id, 1, data.d, 1, c.genus);
    comp[c.id] = v;
    for (i64 k = 0; k < c.degree; ++k) g.add_edge(v, g.add_arrow(c.id + ">" + std::to_string(k)), 1);
  }
  if (total != data.d) throw ValidationError("component degrees sum to " + std::to_string(total) + ", not d");
  for (const auto& p : data.points) {
    check_plane_resolution(p.local);
    std::vector<int> idx(p.local.nodes.size(), -1);
    for (int v : p.local.vertices()) {
      const auto& n = p.local.nodes[v];
      idx[v] = g.add_vertex(p.id + "." + n.id, *n.mult, data.d, 1, n.genus);
    }
    for (int a : p.local.arrows()) {
      auto it = p.branch_map.find(p.local.nodes[a].id);
      if (it == p.branch_map.end())
        throw ValidationError("point " + p.id + ": branch map misses arrow " + p.local.nodes[a].id);
      auto c = comp.find(it->second);
      if (c == comp.end()) throw ValidationError("point " + p.id + ": unknown component " + it->second);
      idx[a] = c->second;
    }
    for (const auto& [arrow, c] : p.branch_map) {
      int a = p.local.find(arrow);
      if (a < 0 || !p.local.nodes[a].arrow) throw ValidationError("point " + p.id + ": " + arrow + " is not an arrow");
    }
    for (const auto& e : p.local.edges) {
      if (p.local.nodes[e.a].arrow && p.local.nodes[e.b].arrow)
        throw ValidationError("point " + p.id + ": local graph without vertex between arrows");
      g.add_edge(idx[e.a], idx[e.b], 2);
    }
  }
  auto rep = validate_gammaC(g);
  if (!rep.ok()) throw ValidationError("homogeneous builder produced an invalid graph");
  return g;
}

namespace {

void check_arrangement(i64 d, const std::vector<ArrangementPoint>& points) {
  if (d < 2) throw ValidationError("arrangement needs at least two lines");
  std::vector<std::vector<int>> seen(d, std::vector<int>(d, 0));
  for (size_t j = 0; j < points.size(); ++j) {
    const auto& ls = points[j].lines;
    if (ls.size() < 2) throw ValidationError("point " + std::to_string(j) + " lies on fewer than two lines");
    std::set<int> u(ls.begin(), ls.end());
    if (u.size() != ls.size()) throw ValidationError("point " + std::to_string(j) + " repeats a line");
    for (int l : ls)
      if (l < 0 || l >= d) throw ValidationError("point " + std::to_string(j) + ": line index out of range");
    for (int x : ls)
      for (int y : ls)
        if (x < y) ++seen[x][y];
  }
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y)
      if (seen[x][y] != 1)
        throw ValidationError("lines " + std::to_string(x) + " and " + std::to_string(y) + " meet in " +
                              std::to_string(seen[x][y]) + " listed points");
}

}  // namespace

GammaC build_arrangement(i64 d, const std::vector<ArrangementPoint>& points) {
  check_arrangement(d, points);
  GammaC g;
  std::vector<int> line(d);
  for (i64 l = 0; l < d; ++l) {
    line[l] = g.add_vertex("L" + std::to_string(l), 1, d, 1);
    g.add_edge(line[l], g.add_arrow("a" + std::to_string(l)), 1);
  }
  for (size_t j = 0; j < points.size(); ++j) {
    int v = g.add_vertex("P" + std::to_string(j), i64(points[j].lines.size()), d, 1);
    for (int l : points[j].lines) g.add_edge(v, line[l], 2);
  }
  return g;
}

CycloPoly arrangement_charpoly(i64 d, const std::vector<ArrangementPoint>& points) {
  check_arrangement(d, points);
  CycloPoly p = CycloPoly::tk(1, i64(points.size()));
  for (const auto& pt : points) {
    i64 m = i64(pt.lines.size());
    p *= CycloPoly::tk(gcd(m, d), m - 2);
  }
  return p;
}

PlumbGraph build_xayb(i64 mu_tilde, i64 I, i64 a, i64 b) {
  if (a <= 0 || b <= 0 || gcd(a, b) != 1) throw ValidationError("xayb needs coprime positive a, b");
  if (I < 0 || mu_tilde < 0) throw ValidationError("xayb needs I >= 0 and mu_tilde >= 0");
  PlumbGraph g;
  int c = g.add_vertex("c", I, mu_tilde);
  auto legs = [&](const std::vector<i64>& cf, const std::string& tag) {
    for (i64 k = 0; k < I; ++k) {
      int prev = c;
      for (size_t i = cf.size() - 1; i >= 1; --i) {
        int v = g.add_vertex(tag + std::to_string(k) + "." + std::to_string(i), cf[i]);
        g.add_edge(prev, v, 1);
        prev = v;
      }
    }
  };
  legs(hirzebruch_cf(a, b), "p");
  legs(hirzebruch_cf(b, a), "q");
  return g;
}

CurveData parse_curve_data(const std::string& content, const std::string& base_dir) {
  using namespace text;
  auto ls = tokenize(content);
  header(ls, "homogeneous");
  CurveData data;
  for (size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    if (l.words.empty()) fail(l, "missing record kind");
    const std::string& kind = l.words[0];
    if (kind == "degree") {
      if (l.words.size() != 2) fail(l, "degree line is 'degree <d>'");
      data.d = to_int(l, l.words[1]);
    } else if (kind == "component") {
      check_keys(l, {"deg", "g"});
      if (l.words.size() != 2) fail(l, "component line needs one id");
      data.components.push_back({l.words[1], get(l, "deg"), get(l, "g", 0)});
    } else if (kind == "point") {
      check_keys(l, {"graph", "map"});
      if (l.words.size() != 2 || !l.kv.count("graph") || !l.kv.count("map")) fail(l, "point line needs id, graph=, map=");
      SingularPoint p;
      p.id = l.words[1];
      std::filesystem::path path = l.kv.at("graph");
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      p.local = load_plumb(path.string());
      std::stringstream ss(l.kv.at("map"));
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto k = item.find(':');
        if (k == std::string::npos) fail(l, "map entries are arrow:component");
        p.branch_map[item.substr(0, k)] = item.substr(k + 1);
      }
      data.points.push_back(std::move(p));
    } else {
      fail(l, "unknown record '" + kind + "'");
    }
  }
  return data;
}

std::pair<i64, std::vector<ArrangementPoint>> parse_arrangement(const std::string& content) {
  using namespace text;
  auto ls = tokenize(content);
  header(ls, "arrangement");
  i64 d = 0;
  std::vector<ArrangementPoint> pts;
  for (size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    if (l.words.empty()) fail(l, "missing record kind");
    if (l.words[0] == "degree") {
      if (l.words.size() != 2) fail(l, "degree line is 'degree <d>'");
      d = to_int(l, l.words[1]);
    } else if (l.words[0] == "point") {
      check_keys(l, {"lines", "m"});
      if (!l.kv.count("lines")) fail(l, "point needs lines=");
      ArrangementPoint p;
      std::stringstream ss(l.kv.at("lines"));
      std::string item;
      while (std::getline(ss, item, ',')) p.lines.push_back(int(to_int(l, item)));
      if (l.kv.count("m") && get(l, "m") != i64(p.lines.size())) fail(l, "m= disagrees with the line count");
      pts.push_back(std::move(p));
    } else {
      fail(l, "unknown record '" + l.words[0] + "'");
    }
  }
  return {d, pts};
}

}  // namespace mfb
