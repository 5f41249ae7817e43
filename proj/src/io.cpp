#include "mfb/io.hpp"

#include "textfmt.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace mfb {

namespace {

using namespace text;

void unique_id(const Line& l, const std::map<std::string, int>& seen, const std::string& id) {
  if (seen.count(id)) fail(l, "duplicate id " + id);
}

}  // namespace

GammaC parse_gammaC(const std::string& text) {
  auto ls = tokenize(text);
  header(ls, "gammaC");
  GammaC g;
  std::map<std::string, int> ids;
  for (size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    const auto& kw = l.words.empty() ? std::string() : l.words[0];
    if (kw == "vertex") {
      if (l.words.size() != 2) fail(l, "vertex needs one id");
      check_keys(l, {"m", "n", "nu", "g"});
      unique_id(l, ids, l.words[1]);
      ids[l.words[1]] = g.add_vertex(l.words[1], get(l, "m"), get(l, "n"), get(l, "nu"), get(l, "g", 0));
    } else if (kw == "arrow") {
      if (l.words.size() != 2) fail(l, "arrow needs one id");
      check_keys(l, {});
      unique_id(l, ids, l.words[1]);
      ids[l.words[1]] = g.add_arrow(l.words[1]);
    } else if (kw == "edge") {
      if (l.words.size() != 3) fail(l, "edge needs two ids");
      check_keys(l, {"w"});
      for (int k = 1; k <= 2; ++k)
        if (!ids.count(l.words[k])) fail(l, "unknown id " + l.words[k]);
      i64 w = get(l, "w");
      if (w != 1 && w != 2) fail(l, "weight must be 1 or 2");
      g.add_edge(ids[l.words[1]], ids[l.words[2]], int(w));
    } else {
      fail(l, "unknown record '" + kw + "'");
    }
  }
  return g;
}

std::string write_gammaC(const GammaC& g) {
  std::ostringstream o;
  o << "gammaC 1\n";
  for (const auto& v : g.nodes) {
    if (v.arrow) {
      o << "arrow " << v.id << "\n";
      continue;
    }
    o << "vertex " << v.id << " m=" << v.m << " n=" << v.n << " nu=" << v.nu;
    if (v.genus) o << " g=" << v.genus;
    o << "\n";
  }
  for (const auto& e : g.edges)
    o << "edge " << g.nodes[e.a].id << " " << g.nodes[e.b].id << " w=" << e.w << "\n";
  return o.str();
}

PlumbGraph parse_plumb(const std::string& text) {
  auto ls = tokenize(text);
  header(ls, "plumb");
  PlumbGraph p;
  std::map<std::string, int> ids;
  std::map<std::string, int> dash_ids;
  for (size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    const auto& kw = l.words.empty() ? std::string() : l.words[0];
    auto opt = [&](const char* k) -> std::optional<i64> {
      if (!l.kv.count(k)) return std::nullopt;
      return to_int(l, l.kv.at(k));
    };
    if (kw == "vertex") {
      if (l.words.size() != 2) fail(l, "vertex needs one id");
      check_keys(l, {"e", "g", "m"});
      unique_id(l, ids, l.words[1]);
      i64 g = get(l, "g", 0);
      if (g < 0) fail(l, "negative genus");
      auto m = opt("m");
      if (m && *m < 0) fail(l, "negative multiplicity");
      ids[l.words[1]] = p.add_vertex(l.words[1], opt("e"), g, m);
    } else if (kw == "arrow") {
      if (l.words.size() != 2) fail(l, "arrow needs one id");
      check_keys(l, {"m"});
      unique_id(l, ids, l.words[1]);
      ids[l.words[1]] = p.add_arrow(l.words[1], opt("m"));
    } else if (kw == "dasharrow") {
      if (l.words.size() != 2) fail(l, "dasharrow needs one id");
      check_keys(l, {"at"});
      if (dash_ids.count(l.words[1])) fail(l, "duplicate dash id " + l.words[1]);
      auto it = l.kv.find("at");
      if (it == l.kv.end() || !ids.count(it->second)) fail(l, "dasharrow needs at=<vertex>");
      int at = ids[it->second];
      if (p.nodes[at].arrow) fail(l, "dasharrow on an arrowhead");
      dash_ids[l.words[1]] = 1;
      p.add_dash(l.words[1], at);
    } else if (kw == "edge") {
      if (l.words.size() != 3) fail(l, "edge needs two ids");
      check_keys(l, {"s"});
      for (int k = 1; k <= 2; ++k)
        if (!ids.count(l.words[k])) fail(l, "unknown id " + l.words[k]);
      auto it = l.kv.find("s");
      if (it == l.kv.end() || (it->second != "+" && it->second != "-")) fail(l, "edge needs s=+ or s=-");
      p.add_edge(ids[l.words[1]], ids[l.words[2]], it->second == "+" ? 1 : -1);
    } else {
      fail(l, "unknown record '" + kw + "'");
    }
  }
  return p;
}

std::string write_plumb(const PlumbGraph& p) {
  std::ostringstream o;
  o << "plumb 1\n";
  for (const auto& v : p.nodes) {
    if (v.arrow) {
      o << "arrow " << v.id;
      if (v.mult) o << " m=" << *v.mult;
      o << "\n";
      continue;
    }
    o << "vertex " << v.id;
    if (v.euler) o << " e=" << *v.euler;
    if (v.genus) o << " g=" << v.genus;
    if (v.mult) o << " m=" << *v.mult;
    o << "\n";
  }
  for (const auto& d : p.dashes) o << "dasharrow " << d.id << " at=" << p.nodes[d.at].id << "\n";
  for (const auto& e : p.edges)
    o << "edge " << p.nodes[e.a].id << " " << p.nodes[e.b].id << " s=" << (e.sign > 0 ? "+" : "-") << "\n";
  return o.str();
}

std::string read_file(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

GammaC load_gammaC(const std::string& path) { return parse_gammaC(read_file(path)); }
PlumbGraph load_plumb(const std::string& path) { return parse_plumb(read_file(path)); }

}  // namespace mfb
