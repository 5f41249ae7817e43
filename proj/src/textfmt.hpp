#pragma once

// line-oriented key=value text shared by the graph and builder formats

#include "mfb/arith.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mfb::text {

struct Line {
  int no;
  std::vector<std::string> words;
  std::map<std::string, std::string> kv;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto k = raw.find('#'); k != std::string::npos) raw.erase(k);
    std::istringstream ls(raw);
    Line l{no, {}, {}};
    std::string w;
    while (ls >> w) {
      auto k = w.find('=');
      if (k == std::string::npos)
        l.words.push_back(w);
      else
        l.kv[w.substr(0, k)] = w.substr(k + 1);
    }
    if (!l.words.empty() || !l.kv.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] inline void fail(const Line& l, const std::string& why) {
  throw ValidationError("line " + std::to_string(l.no) + ": " + why);
}

inline i64 to_int(const Line& l, const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail(l, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(l, "bad integer '" + s + "'");
  }
}

inline i64 get(const Line& l, const std::string& key, std::optional<i64> dflt = {}) {
  auto it = l.kv.find(key);
  if (it == l.kv.end()) {
    if (dflt) return *dflt;
    fail(l, "missing " + key + "=");
  }
  return to_int(l, it->second);
}

inline void check_keys(const Line& l, std::initializer_list<const char*> allowed) {
  for (auto& [k, v] : l.kv) {
    bool ok = false;
    for (auto a : allowed) ok |= k == a;
    if (!ok) fail(l, "unexpected key " + k);
  }
}

inline void header(const std::vector<Line>& ls, const char* want) {
  if (ls.empty() || ls[0].words.size() != 2 || ls[0].words[0] != want || ls[0].words[1] != "1")
    throw ValidationError(std::string("expected header '") + want + " 1'");
}

}  // namespace mfb::text
