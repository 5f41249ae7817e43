#pragma once

#include "mfb/graph.hpp"

#include <string>
#include <vector>

namespace mfb {

// base graph of a cyclic covering; node templates carry the decorations of every copy
struct CoverBase {
  std::vector<PNode> nodes;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_names;
  int add_node(PNode n);
  int add_edge(int a, int b, std::string name);
};

struct CoveringData {
  std::vector<i64> nv;
  std::vector<i64> ne;
};

// the string inserted above every lift of one edge; empty lists give a direct edge
struct EdgeLift {
  std::vector<i64> euler;
  std::vector<i64> mult;
  // one sign per segment, euler.size()+1 entries
  std::vector<int> signs;
  static EdgeLift direct(int sign);
  static EdgeLift chain(std::vector<i64> euler, std::vector<i64> mult, int sign);
};

struct CoverResult {
  PlumbGraph cover;
  // base node id or base edge name per cover node
  std::vector<std::string> projection;
  // base node (or -1) and base edge (or -1) per cover node, base edge per cover edge
  std::vector<int> node_base, node_edge, edge_base;
};

void check_covering_data(const CoverBase& g, const CoveringData& d);
bool covering_unique_check(const CoverBase& g, const CoveringData& d);
i64 component_count(const CoverBase& g, const CoveringData& d);
CoverResult build_trivial_cover(const CoverBase& g, const CoveringData& d,
                                const std::vector<EdgeLift>& lifts);

std::string copy_id(const std::string& base, i64 copy);
std::string segment_id(const std::string& edge, i64 copy, int segment);

}  // namespace mfb
