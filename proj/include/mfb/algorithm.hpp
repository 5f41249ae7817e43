#pragma once

#include "mfb/covering.hpp"
#include "mfb/graph.hpp"

#include <map>
#include <vector>

namespace mfb {

GammaC blowup_assumption_a(const GammaC& g);
GammaC blowup_assumption_b(const GammaC& g);
// Assumption A always, Assumption B when requested
GammaC prepare(const GammaC& g, bool blowup_b);

// n_v per node and n_e per edge of g
CoveringData covering_data_main(const GammaC& g);

struct AlgorithmOutput {
  PlumbGraph graph;
  CoverResult cover;
};

PlumbGraph main_algorithm(const GammaC& g);
AlgorithmOutput main_algorithm_full(const GammaC& g);

struct CollapseRecord {
  std::vector<int> members;
  i64 n_gamma = 1;
  i64 m_gamma = 1;
  i64 g_gamma = 0;
  std::map<int, i64> hat_t;
};

struct Collapsed {
  GammaC ghat;
  std::vector<CollapseRecord> records;
  // record index per node of g, -1 outside every collapsed subgraph
  std::vector<int> record_of;
};

Collapsed collapse_subtrees(const GammaC& g);
PlumbGraph collapsing_algorithm(const GammaC& g);
AlgorithmOutput collapsing_algorithm_full(const GammaC& g);

enum class G1Mode { resolution, boundary, boundary_minus_vg };

PlumbGraph extract_g1(const GammaC& g, G1Mode mode);
std::vector<PlumbGraph> extract_g2(const GammaC& g);

struct Branch {
  std::vector<int> vertices;
  i64 d = 1;
  std::vector<int> cutting_edges;
  std::vector<i64> d_e;
  i64 n_branches = 0;
  i64 gluing_tori = 0;
};

// one record per connected component of the m>=2 part of g; indices refer to prepare(g, false)
std::vector<Branch> transversal_data(const GammaC& g);
// same, for a graph that already satisfies Assumption A
std::vector<Branch> branches_of(const GammaC& prepared);

// covering indices n_w and n_e of the Main Algorithm
i64 vertex_cover_index(const GammaC& g, int w);
i64 edge_cover_index(const GammaC& g, int e);
bool is_cutting(const GammaC& g, int e);

}  // namespace mfb
