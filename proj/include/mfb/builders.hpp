#pragma once

#include "mfb/cyclo.hpp"
#include "mfb/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace mfb {

// eulers, genera and multiplicities of an embedded resolution of a plane curve germ; arrows carry mult 1
void check_plane_resolution(const PlumbGraph& res);

GammaC build_cylinder(const PlumbGraph& res);

struct CurveComponent {
  std::string id;
  i64 degree = 1;
  i64 genus = 0;
};

struct SingularPoint {
  std::string id;
  PlumbGraph local;
  // local arrow id -> component id
  std::map<std::string, std::string> branch_map;
};

struct CurveData {
  i64 d = 0;
  std::vector<CurveComponent> components;
  std::vector<SingularPoint> points;
};

GammaC build_homogeneous(const CurveData& data);

struct ArrangementPoint {
  std::vector<int> lines;
};

GammaC build_arrangement(i64 d, const std::vector<ArrangementPoint>& points);
// (t-1)^{|points|} · ∏ (t^{(m_j,d)}-1)^{m_j-2}
CycloPoly arrangement_charpoly(i64 d, const std::vector<ArrangementPoint>& points);

PlumbGraph build_xayb(i64 mu_tilde, i64 I, i64 a, i64 b);

// data files: see README
CurveData parse_curve_data(const std::string& text, const std::string& base_dir);
std::pair<i64, std::vector<ArrangementPoint>> parse_arrangement(const std::string& text);

}  // namespace mfb
