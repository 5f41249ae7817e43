#pragma once

#include "mfb/graph.hpp"

#include <string>

namespace mfb {

GammaC parse_gammaC(const std::string& text);
std::string write_gammaC(const GammaC& g);
PlumbGraph parse_plumb(const std::string& text);
std::string write_plumb(const PlumbGraph& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

GammaC load_gammaC(const std::string& path);
PlumbGraph load_plumb(const std::string& path);

}  // namespace mfb
