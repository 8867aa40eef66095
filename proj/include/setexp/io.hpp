#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "setexp/numeric_expectation.hpp"
#include "setexp/random_set.hpp"

namespace setexp {

struct Instance {
  ScenarioSpace space = ScenarioSpace::uniform(1);
  RepresentingFamily family = RepresentingFamily::expectation();
  std::map<std::string, RandomConvexSet> sets;
  std::map<std::string, RandomVector2> vectors;
  std::map<std::string, RandomScalar> scalars;
  std::map<std::string, ConvexSet2> shapes;
  std::map<std::string, std::vector<ConvexSet2>> samples;
  std::size_t grid_size = 3600;
  std::uint64_t seed = 0;
};

Instance parse_instance(std::string_view text);

// Standalone pieces of the instance schema.
Cone2 parse_cone(std::string_view json_text);
ConvexSet2 parse_set(std::string_view json_text);

std::string render_json(const ConvexSet2& s);
std::string render_json(const Cone2& c);
// ux,uy,support rows over the given directions
std::string render_csv(const ConvexSet2& s, std::span<const Vec2> dirs);

struct Bbox {
  double x0 = -5.0, y0 = -5.0, x1 = 5.0, y1 = 5.0;
};
Bbox parse_bbox(std::string_view text);  // "x0,y0,x1,y1"

struct SvgLayer {
  ConvexSet2 set;
  std::string fill;
  std::string stroke;
  double opacity = 0.5;
  std::string label;
};
std::string render_svg(std::span<const SvgLayer> layers, const Bbox& box);

}  // namespace setexp
