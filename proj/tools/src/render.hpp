#pragma once

#include "schottky/dimension.hpp"

#include <string>

namespace schottky::cli {

struct RenderOptions {
  WordWindow window{2, 3};
  std::size_t depth = 2;
  int width = 1200;
  bool color_by_level = true;
  Backend backend;
};

// SVG with one <circle> per disk of levels 1..depth, drawn over the real
// axis. Radii below 0.1 px become fixed-size markers of class "tiny".
std::string render_svg(const GeneratorSchedule& schedule, const RenderOptions& options);

}  // namespace schottky::cli
