#pragma once

#include <string>

#include "rectlay/layout.hpp"

namespace rectlay {

struct RenderStyle {
  int scale = 20;  // pixels per grid unit, at least 1
  bool shade_gaps = true;
  bool labels = false;
};

// One <rect> per rectangle, y axis flipped so the layout reads upwards.
// Throws InvalidParameters when scale < 1.
std::string render_svg(const Layout& l, const RenderStyle& style = {});

}  // namespace rectlay
