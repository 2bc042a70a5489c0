// SVG diagrams of arc sets.  A render shows the two boundary lines with
// their marked points over a finite index window, every member arc whose
// endpoints fall inside the window, and a three-dot glyph at each end
// where an infinite family escapes.  Output is a deterministic function
// of the inputs, byte for byte.
#pragma once

#include <string>

#include "arcstrip/arcset.hpp"

namespace arcstrip {

struct RenderSpec {
  Window window;
  int width_px = 900;
  int height_px = 300;
  bool show_labels = true;
};

std::string render_svg(const ArcSet& t, const RenderSpec& spec);

}  // namespace arcstrip
