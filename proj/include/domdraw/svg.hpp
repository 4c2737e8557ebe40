#pragma once

#include <string>

#include "domdraw/dag.hpp"
#include "domdraw/drawing.hpp"

namespace domdraw {

struct SvgOptions {
    int cell = 48;
    int radius = 9;
    bool labels = true;
    // Draw a dashed marker for every falsely implied pair.
    bool highlight_fips = false;
};

// Two-dimensional drawings only: vertex v is placed at its ranks, the
// second dimension growing upwards.
std::string render_svg(const Dag& g, const Drawing& dr, const SvgOptions& opts = {});

}  // namespace domdraw
