#pragma once

#include <string>

#include "psb/census.hpp"
#include "psb/construction.hpp"

namespace psb {

struct RenderOptions {
    int width = 800;        // pixel width; height follows the aspect ratio
    bool markers = false;   // mark crossings of multiplicity >= marker_min
    int marker_min = 3;
    int threads = 1;
};

// SVG 1.1 document: one path per line, stroke color per bundle, coordinates
// from 30-digit decimal approximations of the exact values. Arrangements over
// 600 lines are refused.
std::string render_svg(const Arrangement& arr, const RenderOptions& opt = {});

}  // namespace psb
