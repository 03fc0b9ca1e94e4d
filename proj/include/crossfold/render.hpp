#pragma once

#include <cstdint>
#include <string>

#include "crossfold/arc_diagram.hpp"
#include "crossfold/folded_upper.hpp"

namespace crossfold {

inline constexpr int kMaxRenderGamma = 8;

// Arc diagram as SVG 1.1: labeled dots on a horizontal axis, arcs bulging
// above/below with height proportional to span, caption carrying the exact
// crossing count (never derived from pixel geometry).
std::string render_gamma_svg(const ArcDrawing& d, std::int64_t crossings);

// The axis-cross base drawing with straight segments.
std::string render_d3_svg(const CoordinateDrawing& d, std::int64_t crossings);

}  // namespace crossfold
