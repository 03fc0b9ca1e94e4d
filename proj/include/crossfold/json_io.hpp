#pragma once

#include <json.hpp>

#include "crossfold/arc_diagram.hpp"
#include "crossfold/bounds.hpp"
#include "crossfold/congestion.hpp"
#include "crossfold/folded_upper.hpp"

namespace crossfold {

using Json = nlohmann::ordered_json;

// {n, segments:[{edge:[u,v], half:"upper"|"lower", left:"p/q", right:"p/q"}]}
Json arc_drawing_json(const ArcDrawing& d);

// {points:{label:[x,y]}, edges:[[u,v]]}, labels as bit strings
Json coordinate_drawing_json(const CoordinateDrawing& d);

// {n, classes:{"0":{cg,count}, "t":{cg,count}}, max, bound1, bound1_holds}
Json census_json(const CongestionCensus& c);

// exact integers as strings, rationals as "p/q", reals with 15 significant
// digits plus a rounding-direction marker
Json bound_report_json(const BoundReport& r);

std::string format_real15(double v);

}  // namespace crossfold
