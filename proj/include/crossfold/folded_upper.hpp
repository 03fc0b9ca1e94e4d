#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "crossfold/arc_diagram.hpp"
#include "crossfold/hypercube.hpp"
#include "crossfold/rational.hpp"

namespace crossfold {

struct RatPoint {
    Rational x, y;
};

// Straight-line drawing: distinct points, edges as segments between them.
struct CoordinateDrawing {
    std::vector<VertexLabel> vertices;
    std::vector<RatPoint> points;                              // parallel to vertices
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // indices into vertices
};

// FQ_3 drawn as K_{4,4} split across the two axes: the even-weight class at
// (-2,0), (-1,0), (1,0), (2,0) and the odd-weight class at (0,-2), (0,-1),
// (0,1), (0,2), all 16 edges straight. Exactly 4 crossings.
CoordinateDrawing d3_base_drawing();

struct SegmentCrossings {
    CrossingReport report;
    // three-segment concurrences, endpoint-on-interior or collinear-overlap
    // degeneracies; empty for a drawing in general position
    std::vector<std::string> degeneracies;
};

// Exact straight-segment crossing count via integer orientation predicates;
// segments sharing an endpoint never count.
SegmentCrossings count_segment_crossings(const CoordinateDrawing& d);

// The three crossing classes inside one blown-up vertex neighborhood, taken
// from engine measurements of the (n-3)-dimensional arc diagram: nu_red from
// its crossing count, nu_blue from two crossing bunch pairs of 2^{n-3}
// curves, nu_mixed from its cover sums.
struct NeighborhoodBreakdown {
    mpz_class nu_red, nu_blue, nu_mixed;
    mpz_class total() const { return nu_red + nu_blue + nu_mixed; }
};
NeighborhoodBreakdown neighborhood_breakdown(int n);  // n >= 4

mpz_class neighborhood_formula(int n);  // 9*4^{n-4} - (n^2+3n) 2^{n-6}, n >= 4

// Crossing count of the derived FQ_n drawing: 4 for n = 3 (measured on the
// base drawing), else 8 neighborhoods plus 4 * 4^{n-3} bunch-pair crossings.
mpz_class fq_upper_count(int n);  // n >= 3

mpz_class fq_upper_formula(int n);  // 11*2^{2n-5} - (n^2+3n) 2^{n-3}, n >= 3

}  // namespace crossfold
