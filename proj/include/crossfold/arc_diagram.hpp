#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "crossfold/rational.hpp"

namespace crossfold {

inline constexpr int kMaxGamma = 16;          // build guard
inline constexpr int kMaxGammaPairwise = 10;  // pair-multiplicity scan guard

enum class HalfPlane : std::uint8_t { upper, lower };

// One x-monotone arc, owned by a graph edge. Endpoints are integer vertex
// positions or the edge's axis-crossing gap point.
struct ArcSegment {
    HalfPlane half;
    Rational left, right;  // left < right
    std::uint32_t edge;    // index into ArcDrawing::edges
};

struct ArcEdge {
    std::uint64_t u, v;  // decimal vertex labels, u < v
};

// The recursive two-page drawing of Q_n: vertex x sits at x-axis position
// equal to its decimal value; every edge is a single upper arc or an
// upper+lower pair meeting at a gap point strictly between vertex positions.
//
// Construction, level by level: two translated copies of the (n-1)-drawing
// side by side, then for i in 0..2^{n-1}-1 a level-n curve joining position i
// to 2^{n-1}+i. Curve 0 is one upper arc [0, 2^{n-1}]; curve i >= 1 is an
// upper arc [i, g_i] plus a lower arc [g_i, 2^{n-1}+i] with the gap points
//   g_i = (2^{n-1} - 1) + (2^{n-1} - i) / (2^{n-1} + 1)
// strictly decreasing in i, which nests the level-n curves in both
// half-planes and keeps the bunch crossing-free.
struct ArcDrawing {
    int n = 0;
    std::vector<ArcEdge> edges;
    std::vector<ArcSegment> segments;
    std::vector<std::uint32_t> vertex_position;  // indexed by decimal label
};

ArcDrawing build_gamma(int n, int max_n = kMaxGamma);

struct CrossingReport {
    std::int64_t total = 0;
    bool has_pairs = false;
    // unordered edge pairs (a < b) -> number of crossings between them
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> pair_multiplicity;
};

// Exact crossing count. Two same-half-plane arcs cross iff their endpoints
// strictly interleave (a < c < b < d); shared endpoints never cross.
// The total is always computed by an O(S log S) sorted-interleave sweep;
// with_pairs additionally runs the O(S^2) pairwise scan and cross-checks the
// two totals. The one-argument overload enables pairs for n <= 10.
CrossingReport count_crossings(const ArcDrawing& d);
CrossingReport count_crossings(const ArcDrawing& d, bool with_pairs);

// Per-vertex counts of arcs passing strictly over / under each vertex.
struct CoverProfile {
    std::vector<std::int64_t> upper, lower;  // indexed by axis position
    std::int64_t sum_upper = 0, sum_lower = 0;
};
CoverProfile cover_profile(const ArcDrawing& d);

// Closed forms the engine must reproduce exactly.
mpz_class gamma_cover_sum_formula(int n);  // 4^{n-1} - (n+1) 2^{n-2}
mpz_class gamma_crossing_formula(int n);   // 4^{n-1} - (n^2+n+2) 2^{n-3}

// Crossings between two interleaved bunches of m parallel curves: m(m-1)/2.
mpz_class bunch_crossings(const mpz_class& m);

struct Violation {
    std::uint32_t edge_a = 0, edge_b = 0;  // meaningful where a pair is involved
    std::string what;
};

// Good-drawing validation: no pair crosses twice, adjacent edges never cross,
// every edge owns one arc or an upper/lower pair joined at its gap point, and
// same-half-plane endpoint coordinates collide only at shared graph vertices.
// Requires a report with pair multiplicities.
std::vector<Violation> validate_good(const ArcDrawing& d, const CrossingReport& r);

struct PlacementMismatch {
    std::uint64_t label = 0;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
};

// Checks position(x) = decimal(x) and position(complement x) = 2^n - 1 - decimal(x).
std::optional<PlacementMismatch> verify_placement(const ArcDrawing& d);

}  // namespace crossfold
