#include "crossfold/folded_upper.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "crossfold/bignum.hpp"

namespace crossfold {

namespace {

int sign(const Rational& r) { return r.num() < 0 ? -1 : (r.num() > 0 ? 1 : 0); }

// orientation of c relative to the directed line a -> b
int orient(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign(det);
}

bool on_segment_interior(const RatPoint& a, const RatPoint& b, const RatPoint& p) {
    if (orient(a, b, p) != 0) return false;
    bool inside_x = (std::min(a.x, b.x) < p.x && p.x < std::max(a.x, b.x));
    bool inside_y = (std::min(a.y, b.y) < p.y && p.y < std::max(a.y, b.y));
    if (a.x == b.x) return a.x == p.x && inside_y;
    return inside_x;
}

// proper interior intersection point of ab and cd (caller guarantees one exists)
RatPoint intersection_point(const RatPoint& a, const RatPoint& b, const RatPoint& c,
                            const RatPoint& d) {
    Rational denom = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    Rational t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / denom;
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace

CoordinateDrawing d3_base_drawing() {
    CoordinateDrawing d;
    const char* even[] = {"000", "011", "101", "110"};
    const char* odd[] = {"001", "010", "100", "111"};
    const std::int64_t axis[] = {-2, -1, 1, 2};
    for (int i = 0; i < 4; ++i) {
        d.vertices.push_back(VertexLabel::from_bits(even[i]));
        d.points.push_back({Rational(axis[i]), Rational(0)});
    }
    for (int i = 0; i < 4; ++i) {
        d.vertices.push_back(VertexLabel::from_bits(odd[i]));
        d.points.push_back({Rational(0), Rational(axis[i])});
    }
    for (std::uint32_t i = 0; i < d.vertices.size(); ++i)
        for (std::uint32_t j = i + 1; j < d.vertices.size(); ++j)
            if (fq_adjacent(d.vertices[i], d.vertices[j])) d.edges.push_back({i, j});
    return d;
}

SegmentCrossings count_segment_crossings(const CoordinateDrawing& d) {
    SegmentCrossings out;
    out.report.has_pairs = true;

    struct RatPointLess {
        bool operator()(const RatPoint& a, const RatPoint& b) const {
            return a.x != b.x ? a.x < b.x : a.y < b.y;
        }
    };
    std::map<RatPoint, std::vector<std::uint32_t>, RatPointLess> meeting_points;

    for (std::uint32_t i = 0; i < d.edges.size(); ++i) {
        auto [a1, b1] = d.edges[i];
        const RatPoint& p1 = d.points[a1];
        const RatPoint& q1 = d.points[b1];
        for (std::uint32_t j = i + 1; j < d.edges.size(); ++j) {
            auto [a2, b2] = d.edges[j];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) {
                // shared endpoint; still flag the other endpoint lying on the
                // partner's interior (overlapping collinear edges)
                const RatPoint& p2 = d.points[a2];
                const RatPoint& q2 = d.points[b2];
                for (auto idx : {a2, b2})
                    if (idx != a1 && idx != b1 && on_segment_interior(p1, q1, d.points[idx]))
                        out.degeneracies.push_back("endpoint of edge " + std::to_string(j) +
                                                   " lies inside edge " + std::to_string(i));
                for (auto idx : {a1, b1})
                    if (idx != a2 && idx != b2 && on_segment_interior(p2, q2, d.points[idx]))
                        out.degeneracies.push_back("endpoint of edge " + std::to_string(i) +
                                                   " lies inside edge " + std::to_string(j));
                continue;
            }
            const RatPoint& p2 = d.points[a2];
            const RatPoint& q2 = d.points[b2];
            int o1 = orient(p1, q1, p2);
            int o2 = orient(p1, q1, q2);
            int o3 = orient(p2, q2, p1);
            int o4 = orient(p2, q2, q1);
            if (o1 * o2 < 0 && o3 * o4 < 0) {
                ++out.report.total;
                ++out.report.pair_multiplicity[{i, j}];
                auto& at = meeting_points[intersection_point(p1, q1, p2, q2)];
                at.push_back(i);
                at.push_back(j);
            } else if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
                if (on_segment_interior(p1, q1, p2) || on_segment_interior(p1, q1, q2) ||
                    on_segment_interior(p2, q2, p1) || on_segment_interior(p2, q2, q1))
                    out.degeneracies.push_back("endpoint-on-interior between edges " +
                                               std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }

    for (auto& [pt, segs] : meeting_points) {
        std::sort(segs.begin(), segs.end());
        segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
        if (segs.size() > 2)
            out.degeneracies.push_back("three or more segments concurrent at (" + pt.x.str() +
                                       ", " + pt.y.str() + ")");
    }
    return out;
}

NeighborhoodBreakdown neighborhood_breakdown(int n) {
    if (n < 4) throw std::out_of_range("neighborhood_breakdown: n >= 4");
    ArcDrawing gamma = build_gamma(n - 3);
    CoverProfile covers = cover_profile(gamma);
    NeighborhoodBreakdown b;
    b.nu_red = mpz_class(count_crossings(gamma, false).total);
    b.nu_blue = 2 * bunch_crossings(pow2(static_cast<unsigned>(n - 3)));
    b.nu_mixed = 2 * mpz_class(covers.sum_upper) + 2 * mpz_class(covers.sum_lower);
    return b;
}

mpz_class neighborhood_formula(int n) {
    if (n < 4) throw std::out_of_range("neighborhood_formula: n >= 4");
    mpq_class v = make_rat(9 * pow2(2 * static_cast<unsigned>(n) - 8), 1) -
                  make_rat((mpz_class(n) * n + 3 * n) * pow2(static_cast<unsigned>(n)), 64);
    return to_integer(v);
}

mpz_class fq_upper_count(int n) {
    if (n < 3) throw std::out_of_range("fq_upper_count: n >= 3");
    if (n == 3) {
        SegmentCrossings base = count_segment_crossings(d3_base_drawing());
        if (!base.degeneracies.empty())
            throw std::logic_error("fq_upper_count: degenerate base drawing");
        return mpz_class(base.report.total);
    }
    // eight neighborhoods, then 2^{n-3} * 2^{n-3} crossing pairs for each of
    // the four base crossings
    return 8 * neighborhood_breakdown(n).total() + pow2(2 * static_cast<unsigned>(n) - 4);
}

mpz_class fq_upper_formula(int n) {
    if (n < 3) throw std::out_of_range("fq_upper_formula: n >= 3");
    return 11 * pow2(2 * static_cast<unsigned>(n) - 5) -
           (mpz_class(n) * n + 3 * n) * pow2(static_cast<unsigned>(n) - 3);
}

}  // namespace crossfold
