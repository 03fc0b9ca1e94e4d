#include <doctest.h>

#include <algorithm>
#include <set>

#include "crossfold/arc_diagram.hpp"
#include "crossfold/bignum.hpp"

using namespace crossfold;

namespace {

// the segments owned by the edge {u, v}
std::vector<ArcSegment> segments_of(const ArcDrawing& d, std::uint64_t u, std::uint64_t v) {
    std::vector<ArcSegment> out;
    for (const ArcSegment& s : d.segments) {
        const ArcEdge& e = d.edges[s.edge];
        if (e.u == u && e.v == v) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("gamma_1 is a single upper arc with no crossings") {
    ArcDrawing d = build_gamma(1);
    REQUIRE(d.edges.size() == 1);
    REQUIRE(d.segments.size() == 1);
    CHECK(d.segments[0].half == HalfPlane::upper);
    CHECK(d.segments[0].left == Rational(0));
    CHECK(d.segments[0].right == Rational(1));
    CHECK(count_crossings(d).total == 0);
    CoverProfile p = cover_profile(d);
    CHECK(p.sum_upper == 0);
    CHECK(p.sum_lower == 0);
}

TEST_CASE("gamma_2 structure, unrolled by hand") {
    ArcDrawing d = build_gamma(2);
    REQUIRE(d.edges.size() == 4);
    REQUIRE(d.segments.size() == 5);

    auto e01 = segments_of(d, 0, 1);
    REQUIRE(e01.size() == 1);
    CHECK(e01[0].half == HalfPlane::upper);
    CHECK(e01[0].left == Rational(0));
    CHECK(e01[0].right == Rational(1));

    auto e23 = segments_of(d, 2, 3);
    REQUIRE(e23.size() == 1);
    CHECK(e23[0].left == Rational(2));
    CHECK(e23[0].right == Rational(3));

    auto e02 = segments_of(d, 0, 2);
    REQUIRE(e02.size() == 1);
    CHECK(e02[0].half == HalfPlane::upper);
    CHECK(e02[0].left == Rational(0));
    CHECK(e02[0].right == Rational(2));

    // the curve joining 1 and 3 dips through the gap between 1 and 2
    auto e13 = segments_of(d, 1, 3);
    REQUIRE(e13.size() == 2);
    std::sort(e13.begin(), e13.end(),
              [](const ArcSegment& a, const ArcSegment& b) { return a.half < b.half; });
    CHECK(e13[0].half == HalfPlane::upper);
    CHECK(e13[0].left == Rational(1));
    CHECK(e13[0].right == e13[1].left);
    CHECK(e13[1].half == HalfPlane::lower);
    CHECK(e13[1].right == Rational(3));
    CHECK(Rational(1) < e13[0].right);
    CHECK(e13[0].right < Rational(2));

    CHECK(count_crossings(d).total == 0);

    // hand enumeration of the five segments: only 0-2 covers a vertex from
    // above (position 1), only the dipped arc covers one from below (position 2)
    CoverProfile p = cover_profile(d);
    CHECK(p.upper == std::vector<std::int64_t>{0, 1, 0, 0});
    CHECK(p.lower == std::vector<std::int64_t>{0, 0, 1, 0});
    CHECK(p.sum_upper == 1);
    CHECK(p.sum_lower == 1);
}

TEST_CASE("gamma_3 axis crossings sit in the declared gaps") {
    ArcDrawing d = build_gamma(3);
    CHECK(d.edges.size() == 12);

    // gap points: one per two-segment edge, shared by its upper/lower arcs
    std::vector<Rational> gaps;
    for (std::uint32_t e = 0; e < d.edges.size(); ++e) {
        std::vector<ArcSegment> segs;
        for (const ArcSegment& s : d.segments)
            if (s.edge == e) segs.push_back(s);
        REQUIRE(segs.size() >= 1);
        REQUIRE(segs.size() <= 2);
        if (segs.size() == 2) {
            std::sort(segs.begin(), segs.end(),
                      [](const ArcSegment& a, const ArcSegment& b) { return a.half < b.half; });
            CHECK(segs[0].half == HalfPlane::upper);
            CHECK(segs[1].half == HalfPlane::lower);
            CHECK(segs[0].right == segs[1].left);
            gaps.push_back(segs[0].right);
        }
    }
    std::sort(gaps.begin(), gaps.end());
    // level-3 curves i = 1, 2, 3 cross in (3,4); the two inherited copies of
    // the level-2 curve cross in (1,2) and (5,6)
    REQUIRE(gaps.size() == 5);
    CHECK(gaps[0] == Rational(4, 3));
    CHECK(gaps[1] == Rational(16, 5));
    CHECK(gaps[2] == Rational(17, 5));
    CHECK(gaps[3] == Rational(18, 5));
    CHECK(gaps[4] == Rational(16, 3));

    CHECK(count_crossings(d).total == 2);
    CoverProfile p = cover_profile(d);
    CHECK(p.sum_upper == 8);
    CHECK(p.sum_lower == 8);

    // both crossings happen between vertex-disjoint edges
    CrossingReport r = count_crossings(d, true);
    for (const auto& [pair, mult] : r.pair_multiplicity) {
        const ArcEdge& a = d.edges[pair.first];
        const ArcEdge& b = d.edges[pair.second];
        CHECK(mult == 1);
        CHECK(a.u != b.u);
        CHECK(a.u != b.v);
        CHECK(a.v != b.u);
        CHECK(a.v != b.v);
    }
}

TEST_CASE("gap points decrease with the curve index") {
    ArcDrawing d = build_gamma(4);
    // level-4 curves join i and 8+i; gather their gap points by i
    std::vector<Rational> gap_by_i;
    for (std::int64_t i = 1; i < 8; ++i) {
        auto segs = segments_of(d, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(8 + i));
        REQUIRE(segs.size() == 2);
        Rational gap = segs[0].half == HalfPlane::upper ? segs[0].right : segs[1].right;
        CHECK(Rational(7) < gap);
        CHECK(gap < Rational(8));
        gap_by_i.push_back(gap);
    }
    CHECK(std::is_sorted(gap_by_i.rbegin(), gap_by_i.rend()));
    // curve 0 stays in the upper half-plane
    auto curve0 = segments_of(d, 0, 8);
    REQUIRE(curve0.size() == 1);
    CHECK(curve0[0].half == HalfPlane::upper);
}

TEST_CASE("closed forms") {
    CHECK(gamma_cover_sum_formula(1) == 0);
    CHECK(gamma_cover_sum_formula(3) == 8);
    CHECK(gamma_cover_sum_formula(4) == 44);
    CHECK(gamma_crossing_formula(1) == 0);
    CHECK(gamma_crossing_formula(2) == 0);
    CHECK(gamma_crossing_formula(3) == 2);
    CHECK(gamma_crossing_formula(4) == 20);
    CHECK(gamma_crossing_formula(5) == 128);
    CHECK_THROWS_AS(gamma_crossing_formula(0), std::out_of_range);

    CHECK(bunch_crossings(1) == 0);
    CHECK(bunch_crossings(4) == 6);
    CHECK(bunch_crossings(8) == 28);
    CHECK_THROWS_AS(bunch_crossings(0), std::out_of_range);
}

TEST_CASE("engine equals formulas and proof recurrences, n = 1..10") {
    std::int64_t prev_cross = 0, prev_cover_u = 0, prev_cover_l = 0;
    for (int n = 1; n <= 10; ++n) {
        ArcDrawing d = build_gamma(n);
        CrossingReport r = count_crossings(d);  // pairwise + sweep agree internally
        CoverProfile p = cover_profile(d);
        CHECK(mpz_class(r.total) == gamma_crossing_formula(n));
        CHECK(mpz_class(p.sum_upper) == gamma_cover_sum_formula(n));
        CHECK(mpz_class(p.sum_lower) == gamma_cover_sum_formula(n));
        if (n >= 2) {
            std::int64_t half = std::int64_t(1) << (n - 1);
            std::int64_t tri = half * (half - 1) / 2;
            CHECK(p.sum_upper == tri + 2 * prev_cover_u);
            CHECK(p.sum_lower == tri + 2 * prev_cover_l);
            CHECK(r.total == 2 * prev_cross + prev_cover_u + prev_cover_l);
        }
        prev_cross = r.total;
        prev_cover_u = p.sum_upper;
        prev_cover_l = p.sum_lower;
    }
}

TEST_CASE("sweep total matches pairwise total even when pairs are off by default") {
    ArcDrawing d = build_gamma(11);
    CrossingReport fast = count_crossings(d);
    CHECK_FALSE(fast.has_pairs);
    CHECK(mpz_class(fast.total) == gamma_crossing_formula(11));
    // force the cross-check on a drawing past the auto threshold
    CrossingReport both = count_crossings(d, true);
    CHECK(both.total == fast.total);
}

TEST_CASE("good-drawing validation passes for gamma, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        ArcDrawing d = build_gamma(n);
        CrossingReport r = count_crossings(d, true);
        CHECK(validate_good(d, r).empty());
    }
}

TEST_CASE("validator rejects a pair that crosses twice") {
    ArcDrawing d;
    d.n = 2;
    d.edges = {{0, 2}, {1, 3}};
    d.segments = {{HalfPlane::upper, Rational(0), Rational(2), 0},
                  {HalfPlane::upper, Rational(1), Rational(3), 1},
                  {HalfPlane::lower, Rational(0), Rational(2), 0},
                  {HalfPlane::lower, Rational(1), Rational(3), 1}};
    d.vertex_position = {0, 1, 2, 3};
    CrossingReport r = count_crossings(d, true);
    CHECK(r.total == 2);
    auto violations = validate_good(d, r);
    REQUIRE_FALSE(violations.empty());
    bool found_double = false;
    for (const Violation& v : violations)
        if (v.what.find("crosses 2 times") != std::string::npos) found_double = true;
    CHECK(found_double);
}

TEST_CASE("validator rejects endpoint collisions away from shared vertices") {
    ArcDrawing d;
    d.n = 2;
    d.edges = {{0, 1}, {2, 3}};
    // both arcs end at the same non-vertex coordinate 3/2
    d.segments = {{HalfPlane::upper, Rational(0), Rational(3, 2), 0},
                  {HalfPlane::upper, Rational(3, 2), Rational(3), 1}};
    d.vertex_position = {0, 1, 2, 3};
    auto violations = validate_good(d, count_crossings(d, true));
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().what.find("collides") != std::string::npos);
}

TEST_CASE("placement holds for gamma and flags permutations") {
    for (int n = 1; n <= 10; ++n) {
        ArcDrawing d = build_gamma(n);
        CHECK_FALSE(verify_placement(d).has_value());
    }
    ArcDrawing d = build_gamma(3);
    std::swap(d.vertex_position[2], d.vertex_position[5]);
    auto mismatch = verify_placement(d);
    REQUIRE(mismatch.has_value());
    CHECK(mismatch->label == 2);
    CHECK(mismatch->expected == 2);
    CHECK(mismatch->actual == 5);
}

TEST_CASE("build_gamma range guard") {
    CHECK_THROWS_AS(build_gamma(0), std::out_of_range);
    CHECK_THROWS_AS(build_gamma(17), std::out_of_range);
    CHECK_THROWS_AS(build_gamma(5, 4), std::out_of_range);
}
