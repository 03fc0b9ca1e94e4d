#include "crossfold/arc_diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "crossfold/bignum.hpp"

namespace crossfold {

namespace {

// Fenwick tree over coordinate ranks.
class BitCounter {
public:
    explicit BitCounter(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t rank) {
        for (std::size_t i = rank + 1; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
    }

    // count of inserted ranks <= rank
    std::int64_t prefix(std::size_t rank) const {
        std::int64_t s = 0;
        for (std::size_t i = rank + 1; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }

private:
    std::vector<std::int64_t> tree_;
};

struct HalfSeg {
    Rational left, right;
    std::uint32_t edge;
};

std::vector<HalfSeg> half_segments(const ArcDrawing& d, HalfPlane h) {
    std::vector<HalfSeg> out;
    for (const ArcSegment& s : d.segments)
        if (s.half == h) out.push_back({s.left, s.right, s.edge});
    return out;
}

// Counts strictly interleaving pairs a < c < b < d among intervals, by a
// left-to-right sweep: process intervals in increasing left order, query how
// many already-seen right endpoints fall strictly inside (left, right), then
// insert. Intervals sharing a left coordinate are batched so they never count
// against each other.
std::int64_t interleave_count(std::vector<HalfSeg> segs) {
    if (segs.size() < 2) return 0;

    std::vector<Rational> coords;
    coords.reserve(segs.size() * 2);
    for (const HalfSeg& s : segs) {
        coords.push_back(s.left);
        coords.push_back(s.right);
    }
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    auto rank = [&](const Rational& x) {
        return static_cast<std::size_t>(std::lower_bound(coords.begin(), coords.end(), x) - coords.begin());
    };

    struct RankedSeg {
        std::size_t left, right;
    };
    std::vector<RankedSeg> rs;
    rs.reserve(segs.size());
    for (const HalfSeg& s : segs) rs.push_back({rank(s.left), rank(s.right)});
    std::sort(rs.begin(), rs.end(), [](const RankedSeg& a, const RankedSeg& b) {
        return a.left != b.left ? a.left < b.left : a.right < b.right;
    });

    BitCounter bit(coords.size());
    std::int64_t total = 0;
    std::size_t i = 0;
    while (i < rs.size()) {
        std::size_t j = i;
        while (j < rs.size() && rs[j].left == rs[i].left) ++j;
        for (std::size_t k = i; k < j; ++k) {
            // right endpoints strictly inside (left, right)
            if (rs[k].right > rs[k].left + 1)
                total += bit.prefix(rs[k].right - 1) - bit.prefix(rs[k].left);
        }
        for (std::size_t k = i; k < j; ++k) bit.add(rs[k].right);
        i = j;
    }
    return total;
}

bool strictly_interleaved(const HalfSeg& a, const HalfSeg& b) {
    return (a.left < b.left && b.left < a.right && a.right < b.right) ||
           (b.left < a.left && a.left < b.right && b.right < a.right);
}

}  // namespace

ArcDrawing build_gamma(int n, int max_n) {
    if (max_n < 1 || max_n > kMaxGamma) throw std::out_of_range("build_gamma: bad configured max");
    if (n < 1 || n > max_n) throw std::out_of_range("build_gamma: n out of range");

    ArcDrawing d;
    d.n = n;
    d.edges.push_back({0, 1});
    d.segments.push_back({HalfPlane::upper, Rational(0), Rational(1), 0});

    for (int k = 2; k <= n; ++k) {
        std::int64_t half = std::int64_t(1) << (k - 1);

        // translated copy of the (k-1)-level drawing
        std::size_t edge_count = d.edges.size();
        std::size_t seg_count = d.segments.size();
        for (std::size_t e = 0; e < edge_count; ++e)
            d.edges.push_back({d.edges[e].u + static_cast<std::uint64_t>(half),
                               d.edges[e].v + static_cast<std::uint64_t>(half)});
        for (std::size_t s = 0; s < seg_count; ++s) {
            const ArcSegment& src = d.segments[s];
            d.segments.push_back({src.half, src.left + Rational(half), src.right + Rational(half),
                                  static_cast<std::uint32_t>(src.edge + edge_count)});
        }

        // level-k curves joining i and half+i
        for (std::int64_t i = 0; i < half; ++i) {
            auto edge_id = static_cast<std::uint32_t>(d.edges.size());
            d.edges.push_back({static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(half + i)});
            if (i == 0) {
                d.segments.push_back({HalfPlane::upper, Rational(0), Rational(half), edge_id});
            } else {
                Rational gap = Rational(half - 1) + Rational(half - i, half + 1);
                d.segments.push_back({HalfPlane::upper, Rational(i), gap, edge_id});
                d.segments.push_back({HalfPlane::lower, gap, Rational(half + i), edge_id});
            }
        }
    }

    d.vertex_position.resize(std::size_t(1) << n);
    for (std::size_t x = 0; x < d.vertex_position.size(); ++x)
        d.vertex_position[x] = static_cast<std::uint32_t>(x);
    return d;
}

CrossingReport count_crossings(const ArcDrawing& d) {
    return count_crossings(d, d.n <= kMaxGammaPairwise);
}

CrossingReport count_crossings(const ArcDrawing& d, bool with_pairs) {
    CrossingReport r;
    for (HalfPlane h : {HalfPlane::upper, HalfPlane::lower})
        r.total += interleave_count(half_segments(d, h));

    if (with_pairs) {
        r.has_pairs = true;
        std::int64_t paired_total = 0;
        for (HalfPlane h : {HalfPlane::upper, HalfPlane::lower}) {
            std::vector<HalfSeg> segs = half_segments(d, h);
            for (std::size_t i = 0; i < segs.size(); ++i)
                for (std::size_t j = i + 1; j < segs.size(); ++j)
                    if (strictly_interleaved(segs[i], segs[j])) {
                        ++paired_total;
                        auto key = std::minmax(segs[i].edge, segs[j].edge);
                        ++r.pair_multiplicity[{key.first, key.second}];
                    }
        }
        if (paired_total != r.total)
            throw std::logic_error("count_crossings: sweep and pairwise totals disagree");
    }
    return r;
}

CoverProfile cover_profile(const ArcDrawing& d) {
    CoverProfile p;
    std::size_t positions = d.vertex_position.size();
    p.upper.assign(positions, 0);
    p.lower.assign(positions, 0);

    // difference arrays over integer positions strictly inside each arc
    std::vector<std::int64_t> diff_u(positions + 1, 0), diff_l(positions + 1, 0);
    for (const ArcSegment& s : d.segments) {
        std::int64_t lo = s.left.is_integer() ? s.left.num() + 1 : s.left.floor() + 1;
        std::int64_t hi = s.right.is_integer() ? s.right.num() - 1 : s.right.floor();
        if (lo > hi) continue;
        auto& diff = (s.half == HalfPlane::upper) ? diff_u : diff_l;
        diff[static_cast<std::size_t>(lo)] += 1;
        diff[static_cast<std::size_t>(hi) + 1] -= 1;
    }
    std::int64_t run_u = 0, run_l = 0;
    for (std::size_t x = 0; x < positions; ++x) {
        run_u += diff_u[x];
        run_l += diff_l[x];
        p.upper[x] = run_u;
        p.lower[x] = run_l;
        p.sum_upper += run_u;
        p.sum_lower += run_l;
    }
    return p;
}

mpz_class gamma_cover_sum_formula(int n) {
    if (n < 1) throw std::out_of_range("gamma_cover_sum_formula: n >= 1");
    // 4^{n-1} - (n+1) 2^{n-2}, evaluated as an exact rational (2^{n-2} is
    // fractional at n = 1)
    mpq_class v = mpq_class(pow2(2 * static_cast<unsigned>(n) - 2)) -
                  make_rat((n + 1) * pow2(static_cast<unsigned>(n)), 4);
    return to_integer(v);
}

mpz_class gamma_crossing_formula(int n) {
    if (n < 1) throw std::out_of_range("gamma_crossing_formula: n >= 1");
    mpq_class v = mpq_class(pow2(2 * static_cast<unsigned>(n) - 2)) -
                  make_rat((mpz_class(n) * n + n + 2) * pow2(static_cast<unsigned>(n)), 8);
    return to_integer(v);
}

mpz_class bunch_crossings(const mpz_class& m) {
    if (m < 1) throw std::out_of_range("bunch_crossings: m >= 1");
    return m * (m - 1) / 2;
}

std::vector<Violation> validate_good(const ArcDrawing& d, const CrossingReport& r) {
    if (!r.has_pairs) throw std::invalid_argument("validate_good: report lacks pair multiplicities");
    std::vector<Violation> out;

    auto share_vertex = [&](std::uint32_t a, std::uint32_t b) {
        const ArcEdge& ea = d.edges[a];
        const ArcEdge& eb = d.edges[b];
        return ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v;
    };

    for (const auto& [pair, mult] : r.pair_multiplicity) {
        if (mult > 1)
            out.push_back({pair.first, pair.second,
                           "edge pair crosses " + std::to_string(mult) + " times"});
        if (mult >= 1 && share_vertex(pair.first, pair.second))
            out.push_back({pair.first, pair.second, "adjacent edges cross"});
    }

    // per-edge segment structure: one arc, or an upper/lower pair sharing the
    // gap coordinate
    std::vector<std::vector<std::size_t>> by_edge(d.edges.size());
    for (std::size_t s = 0; s < d.segments.size(); ++s)
        by_edge[d.segments[s].edge].push_back(s);
    for (std::size_t e = 0; e < by_edge.size(); ++e) {
        const auto& segs = by_edge[e];
        if (segs.empty() || segs.size() > 2) {
            out.push_back({static_cast<std::uint32_t>(e), 0,
                           "edge owns " + std::to_string(segs.size()) + " segments"});
            continue;
        }
        if (segs.size() == 2) {
            const ArcSegment& a = d.segments[segs[0]];
            const ArcSegment& b = d.segments[segs[1]];
            bool joined = a.right == b.left || b.right == a.left;
            if (a.half == b.half || !joined)
                out.push_back({static_cast<std::uint32_t>(e), 0,
                               "two-segment edge is not an upper/lower pair joined at its gap point"});
        }
    }

    // position -> label (vertex_position is a bijection in a valid drawing)
    std::vector<std::int64_t> label_at(d.vertex_position.size(), -1);
    for (std::size_t x = 0; x < d.vertex_position.size(); ++x)
        label_at[d.vertex_position[x]] = static_cast<std::int64_t>(x);

    // same-half-plane endpoint coordinates may collide only at shared vertices
    for (HalfPlane h : {HalfPlane::upper, HalfPlane::lower}) {
        std::vector<std::pair<Rational, std::uint32_t>> endpoints;
        for (const ArcSegment& s : d.segments)
            if (s.half == h) {
                endpoints.push_back({s.left, s.edge});
                endpoints.push_back({s.right, s.edge});
            }
        std::sort(endpoints.begin(), endpoints.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t i = 0;
        while (i < endpoints.size()) {
            std::size_t j = i;
            while (j < endpoints.size() && endpoints[j].first == endpoints[i].first) ++j;
            if (j - i > 1) {
                const Rational& c = endpoints[i].first;
                std::int64_t label =
                    (c.is_integer() && c.num() >= 0 &&
                     c.num() < static_cast<std::int64_t>(label_at.size()))
                        ? label_at[static_cast<std::size_t>(c.num())]
                        : -1;
                for (std::size_t k = i; k < j; ++k) {
                    const ArcEdge& e = d.edges[endpoints[k].second];
                    bool incident = label >= 0 && (e.u == static_cast<std::uint64_t>(label) ||
                                                   e.v == static_cast<std::uint64_t>(label));
                    if (!incident) {
                        out.push_back({endpoints[k].second, 0,
                                       "endpoint coordinate " + c.str() +
                                           " collides away from a shared vertex"});
                        break;
                    }
                }
            }
            i = j;
        }
    }
    return out;
}

std::optional<PlacementMismatch> verify_placement(const ArcDrawing& d) {
    std::uint64_t size = d.vertex_position.size();
    for (std::uint64_t x = 0; x < size; ++x) {
        if (d.vertex_position[x] != x) return PlacementMismatch{x, x, d.vertex_position[x]};
        std::uint64_t comp = size - 1 - x;
        if (d.vertex_position[comp] != size - 1 - x)
            return PlacementMismatch{comp, size - 1 - x, d.vertex_position[comp]};
    }
    return std::nullopt;
}

}  // namespace crossfold
