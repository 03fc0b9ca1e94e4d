#include "crossfold/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace crossfold {

Json arc_drawing_json(const ArcDrawing& d) {
    Json j;
    j["n"] = d.n;
    Json segs = Json::array();
    for (const ArcSegment& s : d.segments) {
        const ArcEdge& e = d.edges[s.edge];
        segs.push_back({{"edge", {e.u, e.v}},
                        {"half", s.half == HalfPlane::upper ? "upper" : "lower"},
                        {"left", s.left.str()},
                        {"right", s.right.str()}});
    }
    j["segments"] = std::move(segs);
    return j;
}

Json coordinate_drawing_json(const CoordinateDrawing& d) {
    Json points = Json::object();
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        points[d.vertices[i].bits()] = {d.points[i].x.str(), d.points[i].y.str()};
    Json edges = Json::array();
    for (auto [a, b] : d.edges)
        edges.push_back({d.vertices[a].bits(), d.vertices[b].bits()});
    return Json{{"points", std::move(points)}, {"edges", std::move(edges)}};
}

Json census_json(const CongestionCensus& c) {
    const ClassStat& dim0 = c.class_summary.at(0);
    if (dim0.min != dim0.max) throw std::logic_error("census_json: dim-0 class not uniform");
    std::int64_t dimt_cg = 0, dimt_count = 0;
    for (const auto& [cls, stat] : c.class_summary) {
        if (cls == 0) continue;
        if (stat.min != stat.max || (dimt_count > 0 && stat.min != dimt_cg))
            throw std::logic_error("census_json: dimension classes not uniform");
        dimt_cg = stat.min;
        dimt_count += stat.count;
    }
    mpz_class bound = claimed_global_bound(c.n);
    Json j;
    j["n"] = c.n;
    j["classes"] = {{"0", {{"cg", dim0.min}, {"count", dim0.count}}},
                    {"t", {{"cg", dimt_cg}, {"count", dimt_count}}}};
    j["max"] = c.max_congestion;
    j["bound1"] = bound.get_si();
    j["bound1_holds"] = mpz_class(c.max_congestion) <= bound;
    return j;
}

std::string format_real15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

Json bound_report_json(const BoundReport& r) {
    Json j;
    j["n"] = r.n;
    j["upper_fq"] = r.upper_fq ? Json(r.upper_fq->get_str()) : Json(nullptr);
    j["lower_fq_paper"] = {{"value", format_real15(r.lower_fq_paper)}, {"rounding", "floor"}};
    j["lower_fq_assembled"] = r.lower_fq_assembled.get_str();
    j["assembled_cg"] = r.assembled_cg.get_str();
    j["qn_upper_conjecture"] = r.qn_upper_conj ? Json(r.qn_upper_conj->get_str()) : Json(nullptr);
    j["qn_lower_sv"] = r.qn_lower_sv_value.get_str();
    j["audits"] = {{"inequality1_holds", r.ineq1_holds}, {"inequality2_holds", r.ineq2_holds}};
    j["small_case_exact"] = r.small_case_exact ? Json(*r.small_case_exact) : Json(nullptr);
    return j;
}

}  // namespace crossfold
