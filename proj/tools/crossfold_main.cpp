// crossfold: exact drawings, crossing counts, congestion censuses and bound
// reports for hypercubes and folded hypercubes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "crossfold/arc_diagram.hpp"
#include "crossfold/bounds.hpp"
#include "crossfold/congestion.hpp"
#include "crossfold/folded_upper.hpp"
#include "crossfold/json_io.hpp"
#include "crossfold/render.hpp"
#include "crossfold/verify.hpp"

namespace {

using namespace crossfold;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int cmd_gamma(int n, bool json, const std::string& svg_path, bool check_good) {
    if (check_good && n > kMaxGammaPairwise)
        throw std::out_of_range("--check-good needs n <= " + std::to_string(kMaxGammaPairwise));
    ArcDrawing d = build_gamma(n);
    CrossingReport report = count_crossings(d, check_good || n <= kMaxGammaPairwise);
    CoverProfile covers = cover_profile(d);
    mpz_class cross_formula = gamma_crossing_formula(n);
    mpz_class cover_formula = gamma_cover_sum_formula(n);
    bool match = mpz_class(report.total) == cross_formula &&
                 mpz_class(covers.sum_upper) == cover_formula &&
                 mpz_class(covers.sum_lower) == cover_formula;

    std::vector<Violation> violations;
    if (check_good) violations = validate_good(d, report);

    if (json) {
        Json j;
        j["n"] = n;
        j["edges"] = d.edges.size();
        j["segments"] = d.segments.size();
        j["crossings"] = report.total;
        j["crossings_formula"] = cross_formula.get_str();
        j["cover_sum_upper"] = covers.sum_upper;
        j["cover_sum_lower"] = covers.sum_lower;
        j["cover_formula"] = cover_formula.get_str();
        j["formulas_match"] = match;
        if (check_good) j["good_drawing"] = violations.empty();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gamma n=" << n << ": " << d.edges.size() << " edges, " << d.segments.size()
                  << " segments\n";
        std::cout << "crossings: engine=" << report.total << " formula=" << cross_formula
                  << (mpz_class(report.total) == cross_formula ? " (match)" : " (MISMATCH)") << "\n";
        std::cout << "cover sums: engine=(" << covers.sum_upper << ", " << covers.sum_lower
                  << ") formula=" << cover_formula
                  << (mpz_class(covers.sum_upper) == cover_formula &&
                              mpz_class(covers.sum_lower) == cover_formula
                          ? " (match)"
                          : " (MISMATCH)")
                  << "\n";
        if (check_good) {
            if (violations.empty())
                std::cout << "good drawing: ok\n";
            else
                for (const Violation& v : violations) std::cout << "violation: " << v.what << "\n";
        }
    }
    if (!svg_path.empty()) write_file(svg_path, render_gamma_svg(d, report.total));
    if (!match || (check_good && !violations.empty())) return 1;
    return 0;
}

int cmd_fq_upper(int n, bool json) {
    mpz_class assembled = fq_upper_count(n);
    mpz_class formula = fq_upper_formula(n);
    bool match = assembled == formula;
    Json breakdown = nullptr;
    if (n >= 4) {
        NeighborhoodBreakdown b = neighborhood_breakdown(n);
        breakdown = Json{{"nu_red", b.nu_red.get_str()},
                         {"nu_blue", b.nu_blue.get_str()},
                         {"nu_mixed", b.nu_mixed.get_str()},
                         {"total", b.total().get_str()}};
    }
    if (json) {
        Json j;
        j["n"] = n;
        j["assembled"] = assembled.get_str();
        j["formula"] = formula.get_str();
        j["match"] = match;
        j["neighborhood"] = breakdown;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "fq-upper n=" << n << ": assembled=" << assembled << " formula=" << formula
                  << (match ? " (match)" : " (MISMATCH)") << "\n";
        if (!breakdown.is_null())
            std::cout << "neighborhood: red=" << breakdown["nu_red"].get<std::string>()
                      << " blue=" << breakdown["nu_blue"].get<std::string>()
                      << " mixed=" << breakdown["nu_mixed"].get<std::string>()
                      << " total=" << breakdown["total"].get<std::string>() << "\n";
    }
    return match ? 0 : 1;
}

int cmd_congestion(int n, bool with_census, bool json) {
    mpz_class cg0 = class_formula(n, CgClass::dim0);
    mpz_class cgt = class_formula(n, CgClass::dimt);
    mpz_class bound = claimed_global_bound(n);

    if (with_census) {
        CongestionCensus census = congestion_census(n);
        Inequality1Audit audit = audit_inequality_1(n);
        if (json) {
            std::cout << census_json(census).dump(2) << "\n";
        } else {
            std::cout << "congestion n=" << n << " (exhaustive census)\n";
            std::cout << "class dim0: cg=" << census.class_summary.at(0).min << " over "
                      << census.class_summary.at(0).count << " edges (formula " << cg0 << ")\n";
            std::cout << "class dim t: cg=" << census.class_summary.at(1).min << " over "
                      << (census.per_edge.size() - census.class_summary.at(0).count)
                      << " edges (formula " << cgt << ")\n";
            std::cout << "max congestion = " << census.max_congestion << "\n";
            std::cout << "inequality (1) bound " << bound << ": "
                      << (audit.holds ? "holds" : "VIOLATED (expected erratum for odd n)") << "\n";
            std::cout << "conservation: total load " << census.total_load << " = path length sum "
                      << census.total_path_length << "\n";
        }
        return 0;
    }

    bool holds = std::max(cg0, cgt) <= bound;
    if (json) {
        Json j;
        j["n"] = n;
        j["classes"] = {{"0", {{"cg", cg0.get_str()}}}, {"t", {{"cg", cgt.get_str()}}}};
        j["bound1"] = bound.get_str();
        j["bound1_holds"] = holds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "congestion n=" << n << " (closed forms)\n";
        std::cout << "class dim0: cg=" << cg0 << "\nclass dim t: cg=" << cgt << "\n";
        std::cout << "inequality (1) bound " << bound << ": "
                  << (holds ? "holds" : "VIOLATED (expected erratum for odd n)") << "\n";
    }
    return 0;
}

int cmd_bounds(int n, bool json) {
    BoundReport r = bound_report(n);
    if (json) {
        std::cout << bound_report_json(r).dump(2) << "\n";
        return 0;
    }
    std::cout << "bounds n=" << n << "\n";
    if (r.upper_fq) std::cout << "upper (drawing): " << *r.upper_fq << "\n";
    if (r.small_case_exact) std::cout << "exact small case: " << *r.small_case_exact << "\n";
    std::cout << "lower (published closed form, floor): " << format_real15(r.lower_fq_paper) << "\n";
    std::cout << "lower (assembled, cg=" << r.assembled_cg << "): " << r.lower_fq_assembled << "\n";
    if (r.qn_upper_conj) std::cout << "Q_n upper (conjectured form): " << *r.qn_upper_conj << "\n";
    std::cout << "Q_n lower: " << r.qn_lower_sv_value << "\n";
    std::cout << "audits: inequality (1) " << (r.ineq1_holds ? "holds" : "violated")
              << ", inequality (2) " << (r.ineq2_holds ? "holds" : "violated") << "\n";
    return 0;
}

int cmd_render(int gamma_n, bool d3, const std::string& out_path) {
    if (d3) {
        CoordinateDrawing d = d3_base_drawing();
        SegmentCrossings sc = count_segment_crossings(d);
        write_file(out_path, render_d3_svg(d, sc.report.total));
    } else {
        if (gamma_n > kMaxRenderGamma)
            throw std::out_of_range("render: gamma n <= " + std::to_string(kMaxRenderGamma));
        ArcDrawing d = build_gamma(gamma_n);
        write_file(out_path, render_gamma_svg(d, count_crossings(d, false).total));
    }
    return 0;
}

int cmd_verify(int max_n) {
    VerifySuiteResult result = run_verify(max_n);
    for (const CheckResult& c : result.checks) {
        const char* tag = c.status == CheckStatus::pass            ? "[PASS]   "
                          : c.status == CheckStatus::expected_erratum ? "[ERRATUM]"
                                                                      : "[FAIL]   ";
        std::cout << tag << " " << c.name << " (" << c.range << "): " << c.details << "\n";
    }
    std::cout << (result.exit_code == 0 ? "verify: ok" : "verify: FAILED") << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact crossing-number engine for hypercubes and folded hypercubes"};
    app.require_subcommand(1);

    int n = 3;
    bool json = false, check_good = false, with_census = false, d3 = false;
    std::string svg_path, out_path;
    int gamma_n = -1, max_n = 8;

    CLI::App* gamma = app.add_subcommand("gamma", "build the hypercube arc diagram and count");
    gamma->add_option("--n", n, "dimension, 1..16 (1..10 with --check-good)")->required();
    gamma->add_flag("--json", json, "machine-readable report");
    gamma->add_option("--svg", svg_path, "write an SVG rendering (n <= 8)");
    gamma->add_flag("--check-good", check_good, "run good-drawing validation");

    CLI::App* fq = app.add_subcommand("fq-upper", "assembled folded-hypercube upper bound");
    fq->add_option("--n", n, "dimension, >= 3")->required();
    fq->add_flag("--json", json, "machine-readable report");

    CLI::App* cong = app.add_subcommand("congestion", "canonical-path congestion classes");
    cong->add_option("--n", n, "dimension, >= 2 (<= 12 with --census)")->required();
    cong->add_flag("--census", with_census, "route all pairs exhaustively");
    cong->add_flag("--json", json, "machine-readable report");

    CLI::App* bounds = app.add_subcommand("bounds", "all bounds for one dimension");
    bounds->add_option("--n", n, "dimension, >= 2")->required();
    bounds->add_flag("--json", json, "machine-readable report");

    CLI::App* render = app.add_subcommand("render", "write an SVG drawing");
    render->add_option("--gamma", gamma_n, "render the arc diagram of this dimension (<= 8)");
    render->add_flag("--d3", d3, "render the folded-hypercube base drawing");
    render->add_option("--out", out_path, "output path")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the whole invariant suite");
    verify->add_option("--max-n", max_n, "largest dimension to verify, 3..12")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gamma->parsed()) return cmd_gamma(n, json, svg_path, check_good);
        if (fq->parsed()) return cmd_fq_upper(n, json);
        if (cong->parsed()) return cmd_congestion(n, with_census, json);
        if (bounds->parsed()) return cmd_bounds(n, json);
        if (render->parsed()) {
            if (d3 == (gamma_n >= 0)) {
                std::cerr << "render: pass exactly one of --gamma N or --d3\n";
                return 1;
            }
            return cmd_render(gamma_n, d3, out_path);
        }
        if (verify->parsed()) return cmd_verify(max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
