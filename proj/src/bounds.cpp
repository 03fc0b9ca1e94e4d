#include "crossfold/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "crossfold/congestion.hpp"
#include "crossfold/folded_upper.hpp"

namespace crossfold {

Inequality2Audit audit_inequality_2(int n) {
    if (n < 1) throw std::out_of_range("audit_inequality_2: n >= 1");
    Inequality2Audit a;
    a.lhs = binomial(n, n / 2);
    a.rhs = std::sqrt(2.0 / std::numbers::pi) * std::ldexp(1.0, n) /
            std::sqrt(2.0 * (n / 2) + 1.0);
    a.holds = a.lhs.get_d() >= a.rhs * (1.0 - 1e-12);
    return a;
}

mpq_class kn_crossing_lower(const mpz_class& m) {
    if (m < 1) throw std::out_of_range("kn_crossing_lower: m >= 1");
    return make_rat(m * (m - 1) * (m - 2) * (m - 3), 80);
}

mpq_class multigraph_factor(const mpq_class& x) {
    if (x < 0) throw std::invalid_argument("multigraph_factor: x >= 0");
    return 4 * x;
}

mpq_class leighton_bound(const mpq_class& cr1, const mpz_class& cg, const mpz_class& v2,
                         const mpz_class& delta) {
    if (cg < 1) throw std::invalid_argument("leighton_bound: cg >= 1");
    if (v2 < 1) throw std::invalid_argument("leighton_bound: v2 >= 1");
    if (delta < 0) throw std::invalid_argument("leighton_bound: delta >= 0");
    return cr1 / mpq_class(cg * cg) - make_rat(v2 * delta * delta, 2);
}

double fq_lower_paper(int n) {
    if (n < 1) throw std::out_of_range("fq_lower_paper: n >= 1");
    double c = std::sqrt(2.0 / std::numbers::pi) / std::sqrt(2.0 * (n / 2) + 1.0);
    double main = std::ldexp(1.0, 2 * n) / (20.0 * (1.0 - c) * (1.0 - c));
    double sub = (static_cast<double>(n) * n + 2.0 * n + 4.0) * std::ldexp(1.0, n - 1);
    return std::floor(main - sub);
}

mpq_class fq_lower_assembled(int n, const mpz_class& cg) {
    if (n < 2) throw std::out_of_range("fq_lower_assembled: n >= 2");
    if (cg < 1) throw std::invalid_argument("fq_lower_assembled: cg >= 1");
    mpq_class cr1 = multigraph_factor(kn_crossing_lower(pow2(static_cast<unsigned>(n))));
    return leighton_bound(cr1, cg, pow2(static_cast<unsigned>(n)), n + 1);
}

mpz_class qn_upper_conjecture(int n) {
    if (n < 3) throw std::out_of_range("qn_upper_conjecture: n >= 3");
    return 5 * pow2(2 * static_cast<unsigned>(n) - 5) -
           mpz_class((static_cast<long>(n) * n + 1) / 2) * pow2(static_cast<unsigned>(n) - 2);
}

mpq_class qn_lower_sv(int n) {
    if (n < 1) throw std::out_of_range("qn_lower_sv: n >= 1");
    return make_rat(pow2(2 * static_cast<unsigned>(n)), 20) -
           (mpz_class(n) * n + 1) * pow2(static_cast<unsigned>(n) - 1);
}

mpz_class bipartite_euler_lb(long v, long e) {
    if (v < 3) throw std::invalid_argument("bipartite_euler_lb: v >= 3");
    mpz_class lb = mpz_class(e) - 2 * mpz_class(v) + 4;
    return lb > 0 ? lb : mpz_class(0);
}

BoundReport bound_report(int n) {
    if (n < 2) throw std::out_of_range("bound_report: n >= 2");
    BoundReport r;
    r.n = n;
    if (n >= 3) {
        r.upper_fq = fq_upper_formula(n);
        r.qn_upper_conj = qn_upper_conjecture(n);
    }
    r.lower_fq_paper = fq_lower_paper(n);
    r.assembled_cg = class_formula(n, CgClass::dimt);
    r.lower_fq_assembled = fq_lower_assembled(n, r.assembled_cg);
    r.qn_lower_sv_value = qn_lower_sv(n);
    mpz_class worst = std::max(class_formula(n, CgClass::dim0), r.assembled_cg);
    r.ineq1_holds = worst <= claimed_global_bound(n);
    r.ineq2_holds = audit_inequality_2(n).holds;
    if (n == 2) r.small_case_exact = 0;
    if (n == 3) r.small_case_exact = 4;
    return r;
}

}  // namespace crossfold
