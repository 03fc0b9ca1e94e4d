#pragma once

#include <optional>

#include <gmpxx.h>

#include "crossfold/bignum.hpp"

namespace crossfold {

struct Inequality2Audit {
    bool holds = false;
    mpz_class lhs;   // C(n, floor(n/2)), exact
    double rhs = 0;  // sqrt(2/pi) 2^n / sqrt(2 floor(n/2) + 1)
};

// Audit of the printed central-binomial lower bound. Expected outcome: holds
// for even n, violated for odd n (the printed denominator is too small
// there). Compared in double precision with 1e-12 relative slack.
Inequality2Audit audit_inequality_2(int n);

// m(m-1)(m-2)(m-3)/80 as an exact rational (not floored).
mpq_class kn_crossing_lower(const mpz_class& m);

// Doubling every edge of a complete graph quadruples the crossing number.
mpq_class multigraph_factor(const mpq_class& x);

// Embedding lower bound: cr1 / cg^2 - (v2 / 2) * delta^2, exact.
mpq_class leighton_bound(const mpq_class& cr1, const mpz_class& cg, const mpz_class& v2,
                         const mpz_class& delta);

// The published closed-form lower bound on cr(FQ_n), evaluated in double
// precision and rounded toward -inf; negative values are reported unclamped.
// Changes sign between n = 9 and n = 10.
double fq_lower_paper(int n);

// The same chain evaluated exactly with a true congestion value:
// 4 * kn_crossing_lower(2^n) / cg^2 - (n+1)^2 2^{n-1}.
mpq_class fq_lower_assembled(int n, const mpz_class& cg);

// Hypercube reference bounds.
mpz_class qn_upper_conjecture(int n);  // (5/32) 4^n - floor((n^2+1)/2) 2^{n-2}, n >= 3
mpq_class qn_lower_sv(int n);          // (1/20) 4^n - (n^2+1) 2^{n-1}

// Euler bound for girth-4 graphs: max(0, e - 2v + 4). Certifies cr(K_{4,4}) >= 4.
mpz_class bipartite_euler_lb(long v, long e);

struct BoundReport {
    int n = 0;
    std::optional<mpz_class> upper_fq;       // n >= 3
    double lower_fq_paper = 0;
    mpq_class lower_fq_assembled;
    mpz_class assembled_cg;                  // dimension-edge congestion used above
    std::optional<mpz_class> qn_upper_conj;  // n >= 3
    mpq_class qn_lower_sv_value;
    bool ineq1_holds = false;
    bool ineq2_holds = false;
    std::optional<int> small_case_exact;  // 0 for n = 2, 4 for n = 3
};

// Everything for one n. The inequality-(1) flag here compares the class
// closed forms against the claimed bound, so it works at any n; the
// census-backed audit lives in the congestion module.
BoundReport bound_report(int n);

}  // namespace crossfold
