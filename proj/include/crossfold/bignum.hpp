#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace crossfold {

inline mpz_class pow2(unsigned k) {
    mpz_class r = 1;
    r <<= k;
    return r;
}

// Exact binomial coefficient C(a, b), 0 <= b <= a.
inline mpz_class binomial(long a, long b) {
    if (a < 0 || b < 0 || b > a) throw std::invalid_argument("binomial: b out of range");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

// num / den as a canonical exact rational.
inline mpq_class make_rat(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Asserts the rational is integral and returns its numerator.
inline mpz_class to_integer(const mpq_class& q) {
    if (q.get_den() != 1) throw std::logic_error("to_integer: value is not integral");
    return q.get_num();
}

}  // namespace crossfold
