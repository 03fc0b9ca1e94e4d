#include "crossfold/congestion.hpp"

#include <bit>
#include <stdexcept>

#include "crossfold/bignum.hpp"

namespace crossfold {

namespace {

// Visits the edges of the canonical path u -> v as (tail word, dim).
// Dimension order ascending means machine bit order descending.
template <typename Fn>
void walk_canonical(int n, std::uint64_t u, std::uint64_t v, Fn&& visit) {
    std::uint64_t full = (1ull << n) - 1;
    int agree = n - std::popcount(u ^ v);
    std::uint64_t cur = u;
    if (agree <= n / 2 - 1) {
        visit(cur, 0);
        cur ^= full;
    }
    std::uint64_t diff = cur ^ v;
    while (diff) {
        int b = 63 - std::countl_zero(diff);
        visit(cur, n - b);
        std::uint64_t bitmask = 1ull << b;
        cur ^= bitmask;
        diff ^= bitmask;
    }
}

// drop bit position `b` from the word, closing the gap
std::uint64_t squeeze_bit(std::uint64_t w, int b) {
    std::uint64_t lo = w & ((1ull << b) - 1);
    std::uint64_t hi = (w >> (b + 1)) << b;
    return hi | lo;
}

std::uint64_t unsqueeze_bit(std::uint64_t w, int b) {
    std::uint64_t lo = w & ((1ull << b) - 1);
    std::uint64_t hi = (w >> b) << (b + 1);
    return hi | lo;
}

}  // namespace

CanonicalPath canonical_path(const VertexLabel& u, const VertexLabel& v) {
    if (u.n != v.n) throw std::invalid_argument("canonical_path: dimension mismatch");
    if (u.n < 2) throw std::invalid_argument("canonical_path: n >= 2");
    if (u.word == v.word) throw std::invalid_argument("canonical_path: identical endpoints");

    CanonicalPath p;
    p.vertices.push_back(u);
    walk_canonical(u.n, u.word, v.word, [&](std::uint64_t tail, int dim) {
        VertexLabel next = (dim == 0) ? complement(VertexLabel(u.n, tail))
                                      : flip(VertexLabel(u.n, tail), dim);
        p.vertices.push_back(next);
        p.dims.push_back(dim);
    });
    return p;
}

std::size_t fq_edge_count(int n) {
    return static_cast<std::size_t>(n + 1) << (n - 1);
}

std::size_t fq_edge_id(int n, std::uint64_t endpoint_word, int dim) {
    std::size_t half = std::size_t(1) << (n - 1);
    if (dim == 0) {
        std::uint64_t key = endpoint_word < half ? endpoint_word
                                                 : (endpoint_word ^ ((1ull << n) - 1));
        return static_cast<std::size_t>(n) * half + key;
    }
    int b = n - dim;  // machine bit of x_dim
    std::uint64_t base = endpoint_word & ~(1ull << b);
    return static_cast<std::size_t>(dim - 1) * half + squeeze_bit(base, b);
}

EdgeRef fq_edge_from_id(int n, std::size_t id) {
    std::size_t half = std::size_t(1) << (n - 1);
    if (id >= fq_edge_count(n)) throw std::out_of_range("fq_edge_from_id: id out of range");
    std::size_t cls = id / half;
    std::uint64_t key = id % half;
    if (cls == static_cast<std::size_t>(n)) {
        VertexLabel u(n, key);
        return EdgeRef{u, complement(u), 0};
    }
    int dim = static_cast<int>(cls) + 1;
    int b = n - dim;
    VertexLabel u(n, unsqueeze_bit(key, b));
    return EdgeRef{u, flip(u, dim), dim};
}

CongestionCensus congestion_census(int n, int max_n) {
    if (max_n < 2 || max_n > kMaxCensus) throw std::out_of_range("congestion_census: bad configured max");
    if (n < 2 || n > max_n) throw std::out_of_range("congestion_census: n out of range");

    CongestionCensus c;
    c.n = n;
    c.per_edge.assign(fq_edge_count(n), 0);

    std::uint64_t size = 1ull << n;
    for (std::uint64_t u = 0; u < size; ++u)
        for (std::uint64_t v = 0; v < size; ++v) {
            if (u == v) continue;
            walk_canonical(n, u, v, [&](std::uint64_t tail, int dim) {
                ++c.per_edge[fq_edge_id(n, tail, dim)];
                ++c.total_path_length;
            });
        }

    std::size_t half = std::size_t(1) << (n - 1);
    for (int cls = 0; cls <= n; ++cls) {
        std::size_t lo = (cls == 0) ? static_cast<std::size_t>(n) * half
                                    : static_cast<std::size_t>(cls - 1) * half;
        ClassStat stat;
        stat.count = static_cast<std::int64_t>(half);
        stat.min = stat.max = c.per_edge[lo];
        for (std::size_t i = lo; i < lo + half; ++i) {
            stat.min = std::min(stat.min, c.per_edge[i]);
            stat.max = std::max(stat.max, c.per_edge[i]);
        }
        c.class_summary[cls] = stat;
        c.max_congestion = std::max(c.max_congestion, stat.max);
    }
    for (std::int64_t load : c.per_edge) c.total_load += load;
    return c;
}

mpz_class class_formula(int n, CgClass cls) {
    if (n < 2) throw std::out_of_range("class_formula: n >= 2");
    if (cls == CgClass::dim0) {
        mpz_class sum = 0;
        for (int k = 0; k <= n / 2 - 1; ++k) sum += binomial(n, k);
        return 2 * sum;
    }
    return 2 * (pow2(static_cast<unsigned>(n) - 1) - binomial(n - 1, n / 2 - 1));
}

mpz_class claimed_global_bound(int n) {
    if (n < 1) throw std::out_of_range("claimed_global_bound: n >= 1");
    return pow2(static_cast<unsigned>(n)) - binomial(n, n / 2);
}

Inequality1Audit audit_inequality_1(int n) {
    CongestionCensus census = congestion_census(n);
    Inequality1Audit a;
    a.bound = claimed_global_bound(n);
    a.max_measured = census.max_congestion;
    a.holds = (mpz_class(a.max_measured) <= a.bound);
    if (!a.holds) {
        for (std::size_t id = 0; id < census.per_edge.size(); ++id)
            if (census.per_edge[id] == census.max_congestion) {
                a.witness = fq_edge_from_id(n, id);
                break;
            }
    }
    return a;
}

}  // namespace crossfold
