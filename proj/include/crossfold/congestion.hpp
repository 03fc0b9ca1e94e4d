#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "crossfold/hypercube.hpp"

namespace crossfold {

inline constexpr int kMaxCensus = 12;

// The routed path between two distinct vertices: if u and v agree in at most
// floor(n/2) - 1 positions, take the complementary edge first and then flip
// the remaining differing positions in increasing dimension order; otherwise
// flip the differing positions directly, again in increasing order.
struct CanonicalPath {
    std::vector<VertexLabel> vertices;  // u_0 ... u_l
    std::vector<int> dims;              // dims[k] = Dim(u_k u_{k+1})
    std::size_t length() const { return dims.size(); }
};

CanonicalPath canonical_path(const VertexLabel& u, const VertexLabel& v);

// Dense edge indexing for FQ_n: dimension-t edges occupy [(t-1) 2^{n-1},
// t 2^{n-1}), keyed by the endpoint with bit t = 0; complementary edges
// occupy [n 2^{n-1}, (n+1) 2^{n-1}), keyed by the endpoint below 2^{n-1}.
std::size_t fq_edge_count(int n);
std::size_t fq_edge_id(int n, std::uint64_t endpoint_word, int dim);
EdgeRef fq_edge_from_id(int n, std::size_t id);

struct ClassStat {
    std::int64_t min = 0, max = 0;
    std::int64_t count = 0;
};

// Exhaustive per-edge path loads for the doubled-complete-graph embedding:
// every ordered pair (u, v), u != v, routes one canonical path.
struct CongestionCensus {
    int n = 0;
    std::vector<std::int64_t> per_edge;     // indexed by fq_edge_id
    std::map<int, ClassStat> class_summary;  // dimension class 0..n
    std::int64_t max_congestion = 0;
    std::int64_t total_load = 0;       // sum of per-edge loads
    std::int64_t total_path_length = 0;  // sum of routed path lengths; equals total_load
};

CongestionCensus congestion_census(int n, int max_n = kMaxCensus);

enum class CgClass { dim0, dimt };

// Closed forms for the two congestion classes:
//   dim0: 2 * sum_{k=0}^{floor(n/2)-1} C(n,k)
//   dimt: 2 * (2^{n-1} - C(n-1, floor(n/2)-1))
mpz_class class_formula(int n, CgClass c);

// 2^n - C(n, floor(n/2)): the claimed global congestion bound. Holds with
// equality for even n; fails against the dimension-edge class for odd n >= 3.
mpz_class claimed_global_bound(int n);

struct Inequality1Audit {
    bool holds = false;
    std::int64_t max_measured = 0;
    mpz_class bound;
    std::optional<EdgeRef> witness;  // a maximally loaded edge when violated
};

// Census-backed audit of the claimed bound. Expected outcome: holds (with
// equality) for even n, violated for odd n >= 3.
Inequality1Audit audit_inequality_1(int n);

}  // namespace crossfold
