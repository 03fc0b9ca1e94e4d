#include "crossfold/hypercube.hpp"

#include <bit>
#include <stdexcept>

namespace crossfold {

namespace {

void require_same_dim(const VertexLabel& u, const VertexLabel& v) {
    if (u.n != v.n) throw std::invalid_argument("vertex dimensions differ");
}

std::uint64_t full_mask(int n) { return (n == 64) ? ~0ull : ((1ull << n) - 1); }

}  // namespace

VertexLabel::VertexLabel(int n_, std::uint64_t word_) : n(n_), word(word_) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("vertex dimension out of range");
    if (word >= (1ull << n)) throw std::invalid_argument("vertex word exceeds 2^n - 1");
}

VertexLabel VertexLabel::from_bits(const std::string& bits) {
    if (bits.empty() || bits.size() > kMaxDim) throw std::invalid_argument("bad bit string length");
    std::uint64_t w = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be over {0,1}");
        w = (w << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return VertexLabel(static_cast<int>(bits.size()), w);
}

int VertexLabel::bit(int i) const {
    if (i < 1 || i > n) throw std::out_of_range("bit index out of 1..n");
    return static_cast<int>((word >> (n - i)) & 1u);
}

std::string VertexLabel::bits() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((word >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::uint64_t decimal(const VertexLabel& v) { return v.word; }

VertexLabel complement(const VertexLabel& v) {
    VertexLabel r = v;
    r.word ^= full_mask(v.n);
    return r;
}

VertexLabel flip(const VertexLabel& v, int t) {
    if (t < 1 || t > v.n) throw std::out_of_range("flip index out of 1..n");
    VertexLabel r = v;
    r.word ^= 1ull << (v.n - t);
    return r;
}

int agreement(const VertexLabel& u, const VertexLabel& v) {
    require_same_dim(u, v);
    return u.n - std::popcount(u.word ^ v.word);
}

int hamming(const VertexLabel& u, const VertexLabel& v) {
    require_same_dim(u, v);
    return std::popcount(u.word ^ v.word);
}

bool fq_adjacent(const VertexLabel& u, const VertexLabel& v) {
    require_same_dim(u, v);
    int h = std::popcount(u.word ^ v.word);
    return h == 1 || h == u.n;
}

int edge_dim(const VertexLabel& u, const VertexLabel& v) {
    require_same_dim(u, v);
    std::uint64_t diff = u.word ^ v.word;
    if (diff == full_mask(u.n)) return 0;
    if (std::popcount(diff) != 1) throw std::invalid_argument("not an FQ_n edge");
    return u.n - std::countr_zero(diff);
}

EdgeRef make_edge(const VertexLabel& u, const VertexLabel& v) {
    return EdgeRef{u, v, edge_dim(u, v)};
}

std::vector<VertexLabel> fq_neighbors(const VertexLabel& v) {
    if (v.n < 2) throw std::invalid_argument("FQ_1 is excluded; need n >= 2");
    std::vector<VertexLabel> out;
    out.reserve(static_cast<std::size_t>(v.n) + 1);
    for (int t = 1; t <= v.n; ++t) out.push_back(flip(v, t));
    out.push_back(complement(v));
    return out;
}

std::vector<VertexLabel> subcube_vertices(int n, const VertexLabel& prefix) {
    int m = prefix.n;
    if (m < 1 || m >= n || n > kMaxDim) throw std::out_of_range("prefix length must satisfy 1 <= m < n");
    std::vector<VertexLabel> out;
    out.reserve(1ull << (n - m));
    std::uint64_t hi = prefix.word << (n - m);
    for (std::uint64_t suffix = 0; suffix < (1ull << (n - m)); ++suffix)
        out.push_back(VertexLabel(n, hi | suffix));
    return out;
}

VertexLabel subcube_project(const VertexLabel& v, int m) {
    if (m < 1 || m >= v.n) throw std::out_of_range("projection length must satisfy 1 <= m < n");
    return VertexLabel(v.n - m, v.word & full_mask(v.n - m));
}

SmallIsoReport check_small_isomorphisms() {
    SmallIsoReport rep;

    // FQ_2: complete on 4 vertices.
    rep.fq2_is_k4 = true;
    int fq2_edges = 0;
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = a + 1; b < 4; ++b) {
            if (!fq_adjacent(VertexLabel(2, a), VertexLabel(2, b))) rep.fq2_is_k4 = false;
            ++fq2_edges;
        }
    rep.details = "FQ_2: " + std::to_string(fq2_edges) + " pairs, all adjacent: " +
                  (rep.fq2_is_k4 ? "yes" : "no");

    // FQ_3: complete bipartite on the even/odd weight classes.
    rep.fq3_is_k44 = true;
    int cross = 0;
    for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = a + 1; b < 8; ++b) {
            bool same_class = (std::popcount(a) % 2) == (std::popcount(b) % 2);
            bool adj = fq_adjacent(VertexLabel(3, a), VertexLabel(3, b));
            if (same_class && adj) rep.fq3_is_k44 = false;
            if (!same_class) {
                if (!adj) rep.fq3_is_k44 = false;
                ++cross;
            }
        }
    rep.details += "; FQ_3: " + std::to_string(cross) + " cross pairs adjacent, no intra-class edge: " +
                   (rep.fq3_is_k44 ? "yes" : "no");
    return rep;
}

}  // namespace crossfold
