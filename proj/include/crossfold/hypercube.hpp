#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace crossfold {

inline constexpr int kMaxDim = 62;

// Vertex of Q_n / FQ_n: the n-bit string x_1 x_2 ... x_n with x_1 most
// significant, stored as its decimal value. Bit i of the label is bit (n-i)
// of the word, so single-bit flips and complements are one xor, and word
// order equals the decimal order used for axis placement.
struct VertexLabel {
    int n = 0;
    std::uint64_t word = 0;

    VertexLabel() = default;
    VertexLabel(int n_, std::uint64_t word_);

    // Parses "0110" as x_1 = 0, x_2 = 1, ...
    static VertexLabel from_bits(const std::string& bits);

    int bit(int i) const;  // theta_i(x) = x_i, i in 1..n
    std::string bits() const;

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

std::uint64_t decimal(const VertexLabel& v);
VertexLabel complement(const VertexLabel& v);
VertexLabel flip(const VertexLabel& v, int t);  // flip bit x_t, t in 1..n

// |{i : u_i = v_i}|. Throws on dimension mismatch.
int agreement(const VertexLabel& u, const VertexLabel& v);
int hamming(const VertexLabel& u, const VertexLabel& v);

// Adjacency in FQ_n: hamming distance 1 (dimension edge) or n (complementary).
bool fq_adjacent(const VertexLabel& u, const VertexLabel& v);

// 0 for the complementary edge, else the unique differing bit index.
// Throws "not an FQ_n edge" when uv is not an edge.
int edge_dim(const VertexLabel& u, const VertexLabel& v);

// Edge of FQ_n with its dimension class.
struct EdgeRef {
    VertexLabel u, v;
    int dim = 0;
};
EdgeRef make_edge(const VertexLabel& u, const VertexLabel& v);

// The n single-bit flips plus the complement; requires n >= 2 (FQ_1 is a
// doubled edge and is excluded from all graph operations).
std::vector<VertexLabel> fq_neighbors(const VertexLabel& v);

// All 2^{n-m} vertices of FQ_n extending the given prefix of length m, 1 <= m < n.
std::vector<VertexLabel> subcube_vertices(int n, const VertexLabel& prefix);

// Suffix x_{m+1} ... x_n as a vertex of Q_{n-m}; for a fixed prefix this is
// an adjacency-preserving bijection of the induced subgraph onto Q_{n-m}.
VertexLabel subcube_project(const VertexLabel& v, int m);

// Structural verification of FQ_2 = K_4 and FQ_3 = K_{4,4} (even/odd weight
// bipartition); no isomorphism search involved.
struct SmallIsoReport {
    bool fq2_is_k4 = false;
    bool fq3_is_k44 = false;
    std::string details;
    bool all_pass() const { return fq2_is_k4 && fq3_is_k44; }
};
SmallIsoReport check_small_isomorphisms();

}  // namespace crossfold
