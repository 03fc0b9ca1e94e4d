#include <doctest.h>

#include <algorithm>
#include <set>

#include "crossfold/hypercube.hpp"

using namespace crossfold;

TEST_CASE("decimal expansion") {
    CHECK(decimal(VertexLabel::from_bits("101")) == 5);
    CHECK(decimal(VertexLabel::from_bits("000")) == 0);
    CHECK(decimal(VertexLabel::from_bits("1111")) == 15);
}

TEST_CASE("decimal is a bijection tied to complement") {
    for (int n = 1; n <= 10; ++n) {
        std::set<std::uint64_t> seen;
        for (std::uint64_t w = 0; w < (1ull << n); ++w) {
            VertexLabel v(n, w);
            CHECK(seen.insert(decimal(v)).second);
            CHECK(decimal(complement(v)) == (1ull << n) - 1 - decimal(v));
        }
    }
}

TEST_CASE("complement flips every bit and is an involution") {
    CHECK(complement(VertexLabel::from_bits("0110")) == VertexLabel::from_bits("1001"));
    CHECK(complement(VertexLabel::from_bits("000")) == VertexLabel::from_bits("111"));
    for (std::uint64_t w = 0; w < 32; ++w) {
        VertexLabel v(5, w);
        CHECK(complement(complement(v)) == v);
    }
}

TEST_CASE("agreement") {
    CHECK(agreement(VertexLabel::from_bits("0101"), VertexLabel::from_bits("0110")) == 2);
    CHECK(agreement(VertexLabel::from_bits("0000"), VertexLabel::from_bits("1111")) == 0);
    VertexLabel u = VertexLabel::from_bits("01011");
    CHECK(agreement(u, u) == 5);
    CHECK_THROWS_AS(agreement(u, VertexLabel::from_bits("01")), std::invalid_argument);
    // agreement + hamming = n
    for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = 0; b < 16; ++b)
            CHECK(agreement(VertexLabel(4, a), VertexLabel(4, b)) +
                      hamming(VertexLabel(4, a), VertexLabel(4, b)) ==
                  4);
}

TEST_CASE("edge_dim") {
    CHECK(edge_dim(VertexLabel::from_bits("010"), VertexLabel::from_bits("011")) == 3);
    CHECK(edge_dim(VertexLabel::from_bits("010"), VertexLabel::from_bits("101")) == 0);
    CHECK_THROWS_WITH_AS(
        edge_dim(VertexLabel::from_bits("0100"), VertexLabel::from_bits("0111")),
        "not an FQ_n edge", std::invalid_argument);
    // defined exactly on pairs with agreement 0 or n-1; count the edge classes
    for (int n = 2; n <= 6; ++n) {
        std::int64_t dim_edges = 0, comp_edges = 0;
        for (std::uint64_t a = 0; a < (1ull << n); ++a)
            for (std::uint64_t b = a + 1; b < (1ull << n); ++b) {
                VertexLabel u(n, a), v(n, b);
                int agree = agreement(u, v);
                if (agree == 0 || agree == n - 1) {
                    int d = edge_dim(u, v);
                    (d == 0 ? comp_edges : dim_edges) += 1;
                } else {
                    CHECK_THROWS_AS(edge_dim(u, v), std::invalid_argument);
                }
            }
        CHECK(dim_edges == std::int64_t(n) << (n - 1));
        CHECK(comp_edges == std::int64_t(1) << (n - 1));
    }
}

TEST_CASE("fq_neighbors") {
    auto as_set = [](const std::vector<VertexLabel>& v) {
        std::set<std::uint64_t> s;
        for (const VertexLabel& x : v) s.insert(x.word);
        return s;
    };
    CHECK(as_set(fq_neighbors(VertexLabel::from_bits("00"))) ==
          std::set<std::uint64_t>{1, 2, 3});
    CHECK(as_set(fq_neighbors(VertexLabel::from_bits("000"))) ==
          std::set<std::uint64_t>{1, 2, 4, 7});
    CHECK_THROWS_AS(fq_neighbors(VertexLabel(1, 0)), std::invalid_argument);

    for (int n = 2; n <= 12; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            std::uint64_t w = (0x9E3779B97F4A7C15ull * (rep + 1)) & ((1ull << n) - 1);
            VertexLabel v(n, w);
            auto nb = fq_neighbors(v);
            CHECK(as_set(nb).size() == static_cast<std::size_t>(n) + 1);
            // symmetry of the neighbor relation
            for (const VertexLabel& w2 : nb) {
                auto back = fq_neighbors(w2);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
        }
}

TEST_CASE("subcube vertices and projection") {
    auto verts = subcube_vertices(4, VertexLabel::from_bits("01"));
    std::set<std::uint64_t> words;
    for (const VertexLabel& v : verts) words.insert(v.word);
    CHECK(words == std::set<std::uint64_t>{4, 5, 6, 7});  // 0100, 0101, 0110, 0111

    CHECK(subcube_project(VertexLabel::from_bits("0110"), 2) == VertexLabel::from_bits("10"));
    CHECK_THROWS_AS(subcube_vertices(4, VertexLabel::from_bits("0100")), std::out_of_range);
    CHECK_THROWS_AS(subcube_project(VertexLabel::from_bits("0110"), 4), std::out_of_range);

    // no complementary pair inside a subcube (prefixes agree)
    for (const VertexLabel& a : subcube_vertices(4, VertexLabel::from_bits("011")))
        for (const VertexLabel& b : subcube_vertices(4, VertexLabel::from_bits("011")))
            CHECK(agreement(a, b) != 0);
}

TEST_CASE("projection preserves adjacency and non-adjacency exhaustively") {
    for (int n = 2; n <= 8; ++n)
        for (int m = 1; m < n; ++m)
            for (std::uint64_t pre = 0; pre < (1ull << m); ++pre) {
                auto verts = subcube_vertices(n, VertexLabel(m, pre));
                for (std::size_t i = 0; i < verts.size(); ++i)
                    for (std::size_t j = i + 1; j < verts.size(); ++j) {
                        // inside the subcube only dimension edges can occur, so
                        // induced adjacency = hamming distance 1, exactly what
                        // Q_{n-m} adjacency must mirror
                        bool induced = hamming(verts[i], verts[j]) == 1;
                        VertexLabel pi = subcube_project(verts[i], m);
                        VertexLabel pj = subcube_project(verts[j], m);
                        CHECK(induced == (hamming(pi, pj) == 1));
                    }
            }
}

TEST_CASE("small isomorphisms") {
    SmallIsoReport rep = check_small_isomorphisms();
    CHECK(rep.fq2_is_k4);
    CHECK(rep.fq3_is_k44);
    CHECK(rep.all_pass());
}

TEST_CASE("vertex label plumbing") {
    CHECK(VertexLabel::from_bits("0110").bits() == "0110");
    CHECK(VertexLabel::from_bits("100").bit(1) == 1);
    CHECK(VertexLabel::from_bits("100").bit(3) == 0);
    CHECK_THROWS_AS(VertexLabel::from_bits("012"), std::invalid_argument);
    CHECK_THROWS_AS(VertexLabel(3, 8), std::invalid_argument);
    CHECK(make_edge(VertexLabel::from_bits("010"), VertexLabel::from_bits("011")).dim == 3);
}
