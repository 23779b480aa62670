#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "operad/odd_graph.hpp"

using namespace operad;
using namespace operad::oddgraph;
using operad::linalg::IntPolynomial;

TEST_CASE("build: triangle and Petersen") {
    OddGraph g2 = build(2);
    CHECK(g2.vertices.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(g2.adjacency.at(i, j) == ((i != j) ? 1 : 0));

    OddGraph g3 = build(3);
    CHECK(g3.vertices.size() == 10);
    for (int i = 0; i < 10; ++i) {
        int deg = 0;
        for (int j = 0; j < 10; ++j)
            if (g3.adjacency.at(i, j) == 1) ++deg;
        CHECK(deg == 3);
    }

    CHECK(build(4).vertices.size() == 35);
}

TEST_CASE("regularity and vertex count up to n=5") {
    for (int n = 2; n <= 5; ++n) {
        OddGraph g = build(n);
        CHECK(Int(g.vertices.size()) == binomial(2 * n - 1, n - 1));
        for (int i = 0; i < g.vertices.size(); ++i) {
            int deg = 0;
            CHECK(g.adjacency.at(i, i) == 0);
            for (int j = 0; j < g.vertices.size(); ++j) {
                CHECK(g.adjacency.at(i, j) == g.adjacency.at(j, i));
                if (g.adjacency.at(i, j) == 1) ++deg;
            }
            CHECK(deg == n);
        }
    }
}

TEST_CASE("B^2 profile") {
    for (int n = 2; n <= 4; ++n) CHECK(b_squared_profile(build(n)));
}

TEST_CASE("gamma partner maps") {
    CHECK(gamma2({2, 3}, 3) == Subset{4, 5});
    CHECK(gamma2({2, 5, 7}, 4) == Subset{3, 4, 6});
    CHECK(gamma12({1, 3}, 3) == Subset{4, 5});

    CHECK_THROWS_AS(gamma2({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(gamma2({3, 4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(gamma12({2, 3}, 3), std::invalid_argument);

    // gamma2 is the unique disjoint partner avoiding 1 and 2, and a
    // bijection between its domain and image
    for (int n = 3; n <= 5; ++n) {
        SubsetTable table(n);
        std::set<Subset> images;
        for (int i = 0; i < table.size(); ++i) {
            const Subset& s = table.at(i);
            bool has1 = std::binary_search(s.begin(), s.end(), 1);
            bool has2 = std::binary_search(s.begin(), s.end(), 2);
            if (has1 || !has2) continue;
            Subset partner = gamma2(s, n);
            images.insert(partner);
            int disjoint_in_l2p = 0;
            for (int j = 0; j < table.size(); ++j) {
                const Subset& t = table.at(j);
                if (std::binary_search(t.begin(), t.end(), 1)) continue;
                if (std::binary_search(t.begin(), t.end(), 2)) continue;
                if (subsets_disjoint(s, t)) {
                    ++disjoint_in_l2p;
                    CHECK(t == partner);
                }
            }
            CHECK(disjoint_in_l2p == 1);
        }
        CHECK(Int(images.size()) == binomial(2 * n - 3, n - 2));  // |Lambda_2(n)|
    }
}

TEST_CASE("gamma2 reverses the lexicographic order") {
    for (int n = 3; n <= 5; ++n) {
        SubsetTable table(n);
        std::vector<Subset> l2;
        for (int i = 0; i < table.size(); ++i) {
            const Subset& s = table.at(i);
            if (!std::binary_search(s.begin(), s.end(), 1) &&
                std::binary_search(s.begin(), s.end(), 2))
                l2.push_back(s);
        }
        for (std::size_t a = 0; a < l2.size(); ++a)
            for (std::size_t b = a + 1; b < l2.size(); ++b)
                CHECK(gamma2(l2[b], n) < gamma2(l2[a], n));
    }
}

TEST_CASE("block form of the adjacency matrix") {
    CHECK(verify_block_form(3));
    CHECK(verify_block_form(4));
    CHECK_THROWS_AS(verify_block_form(2), std::invalid_argument);
    CHECK_THROWS_AS(charpoly_recursive(2), std::invalid_argument);
}

TEST_CASE("characteristic polynomial recursion") {
    IntPolynomial direct3 = linalg::charpoly(build(3).adjacency);
    IntPolynomial rec3 = charpoly_recursive(3);
    CHECK(rec3 == direct3);
    CHECK(rec3.degree() == 10);
    CHECK(rec3.leading() == 1);

    // (x-3)(x-1)^5(x+2)^4, reconstructed from its factors
    IntPolynomial expected = IntPolynomial::linear_root(3);
    for (int i = 0; i < 5; ++i) expected = expected * IntPolynomial::linear_root(1);
    for (int i = 0; i < 4; ++i) expected = expected * IntPolynomial::linear_root(-2);
    CHECK(rec3 == expected);

    CHECK(charpoly_recursive(4) == linalg::charpoly(build(4).adjacency));
}

TEST_CASE("spectra") {
    SpectrumReport s2 = spectrum(2);
    REQUIRE(s2.pairs.size() == 2);
    CHECK(s2.pairs[0] == std::pair<Int, int>{-1, 2});
    CHECK(s2.pairs[1] == std::pair<Int, int>{2, 1});
    CHECK(s2.charpolyDirect == IntPolynomial({2, 3, 0, -1}));

    SpectrumReport s3 = spectrum(3, true);
    REQUIRE(s3.pairs.size() == 3);
    CHECK(s3.pairs[0] == std::pair<Int, int>{1, 5});
    CHECK(s3.pairs[1] == std::pair<Int, int>{-2, 4});
    CHECK(s3.pairs[2] == std::pair<Int, int>{3, 1});
    REQUIRE(s3.charpolyRecursive.has_value());
    CHECK(*s3.charpolyRecursive == s3.charpolyDirect);

    SpectrumReport s4 = spectrum(4);
    REQUIRE(s4.pairs.size() == 4);
    CHECK(s4.pairs[0] == std::pair<Int, int>{-1, 14});
    CHECK(s4.pairs[1] == std::pair<Int, int>{2, 14});
    CHECK(s4.pairs[2] == std::pair<Int, int>{-3, 6});
    CHECK(s4.pairs[3] == std::pair<Int, int>{4, 1});
}

TEST_CASE("dot export") {
    std::string dot = to_dot(build(2));
    CHECK(dot.find("graph O_2") != std::string::npos);
    CHECK(dot.find("\"1\" -- \"2\"") != std::string::npos);
    CHECK(dot.find("\"1\" -- \"3\"") != std::string::npos);
    CHECK(dot.find("\"2\" -- \"3\"") != std::string::npos);
}
