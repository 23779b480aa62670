#include <catch2/catch_amalgamated.hpp>

#include "operad/catalan.hpp"

using namespace operad;
using catalan::CatalanTriangle;
using catalan::riordan_check;
using catalan::triangle;

TEST_CASE("catalan numbers") {
    CHECK(catalan::catalan(0) == 1);
    CHECK(catalan::catalan(3) == 5);
    CHECK(catalan::catalan(4) == 14);
    CHECK(catalan::catalan(5) == 42);
    for (long n = 0; n <= 20; ++n) CHECK(catalan::catalan(n) * Int(n + 1) == binomial(2 * n, n));
}

TEST_CASE("triangle rows") {
    CatalanTriangle t = triangle(7);
    CHECK(t.rows[0] == std::vector<Int>{1});
    CHECK(t.rows[1] == std::vector<Int>{2, 1});
    CHECK(t.rows[2] == std::vector<Int>{5, 4, 1});
    CHECK(t.rows[3] == std::vector<Int>{14, 14, 6, 1});
    CHECK(t.rows[4] == std::vector<Int>{42, 48, 27, 8, 1});
    CHECK(t.rows[5] == std::vector<Int>{132, 165, 110, 44, 10, 1});
    CHECK(t.rows[6] == std::vector<Int>{429, 572, 429, 208, 65, 12, 1});
}

TEST_CASE("first column is shifted catalan") {
    CatalanTriangle t = triangle(10);
    for (int n = 0; n < 10; ++n) CHECK(t.at(n, 0) == catalan::catalan(n + 1));
}

TEST_CASE("riordan characterization") {
    CHECK(riordan_check(7));
}

TEST_CASE("row sums give total spectrum multiplicity") {
    CatalanTriangle t = triangle(6);
    for (int n = 2; n <= 6; ++n) {
        Int sum = 0;
        for (int i = 1; i <= n; ++i) sum += t.at(n - 1, i - 1);
        CHECK(sum == binomial(2 * n - 1, n - 1));
    }
}

TEST_CASE("csv export") {
    CHECK(triangle(3).to_csv() == "1\n2,1\n5,4,1\n");
}
