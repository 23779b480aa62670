#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "operad/algebras.hpp"

using namespace operad;
using namespace operad::algebras;

namespace {
MultiPoly x(int vars, int i) { return MultiPoly::variable(vars, i); }
}  // namespace

TEST_CASE("jacobian bracket basics") {
    CHECK(jacobian_bracket({x(2, 1), x(2, 2)}) == MultiPoly::constant(2, 1));

    MultiPoly x2 = x(2, 1) * x(2, 1);
    CHECK(jacobian_bracket({x2, x(2, 2)}) == Rat(2) * x(2, 1));

    CHECK(jacobian_bracket({x(3, 1), x(3, 2), x(3, 3)}) == MultiPoly::constant(3, 1));
}

TEST_CASE("jacobian bracket is antisymmetric") {
    std::mt19937_64 rng(99);
    for (int n = 2; n <= 3; ++n)
        for (int t = 0; t < 10; ++t) {
            std::vector<MultiPoly> fs;
            for (int k = 0; k < n; ++k) fs.push_back(random_multipoly(rng, n));
            auto bracket = [](const std::vector<MultiPoly>& a) { return jacobian_bracket(a); };
            CHECK(is_antisymmetric_on(bracket, fs));
        }
}

TEST_CASE("poisson-jacobi instance") {
    auto bracket = [](const std::vector<MultiPoly>& a) { return jacobian_bracket(a); };
    std::vector<MultiPoly> v = {x(2, 1), x(2, 2), x(2, 1) * x(2, 1)};
    CHECK(check_filippov(bracket, v, 2).is_zero());
}

TEST_CASE("jacobian filippov corpus") {
    CHECK(jacobian_filippov_corpus(2, 50, 2024).pass());
    CHECK(jacobian_filippov_corpus(3, 50, 2024).pass());
}

TEST_CASE("filippov example structure constants") {
    StructureConstants f3 = filippov_example(3);
    CHECK(f3.apply_basis({1, 2, 3}).c == std::vector<Rat>{0, 0, 0, 1});   // +v4
    CHECK(f3.apply_basis({2, 3, 4}).c == std::vector<Rat>{-1, 0, 0, 0});  // -v1
    CHECK(f3.apply_basis({1, 1, 2}).is_zero());
    CHECK(f3.apply_basis({2, 1, 3}).c == std::vector<Rat>{0, 0, 0, -1});  // sorted sign

    StructureConstants f2 = filippov_example(2);
    CHECK(f2.apply_basis({1, 2}).c == std::vector<Rat>{0, 0, 1});
    CHECK(f2.apply_basis({1, 3}).c == std::vector<Rat>{0, -1, 0});
    CHECK(f2.apply_basis({2, 3}).c == std::vector<Rat>{1, 0, 0});
}

TEST_CASE("filippov example satisfies the identity exhaustively") {
    CHECK(filippov_example_exhaustive(2).pass());
    CHECK(filippov_example_exhaustive(3).pass());
}

TEST_CASE("ncom for a commutative product is associativity") {
    std::mt19937_64 rng(5);
    auto mult = [](const std::vector<MultiPoly>& a) { return a[0] * a[1]; };
    for (int t = 0; t < 10; ++t) {
        std::vector<MultiPoly> u;
        for (int k = 0; k < 3; ++k) u.push_back(random_multipoly(rng, 2));
        CHECK(check_ncom(mult, u, 2).is_zero());
    }
}

TEST_CASE("derivation product") {
    MultiPoly v = x(1, 1);
    CHECK(derivation_product(1, {v, v, v}) == Rat(3) * (v * v));

    DerivationNCom m = derivation_ncom(1, 3);
    std::vector<MultiPoly> all_x = {v, v, v, v, v};
    CHECK(check_ncom(m, all_x, 3).is_zero());

    std::vector<MultiPoly> mixed = {v, v * v, v, v, v * v * v};
    CHECK(check_ncom(m, mixed, 3).is_zero());

    CHECK_THROWS_AS(derivation_ncom(1, 2), std::invalid_argument);
}

TEST_CASE("derivation product is symmetric") {
    std::mt19937_64 rng(17);
    DerivationNCom m = derivation_ncom(2, 3);
    for (int t = 0; t < 10; ++t) {
        std::vector<MultiPoly> fs;
        for (int k = 0; k < 3; ++k) fs.push_back(random_multipoly(rng, 3));
        CHECK(is_symmetric_on(m, fs));
    }
}

TEST_CASE("derivation ncom corpus") {
    CHECK(derivation_ncom_corpus(1, 3, 25, 77).pass());
    CHECK(derivation_ncom_corpus(1, 4, 25, 77).pass());
}

TEST_CASE("delta tables") {
    StructureConstants d1 = delta_ncom(3, 1, 1);
    CHECK(d1.apply_basis({1, 1, 1}).c == std::vector<Rat>{1});

    StructureConstants d2 = delta_ncom(3, 2, 1);
    CHECK(d2.apply_basis({1, 1, 2}).c == std::vector<Rat>{1, 1});
    CHECK(d2.apply_basis({1, 1, 1}).c == std::vector<Rat>{1, 0});

    // symmetric in the inputs by construction
    std::mt19937_64 rng(3);
    auto mult = [&](const std::vector<ModuleElement>& a) { return d2.apply(a); };
    for (int t = 0; t < 10; ++t) {
        std::vector<ModuleElement> args;
        for (int k = 0; k < 3; ++k) {
            ModuleElement e(2);
            e.c[0] = static_cast<long>(rng() % 5) - 2;
            e.c[1] = static_cast<long>(rng() % 5) - 2;
            args.push_back(e);
        }
        CHECK(is_symmetric_on(mult, args));
    }
}

TEST_CASE("indicator delta table holds only at rank one") {
    CHECK(ncom_exhaustive(delta_ncom(3, 1, 1)).pass());

    // At rank 2 the relation genuinely fails on repeated-index tuples;
    // the defect below is hand-checked: the four column-group terms at
    // (e1,e1,e1,e2,e2) are (e1+e2) - (2e1+2e2) - (2e1+2e2) + (2e1+e2).
    CheckReport r = ncom_exhaustive(delta_ncom(3, 2, 1));
    CHECK_FALSE(r.pass());
    CHECK(r.trials == 32);
    CHECK(r.failures.size() == 8);
    CHECK(r.failures[0].first == "e_(1,1,1,2,2)");
    CHECK(r.failures[0].second == "-1*e1 + -2*e2");
}

TEST_CASE("weighted delta table holds at every tested rank") {
    CHECK(ncom_exhaustive(weighted_delta_ncom(3, 1, 1)).pass());
    CHECK(ncom_exhaustive(weighted_delta_ncom(3, 2, 1)).pass());
    CHECK(ncom_exhaustive(weighted_delta_ncom(3, 3, 2)).pass());
    CHECK(ncom_exhaustive(weighted_delta_ncom(3, 2, Rat(5, 3))).pass());

    StructureConstants w = weighted_delta_ncom(3, 2, 1);
    CHECK(w.apply_basis({1, 1, 2}).c == std::vector<Rat>{2, 1});
    CHECK(w.apply_basis({1, 1, 1}).c == std::vector<Rat>{3, 0});
}

TEST_CASE("coefficient identity") {
    CHECK(coefficient_identity_check(delta_ncom(3, 1, 1)));
    CHECK_FALSE(coefficient_identity_check(delta_ncom(3, 2, 1)));
    CHECK(coefficient_identity_check(weighted_delta_ncom(3, 2, 1)));
    CHECK(coefficient_identity_check(weighted_delta_ncom(3, 3, 2)));

    StructureConstants corrupted = weighted_delta_ncom(3, 2, 1);
    corrupted.set({1, 1, 2}, 1, 3);  // perturb one entry
    CHECK_FALSE(coefficient_identity_check(corrupted));
}

TEST_CASE("basis vanishing is equivalent to the coefficient identity") {
    std::vector<StructureConstants> instances = {delta_ncom(3, 1, 1), delta_ncom(3, 2, 1),
                                                 weighted_delta_ncom(3, 2, 1)};
    StructureConstants corrupted = weighted_delta_ncom(3, 2, 1);
    corrupted.set({1, 1, 2}, 1, 3);
    instances.push_back(corrupted);
    for (const auto& sc : instances)
        CHECK(ncom_exhaustive(sc).pass() == coefficient_identity_check(sc));
}

TEST_CASE("structure constants table io") {
    std::istringstream in(
        "# vector-field style table, n=3 m=2\n"
        "1 1 1 1 1\n"
        "1 1 2 1 1\n"
        "1 1 2 2 1/2\n"
        "\n"
        "2 2 2 2 -3/4\n");
    StructureConstants sc = load_structure_constants(in, 3, 2, SymKind::symmetric);
    CHECK(sc.coefficient({1, 1, 1}, 1) == 1);
    CHECK(sc.coefficient({1, 2, 1}, 2) == Rat(1, 2));
    CHECK(sc.coefficient({2, 2, 2}, 2) == Rat(-3, 4));
    CHECK(sc.coefficient({1, 2, 2}, 1) == 0);

    std::istringstream bad("1 1 1 1\n");
    CHECK_THROWS_AS(load_structure_constants(bad, 3, 2, SymKind::symmetric),
                    std::invalid_argument);
}

TEST_CASE("antisymmetric table sign handling") {
    StructureConstants sc(2, 3, SymKind::antisymmetric);
    sc.set({2, 1}, 3, 1);  // stored as -(1,2)
    CHECK(sc.coefficient({1, 2}, 3) == -1);
    CHECK(sc.coefficient({2, 1}, 3) == 1);
    CHECK(sc.coefficient({1, 1}, 3) == 0);
    CHECK_THROWS_AS(sc.set({1, 1}, 2, 1), std::invalid_argument);
}
