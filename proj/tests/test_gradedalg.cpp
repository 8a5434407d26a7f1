#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghom/gradedalg.hpp"
#include "oracles.hpp"

using namespace ghom;

TEST_CASE("hilbert series") {
    SUBCASE("exterior on two generators") {
        PowerSeries s = hilbert_series(AlgebraKind::Exterior, 2, 4);
        CHECK(s.coeff == std::vector<Int>{1, 2, 1, 0, 0});
    }
    SUBCASE("symmetric on two generators (stars and bars)") {
        PowerSeries s = hilbert_series(AlgebraKind::Symmetric, 2, 4);
        CHECK(s.coeff == std::vector<Int>{1, 2, 3, 4, 5});
    }
    SUBCASE("shuffle equals symmetric for every d, N") {
        for (int d = 0; d <= 4; ++d)
            CHECK(hilbert_series(AlgebraKind::Shuffle, d, 6) ==
                  hilbert_series(AlgebraKind::Symmetric, d, 6));
        PowerSeries s = hilbert_series(AlgebraKind::Shuffle, 3, 3);
        CHECK(s.coeff == std::vector<Int>{1, 3, 6, 10});
    }
    SUBCASE("tensor counts words") {
        PowerSeries s = hilbert_series(AlgebraKind::Tensor, 3, 3);
        CHECK(s.coeff == std::vector<Int>{1, 3, 9, 27});
    }
    SUBCASE("generator degree 2 spreads the counts") {
        PowerSeries s = hilbert_series(AlgebraKind::Symmetric, 1, 4, 2);
        CHECK(s.coeff == std::vector<Int>{1, 0, 1, 0, 1});
    }
}

TEST_CASE("graded basis words") {
    CHECK(graded_basis_words(AlgebraKind::Exterior, 3, 4).empty());  // k > d
    auto sym = graded_basis_words(AlgebraKind::Symmetric, 2, 2);
    REQUIRE(sym.size() == 3);
    CHECK(sym[0] == std::vector<int>{1, 1});
    // exterior words strictly increase
    for (auto& w : graded_basis_words(AlgebraKind::Exterior, 4, 2))
        CHECK(w[0] < w[1]);
    // stars-and-bars recurrence: C(d+k-1,k) = C(d+k-2,k) + C(d+k-2,k-1)
    for (int d = 1; d <= 4; ++d)
        for (int k = 1; k <= 4; ++k)
            CHECK(graded_component_count(AlgebraKind::Symmetric, d, k) ==
                  graded_component_count(AlgebraKind::Symmetric, d - 1, k) +
                      graded_component_count(AlgebraKind::Symmetric, d, k - 1));
}

TEST_CASE("shuffle products against the brute-force expansion") {
    Ring z = Ring::integers();
    SUBCASE("pinned examples") {
        ShuffleElt p = shuffle_product({1}, {2}, z);
        REQUIRE(p.size() == 1);
        CHECK(p.at({1, 2}) == 1);
        ShuffleElt sq = shuffle_product({1}, {1}, z);
        CHECK(sq.at({1, 1}) == 2);
        CHECK(shuffle_product({1}, {1}, Ring::mod(2)).empty());  // coefficient 2 dies
        ShuffleElt unit = shuffle_product({}, {1, 2}, z);
        CHECK(unit.at({1, 2}) == 1);
    }
    SUBCASE("brute force agreement up to length 4, base dimension 3") {
        for (int d = 1; d <= 3; ++d)
            for (int ku = 0; ku <= 2; ++ku)
                for (int kv = 0; kv + ku <= 4; ++kv)
                    for (auto& u : graded_basis_words(AlgebraKind::Shuffle, d, ku))
                        for (auto& v : graded_basis_words(AlgebraKind::Shuffle, d, kv)) {
                            auto engine = shuffle_product(u, v, z);
                            auto brute = oracles::shuffle_bruteforce(u, v);
                            CHECK(std::map<std::vector<int>, Int>(engine.begin(), engine.end()) ==
                                  brute);
                        }
    }
    SUBCASE("commutative and associative") {
        Ring ring = Ring::integers();
        for (int d = 1; d <= 2; ++d) {
            auto words1 = graded_basis_words(AlgebraKind::Shuffle, d, 1);
            auto words2 = graded_basis_words(AlgebraKind::Shuffle, d, 2);
            for (auto& u : words1)
                for (auto& v : words2) {
                    CHECK(shuffle_product(u, v, ring) == shuffle_product(v, u, ring));
                    for (auto& w : words1) {
                        auto left = shuffle_multiply(shuffle_product(u, v, ring),
                                                     ShuffleElt{{w, Int(1)}}, ring);
                        auto right = shuffle_multiply(ShuffleElt{{u, Int(1)}},
                                                      shuffle_product(v, w, ring), ring);
                        CHECK(left == right);
                    }
                }
        }
    }
}

TEST_CASE("symmetric-shuffle bijection") {
    auto pairs = symm_shuffle_iso(2, 2);
    CHECK(pairs.size() == 3);
    CHECK(symm_shuffle_iso(1, 3).size() == 1);
    CHECK(symm_shuffle_iso(3, 0).size() == 1);
    for (auto& [a, b] : pairs) CHECK(a == b);  // same weakly increasing labels
}

TEST_CASE("expected homology series") {
    SUBCASE("odd p collapses to the symmetric series") {
        PowerSeries s = cartan_expected_dims(3, 1, 4);
        CHECK(s.coeff == std::vector<Int>{1, 1, 1, 1, 1});
        // the algebraic identity (1+t)^d/(1-t^2)^d = 1/(1-t)^d, coefficientwise
        for (int d = 1; d <= 3; ++d)
            CHECK(cartan_expected_dims(3, d, 6) ==
                  hilbert_series(AlgebraKind::Symmetric, d, 6, 1));
    }
    SUBCASE("p = 2") {
        PowerSeries s = cartan_expected_dims(2, 2, 4);
        CHECK(s.coeff == std::vector<Int>{1, 2, 3, 4, 5});
    }
    SUBCASE("rational case is binomial") {
        PowerSeries s = cartan_expected_dims(0, 3, 4);
        CHECK(s.coeff == std::vector<Int>{1, 3, 3, 1, 0});
    }
}

TEST_CASE("cartan verification against the engine") {
    CHECK(cartan_verify(2, 1, 4).pass);
    CHECK(cartan_verify(3, 1, 4).pass);
    CartanVerifyReport rep = cartan_verify(2, 2, 4);
    CHECK(rep.pass);
    CHECK(rep.computed == std::vector<int>{1, 2, 3, 4, 5});
}
