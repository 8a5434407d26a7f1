#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ghom/elim.hpp"
#include "ghom/smith.hpp"
#include "oracles.hpp"

using namespace ghom;

namespace {

SparseMat sparse_of(int rows, int cols, const std::vector<std::vector<int>>& entries) {
    SparseMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (entries[i][j] != 0) m.add(i, j, entries[i][j]);
    m.compact();
    return m;
}

DenseMat dense_of(const std::vector<std::vector<int>>& entries) {
    DenseMat m(int(entries.size()), entries.empty() ? 0 : int(entries[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = entries[i][j];
    return m;
}

void check_smith_contract(const DenseMat& a) {
    SmithForm sf = smith_normal_form(a);
    CHECK(sf.U * a * sf.V == sf.D);
    CHECK(sf.U * sf.U_inv == DenseMat::identity(a.rows()));
    CHECK(sf.V * sf.V_inv == DenseMat::identity(a.cols()));
    // diagonal, non-negative, divisibility chain
    for (int i = 0; i < sf.D.rows(); ++i)
        for (int j = 0; j < sf.D.cols(); ++j)
            if (i != j) CHECK(sf.D(i, j) == 0);
    auto diag = sf.diagonal();
    for (size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i + 1] != 0 && diag[i] != 0)
            CHECK(diag[i + 1] % diag[i] == 0);
        if (diag[i] == 0 && i + 1 < diag.size()) CHECK(diag[i + 1] == 0);
    }
    // unimodular transforms: all invariant factors 1
    auto ru = sparse_z_elim(SparseMat::from_dense(sf.U));
    CHECK(ru.rank == a.rows());
    CHECK(ru.nontrivial_factors.empty());
    auto rv = sparse_z_elim(SparseMat::from_dense(sf.V));
    CHECK(rv.rank == a.cols());
    CHECK(rv.nontrivial_factors.empty());
}

}  // namespace

TEST_CASE("smith normal form on the pinned examples") {
    SUBCASE("identity") {
        SmithForm sf = smith_normal_form(DenseMat::identity(3));
        CHECK(sf.D == DenseMat::identity(3));
        CHECK(sf.rank == 3);
    }
    SUBCASE("hand-reduced 2x2") {
        // row/column reduction by hand gives diag(2, 4)
        DenseMat a = dense_of({{2, 4}, {6, 8}});
        SmithForm sf = smith_normal_form(a);
        CHECK(sf.D(0, 0) == 2);
        CHECK(sf.D(1, 1) == 4);
        check_smith_contract(a);
    }
    SUBCASE("zero matrix") {
        SmithForm sf = smith_normal_form(DenseMat(2, 3));
        CHECK(sf.rank == 0);
        CHECK(sf.D.is_zero());
    }
}

TEST_CASE("smith contract on random matrices") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> dim(1, 7), val(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        DenseMat a(dim(rng), dim(rng));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a(i, j) = val(rng);
        check_smith_contract(a);
        // sparse invariant factors agree with the dense Smith route
        SmithForm sf = smith_normal_form(a);
        ZElimResult r = sparse_z_elim(SparseMat::from_dense(a));
        CHECK(r.rank == sf.rank);
        CHECK(r.nontrivial_factors == sf.nontrivial_factors());
    }
}

TEST_CASE("sparse eliminator handles non-unit leftovers") {
    // diagonal of primes forces the Euclid/dense-core path
    DenseMat a(3, 3);
    a(0, 0) = 6;
    a(1, 1) = 10;
    a(2, 2) = 15;
    ZElimResult r = sparse_z_elim(SparseMat::from_dense(a));
    CHECK(r.rank == 3);
    // diag(6,10,15) has invariant factors 1, 30, 30
    REQUIRE(r.nontrivial_factors.size() == 2);
    CHECK(r.nontrivial_factors[0] == 30);
    CHECK(r.nontrivial_factors[1] == 30);
}

TEST_CASE("homology_at matches the forced examples") {
    SUBCASE("multiplication by 2 into nothing") {
        SparseMat d_in(1, 1);
        d_in.add(0, 0, 2);
        d_in.compact();
        SparseMat d_out(0, 1);
        CHECK(homology_at(d_in, d_out, Ring::integers()) == FinAbGroup::cyclic(2));
    }
    SUBCASE("both zero maps on Z^3") {
        SparseMat d_in(3, 0), d_out(0, 3);
        CHECK(homology_at(d_in, d_out, Ring::integers()) == FinAbGroup::free_of_rank(3));
    }
    SUBCASE("composition check fires") {
        SparseMat d_in(2, 1);
        d_in.add(0, 0, 1);
        d_in.compact();
        SparseMat d_out(1, 2);
        d_out.add(0, 0, 1);
        d_out.compact();
        CHECK_THROWS_AS(homology_at(d_in, d_out, Ring::integers()), Error);
    }
    SUBCASE("shape check fires") {
        SparseMat d_in(3, 1), d_out(1, 2);
        CHECK_THROWS_AS(homology_at(d_in, d_out, Ring::integers()), Error);
    }
    SUBCASE("field dimensions") {
        SparseMat d_in(2, 1);
        d_in.add(0, 0, 2);  // zero mod 2
        d_in.compact();
        SparseMat d_out(0, 2);
        CHECK(homology_at(d_in, d_out, Ring::mod(2)).free_rank == 2);
        CHECK(homology_at(d_in, d_out, Ring::rationals()).free_rank == 1);
    }
}

TEST_CASE("kernel bases") {
    SUBCASE("identity has no kernel") {
        CHECK(kernel_basis(SparseMat::from_dense(DenseMat::identity(3)), Ring::integers()).cols() ==
              0);
    }
    SUBCASE("[[1,1]] over Q spans (1,-1)") {
        DenseMat k = kernel_basis(sparse_of(1, 2, {{1, 1}}), Ring::rationals());
        REQUIRE(k.cols() == 1);
        CHECK(k(0, 0) == 1);
        CHECK(k(1, 0) == -1);
    }
    SUBCASE("[[2,4]] over Z: lattice basis (2,-1)") {
        DenseMat k = kernel_basis(sparse_of(1, 2, {{2, 4}}), Ring::integers());
        REQUIRE(k.cols() == 1);
        CHECK(k(0, 0) == 2);
        CHECK(k(1, 0) == -1);
    }
    SUBCASE("membership: integer kernel vectors are lattice combinations") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> val(-4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            DenseMat a(2, 4);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 4; ++j) a(i, j) = val(rng);
            SparseMat as = SparseMat::from_dense(a);
            DenseMat k = kernel_basis(as, Ring::integers());
            // A·K = 0 and columns independent
            for (int j = 0; j < k.cols(); ++j) {
                std::vector<Int> col(4);
                for (int i = 0; i < 4; ++i) col[i] = k(i, j);
                for (const Int& x : as.apply(col)) CHECK(x == 0);
            }
            CHECK(sparse_z_elim(SparseMat::from_dense(k)).rank == k.cols());
            // random integer kernel vectors must solve through K
            SmithForm kf = smith_normal_form(k);
            for (int t = 0; t < 5; ++t) {
                // produce a kernel vector via the engine-independent route:
                // scan random small vectors for A·v = 0
                std::vector<Int> v(4);
                for (auto& x : v) x = val(rng);
                bool in_kernel = true;
                for (const Int& x : as.apply(v)) in_kernel = in_kernel && x == 0;
                if (!in_kernel) continue;
                auto sol = z_solve(kf, v);
                CHECK(sol.has_value());
            }
        }
    }
}

TEST_CASE("tor and ext on canonical forms") {
    CHECK(tor_pair(FinAbGroup::free_of_rank(2), FinAbGroup::cyclic(12)).is_trivial());
    // gcd rules, verified against the counting oracle
    for (int a : {2, 3, 4, 6})
        for (int b : {2, 3, 4, 5, 6}) {
            FinAbGroup t = tor_pair(FinAbGroup::cyclic(a), FinAbGroup::cyclic(b));
            CHECK(t.torsion_order() == oracles::tor_order_bruteforce(a, b));
        }
    CHECK(tor_pair(FinAbGroup::cyclic(4), FinAbGroup::cyclic(6)) == FinAbGroup::cyclic(2));
    CHECK(tor_pair(direct_sum(FinAbGroup::cyclic(2), FinAbGroup::free_of_rank(1)),
                   FinAbGroup::cyclic(2)) == FinAbGroup::cyclic(2));
    CHECK(ext_pair(FinAbGroup::free_of_rank(1), FinAbGroup::cyclic(5)).is_trivial());
    CHECK(ext_pair(FinAbGroup::cyclic(2), FinAbGroup::free_of_rank(1)) == FinAbGroup::cyclic(2));
    CHECK(ext_pair(FinAbGroup::cyclic(6), FinAbGroup::cyclic(4)) == FinAbGroup::cyclic(2));
}

TEST_CASE("canonical invariant factors") {
    auto chain = canonical_invariant_factors({Int(4), Int(6)});
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == 2);
    CHECK(chain[1] == 12);
    CHECK(canonical_invariant_factors({Int(1), Int(1)}).empty());
    auto single = canonical_invariant_factors({Int(2), Int(3)});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 6);
}

TEST_CASE("fp rank agrees with integer rank reduced") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        DenseMat a(5, 6);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 6; ++j) a(i, j) = val(rng);
        SparseMat s = SparseMat::from_dense(a);
        // over F_p: rank from dense elimination equals the sparse path
        for (int64_t p : {2, 3, 5}) {
            CHECK(fp_rank(FpMat::from_sparse(s, p)) == sparse_fp_rank(s, p));
        }
    }
}

TEST_CASE("hermite canonicalization is idempotent") {
    DenseMat m = dense_of({{2, 4, 6}, {1, 3, 5}});
    DenseMat h = hermite_rows(m);
    CHECK(hermite_rows(h) == h);
}
