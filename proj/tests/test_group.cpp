#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ghom/group.hpp"
#include "oracles.hpp"

using namespace ghom;

TEST_CASE("table validation") {
    SUBCASE("Z/2 by hand") {
        GroupPtr g = group_from_table({{0, 1}, {1, 0}});
        CHECK(g->order == 2);
        CHECK(g->identity == 0);
        CHECK(g->inv(1) == 1);
    }
    SUBCASE("duplicate row entry") {
        CHECK_THROWS_WITH_AS(group_from_table({{0, 0}, {1, 0}}), doctest::Contains("NotLatinSquare"),
                             Error);
    }
    SUBCASE("latin square without identity") {
        // subtraction table mod 3: a quasigroup with no two-sided identity
        CHECK_THROWS_AS(group_from_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), Error);
    }
    SUBCASE("S_3 composes like permutations") {
        GroupPtr g = symmetric_group(3);
        CHECK(g->order == 6);
        CHECK_FALSE(g->is_abelian());
    }
}

TEST_CASE("constructors") {
    CHECK(cyclic_group(6)->order == 6);
    CHECK(dihedral_group(4)->order == 8);
    CHECK(product_group(cyclic_group(2), cyclic_group(4))->order == 8);
    CHECK(symmetric_group(4)->order == 24);
}

TEST_CASE("general linear groups") {
    SUBCASE("GL_1(F_2) is trivial") { CHECK(general_linear_group(1, 2).group->order == 1); }
    SUBCASE("GL_2(F_2) has order 6 and is S_3") {
        LinearGroup gl = general_linear_group(2, 2);
        CHECK(gl.group->order == 6);
        CHECK(oracles::groups_isomorphic(*gl.group, *symmetric_group(3)));
    }
    SUBCASE("GL_3(F_2) has order 168") {
        CHECK(general_linear_group(3, 2).group->order == 168);
    }
    SUBCASE("cap enforcement") {
        CHECK_THROWS_AS(general_linear_group(2, 5), Error);  // order 480 > 200
    }
}

TEST_CASE("abelianization") {
    CHECK(abelianization(*cyclic_group(6)) == FinAbGroup::cyclic(6));
    CHECK(abelianization(*symmetric_group(3)) == FinAbGroup::cyclic(2));
    CHECK(abelianization(*general_linear_group(3, 2).group).is_trivial());
    CHECK(abelianization(*dihedral_group(4)) ==
          FinAbGroup(0, {Int(2), Int(2)}));
    // |ab| divides |G|
    for (auto g : {symmetric_group(4), dihedral_group(3)}) {
        FinAbGroup ab = abelianization(*g);
        CHECK(Int(g->order) % ab.torsion_order() == 0);
    }
}

TEST_CASE("coset actions") {
    GroupPtr s3 = symmetric_group(3);
    std::vector<int> a3;
    for (int x = 0; x < 6; ++x)
        if (s3->element_order(x) != 2) a3.push_back(x);
    SUBCASE("index-2 subgroup gives two cosets") {
        GroupAction act = coset_action(s3, a3);
        CHECK(act.set_size == 2);
        validate_action(act);
        // transitivity and stabilizer of the trivial coset
        CHECK(oracles::orbit_count_bfs(act) == 1);
        std::vector<int> stab = stabilizer(act, 0);
        CHECK(stab == a3);
    }
    SUBCASE("whole group gives one point") {
        std::vector<int> all(6);
        std::iota(all.begin(), all.end(), 0);
        CHECK(coset_action(s3, all).set_size == 1);
    }
    SUBCASE("trivial subgroup gives the regular action") {
        GroupAction act = coset_action(s3, {s3->identity});
        CHECK(act.set_size == 6);
        validate_action(act);
    }
    SUBCASE("non-subgroup rejected") {
        CHECK_THROWS_AS(coset_action(s3, {1, 2}), Error);
    }
}

TEST_CASE("orbit decomposition") {
    LinearGroup gl = general_linear_group(2, 2);
    GroupAction base = nonzero_vector_action(gl);
    SUBCASE("transitive on nonzero vectors") {
        Orbits o = orbit_decompose(tuple_action(base, 0, 1 << 20));
        CHECK(o.reps.size() == 1);
    }
    SUBCASE("pairs fall into diagonal and off-diagonal orbits") {
        GroupAction pairs = tuple_action(base, 1, 1 << 20);
        Orbits o = orbit_decompose(pairs);
        CHECK(int(o.reps.size()) == oracles::orbit_count_bfs(pairs));
        CHECK(o.reps.size() == 2);
        // sizes partition the tuple space and divide |G|... sizes divide the
        // group order times nothing: each orbit size divides |G|
        int total = 0;
        for (int s : o.sizes) {
            total += s;
            CHECK(gl.group->order % s == 0);
        }
        CHECK(total == pairs.set_size);
        // representatives are least in their orbit
        for (size_t i = 0; i < o.reps.size(); ++i)
            for (int x = 0; x < pairs.set_size; ++x)
                if (o.orbit_of[x] == int(i)) CHECK(o.reps[i] <= x);
    }
    SUBCASE("trivial group: one orbit per point") {
        GroupAction t = trivial_action(cyclic_group(1), 3);
        CHECK(orbit_decompose(t).reps.size() == 3);
    }
    SUBCASE("tuple cap") {
        CHECK_THROWS_AS(tuple_action(base, 10, 100), Error);
    }
}

TEST_CASE("quotients and subgroups") {
    GroupPtr z4 = cyclic_group(4);
    Quotient q = quotient_group(z4, {0, 2});
    CHECK(q.group->order == 2);
    CHECK(q.reps[q.project[0]] == 0);
    GroupPtr s3 = symmetric_group(3);
    std::vector<int> a3;
    for (int x = 0; x < 6; ++x)
        if (s3->element_order(x) != 2) a3.push_back(x);
    CHECK(is_normal(*s3, a3));
    Subgroup sub = subgroup_group(s3, a3);
    CHECK(sub.group->order == 3);
    CHECK(oracles::groups_isomorphic(*sub.group, *cyclic_group(3)));
    // a transposition generates a non-normal subgroup
    int transposition = -1;
    for (int x = 0; x < 6; ++x)
        if (s3->element_order(x) == 2) transposition = x;
    CHECK_FALSE(is_normal(*s3, {s3->identity, transposition}));
    CHECK_THROWS_AS(quotient_group(s3, {s3->identity, transposition}), Error);
}

TEST_CASE("mapping witness") {
    SUBCASE("swap in F_2^2") {
        VectorSpaceOverFq space{2, 2};
        FpMat sigma = gl_mapping_witness({{1, 0}}, {{0, 1}}, space);
        CHECK(sigma(0, 0) == 0);
        CHECK(sigma(0, 1) == 1);
        CHECK(sigma(1, 0) == 1);
        CHECK(sigma(1, 1) == 0);
    }
    SUBCASE("equal tuples give the identity") {
        VectorSpaceOverFq space{3, 2};
        FpMat sigma = gl_mapping_witness({{1, 2}}, {{1, 2}}, space);
        CHECK(sigma.is_identity());
    }
    SUBCASE("basis extension case in F_3^3") {
        VectorSpaceOverFq space{3, 3};
        std::vector<int64_t> v = {1, 0, 0}, w = {1, 1, 0};
        FpMat sigma = gl_mapping_witness({v}, {w}, space);
        CHECK(sigma.apply(v) == w);
        CHECK(fp_rank(sigma) == 3);
        // fixes a complement of span(v)+span(w) = span(e1,e2): e3 does fine
        std::vector<int64_t> e3 = {0, 0, 1};
        CHECK(sigma.apply(e3) == e3);
    }
    SUBCASE("errors") {
        VectorSpaceOverFq space{2, 2};
        CHECK_THROWS_AS(gl_mapping_witness({{1, 0}, {1, 0}}, {{0, 1}, {1, 0}}, space), Error);
        CHECK_THROWS_AS(gl_mapping_witness({{1, 0}}, {{0, 1}, {1, 0}}, space), Error);
    }
    SUBCASE("random pairs of independent tuples over F_3") {
        VectorSpaceOverFq space{3, 3};
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> val(0, 2);
        int done = 0;
        while (done < 25) {
            std::vector<std::vector<int64_t>> v(2, std::vector<int64_t>(3));
            std::vector<std::vector<int64_t>> w(2, std::vector<int64_t>(3));
            for (auto& t : v)
                for (auto& x : t) x = val(rng);
            for (auto& t : w)
                for (auto& x : t) x = val(rng);
            try {
                FpMat sigma = gl_mapping_witness(v, w, space);
                for (int i = 0; i < 2; ++i) {
                    auto img = sigma.apply(v[i]);
                    for (int j = 0; j < 3; ++j) CHECK(img[j] == mod_reduce(w[i][j], 3));
                }
                CHECK(fp_rank(sigma) == 3);
                ++done;
            } catch (const Error&) {
                continue;  // dependent draw
            }
        }
    }
}
