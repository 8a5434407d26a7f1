#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ghom/group.hpp"
#include "ghom/homology.hpp"
#include "ghom/kernels.hpp"

using namespace ghom;

TEST_CASE("orbit labels: parallel equals serial") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 5000 + int(rng() % 3000);
        // random permutations as generators
        std::vector<std::vector<int>> gens(3, std::vector<int>(n));
        for (auto& g : gens) {
            std::iota(g.begin(), g.end(), 0);
            std::shuffle(g.begin(), g.end(), rng);
        }
        auto serial = kern::orbit_labels_serial(n, gens);
        kern::set_parallel(true);
        auto parallel = kern::orbit_labels(n, gens);
        CHECK(serial == parallel);
        // labels are orbit minima
        for (int i = 0; i < n; ++i) CHECK(serial[i] <= i);
    }
}

TEST_CASE("fp elimination: parallel equals serial") {
    std::mt19937 rng(777);
    FpMat a(300, 420, 3);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a(i, j) = rng() % 3;
    FpMat b = a;
    kern::set_parallel(false);
    int ra = fp_rank(a);
    kern::set_parallel(true);
    int rb = fp_rank(b);
    CHECK(ra == rb);
}

TEST_CASE("homology results do not depend on the parallel switch") {
    GroupPtr g = cyclic_group(6);
    GModule m = trivial_module(g, Ring::integers());
    kern::set_parallel(false);
    clear_homology_cache();
    auto serial = group_homology(g, m, 3).groups;
    kern::set_parallel(true);
    clear_homology_cache();
    auto parallel = group_homology(g, m, 3).groups;
    CHECK(serial == parallel);
}

TEST_CASE("homology cache tolerates concurrent identical requests") {
    clear_homology_cache();
    GroupPtr g = cyclic_group(4);
    GModule m = trivial_module(g, Ring::integers());
    std::vector<std::vector<FinAbGroup>> results(8);
    kern::set_parallel(true);
    kern::parallel_for(8, [&](int i) { results[i] = group_homology(g, m, 3).groups; });
    for (int i = 1; i < 8; ++i) CHECK(results[i] == results[0]);
}

TEST_CASE("tuple action scans agree with the direct construction") {
    LinearGroup gl = general_linear_group(2, 3);
    GroupAction base = nonzero_vector_action(gl);
    kern::set_parallel(true);
    GroupAction par = tuple_action(base, 1, 1 << 22);
    kern::set_parallel(false);
    GroupAction ser = tuple_action(base, 1, 1 << 22);
    kern::set_parallel(true);
    CHECK(par.perm == ser.perm);
}
