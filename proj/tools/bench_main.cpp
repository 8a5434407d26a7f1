// Serial-vs-parallel comparison for the data-parallel kernels: orbit scans,
// mod-p elimination and the per-degree homology batch.

#include <chrono>
#include <cstdio>
#include <random>

#include "ghom/group.hpp"
#include "ghom/homology.hpp"
#include "ghom/kernels.hpp"
#include "ghom/resolution.hpp"

using namespace ghom;
namespace chrono = std::chrono;

namespace {

double seconds_of(const std::function<void()>& f) {
    auto t0 = chrono::steady_clock::now();
    f();
    return chrono::duration<double>(chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", kern::thread_count());

    {
        // orbit scan: GL_2(F_3) on triples of nonzero vectors (26^3 points)
        LinearGroup gl = general_linear_group(2, 3);
        GroupAction base = nonzero_vector_action(gl);
        GroupAction tuples = tuple_action(base, 2, 1 << 24);
        std::vector<int> gen_idx = generating_set(*gl.group);
        std::vector<std::vector<int>> gens;
        for (int g : gen_idx) gens.push_back(tuples.perm[g]);
        std::vector<int> a, b;
        double ts = seconds_of([&] { a = kern::orbit_labels_serial(tuples.set_size, gens); });
        kern::set_parallel(true);
        double tp = seconds_of([&] { b = kern::orbit_labels(tuples.set_size, gens); });
        report("orbit scan 26^3", ts, tp, a == b);
    }

    {
        // mod-p elimination on a dense random matrix
        const int n = 900, m = 1400;
        std::mt19937 rng(7);
        FpMat base(n, m, 3);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) base(i, j) = rng() % 3;
        FpMat a = base, b = base;
        kern::set_parallel(false);
        int ra = 0, rb = 0;
        double ts = seconds_of([&] { ra = fp_rank(a); });
        kern::set_parallel(true);
        double tp = seconds_of([&] { rb = fp_rank(b); });
        report("fp elimination 900x1400", ts, tp, ra == rb);
    }

    {
        // homology batch: integral homology of Z/6 through degree 4
        GroupPtr g = cyclic_group(6);
        GModule m = trivial_module(g, Ring::integers());
        std::vector<FinAbGroup> ha, hb;
        kern::set_parallel(false);
        clear_homology_cache();
        double ts = seconds_of([&] { ha = group_homology(g, m, 4).groups; });
        kern::set_parallel(true);
        clear_homology_cache();
        double tp = seconds_of([&] { hb = group_homology(g, m, 4).groups; });
        report("H_*(Z/6) to degree 4", ts, tp, ha == hb);
    }

    kern::set_parallel(true);
    return 0;
}
