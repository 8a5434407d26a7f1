#include "ghom/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ghom::kern {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel.store(on); }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load();
#else
    return false;
#endif
}

int thread_count() {
#ifdef _OPENMP
    return parallel_enabled() ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

void fp_eliminate_below_serial(FpMat& m, int pivot_row, int pivot_col) {
    const int64_t p = m.p();
    const int cols = m.cols();
    for (int i = pivot_row + 1; i < m.rows(); ++i) {
        int64_t f = m(i, pivot_col);
        if (f == 0) continue;
        for (int j = pivot_col; j < cols; ++j)
            m(i, j) = mod_reduce(m(i, j) - f * m(pivot_row, j), p);
    }
}

void fp_eliminate_below(FpMat& m, int pivot_row, int pivot_col) {
    const int rows = m.rows(), cols = m.cols();
    if (!parallel_enabled() || size_t(rows - pivot_row) * size_t(cols - pivot_col) < 1u << 16) {
        fp_eliminate_below_serial(m, pivot_row, pivot_col);
        return;
    }
#ifdef _OPENMP
    const int64_t p = m.p();
#pragma omp parallel for schedule(static)
    for (int i = pivot_row + 1; i < rows; ++i) {
        int64_t f = m(i, pivot_col);
        if (f == 0) continue;
        for (int j = pivot_col; j < cols; ++j)
            m(i, j) = mod_reduce(m(i, j) - f * m(pivot_row, j), p);
    }
#else
    fp_eliminate_below_serial(m, pivot_row, pivot_col);
#endif
}

std::vector<int> orbit_labels_serial(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> label(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                int y = g[x];
                if (label[y] < 0) {
                    label[y] = s;
                    stack.push_back(y);
                }
            }
        }
    }
    return label;
}

std::vector<int> orbit_labels(int n, const std::vector<std::vector<int>>& gens) {
    if (!parallel_enabled() || n < 4096) return orbit_labels_serial(n, gens);
#ifdef _OPENMP
    // min-label fixpoint: relax along generator edges, then pointer-jump.
    // The fixpoint is the orbit-wise minimum whatever the schedule.
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
        for (int i = 0; i < n; ++i) {
            int best = label[i];
            for (const auto& g : gens) {
                best = std::min(best, label[g[i]]);
            }
            if (best < label[i]) {
                label[i] = best;
                changed = true;
            }
        }
#pragma omp parallel for schedule(static) reduction(|| : changed)
        for (int i = 0; i < n; ++i) {
            int l2 = label[label[i]];
            if (l2 < label[i]) {
                label[i] = l2;
                changed = true;
            }
        }
    }
    return label;
#else
    return orbit_labels_serial(n, gens);
#endif
}

void parallel_for(int n, const std::function<void(int)>& f) {
    if (!parallel_enabled() || n < 2) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) f(i);
#else
    for (int i = 0; i < n; ++i) f(i);
#endif
}

}  // namespace ghom::kern
