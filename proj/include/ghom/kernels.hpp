#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ghom/fpmat.hpp"

namespace ghom::kern {

/// Runtime switch between the OpenMP kernels and the serial reference
/// implementations. Both must produce identical results; the test suite and
/// the bench tool hold them against each other.
void set_parallel(bool on);
bool parallel_enabled();
int thread_count();

/// Clears column `pivot_col` below `pivot_row`, assuming the pivot entry is 1.
void fp_eliminate_below(FpMat& m, int pivot_row, int pivot_col);
void fp_eliminate_below_serial(FpMat& m, int pivot_row, int pivot_col);

/// Orbit labels for points 0..n-1 under the permutations `gens`: every point
/// gets the least index reachable from it. Result is schedule-independent.
std::vector<int> orbit_labels(int n, const std::vector<std::vector<int>>& gens);
std::vector<int> orbit_labels_serial(int n, const std::vector<std::vector<int>>& gens);

/// Applies `f` to 0..n-1, parallel when enabled. `f` must only touch its own
/// slot of any shared output.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace ghom::kern
