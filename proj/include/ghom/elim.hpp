#pragma once

#include <cstdint>
#include <vector>

#include "ghom/matrix.hpp"
#include "ghom/ring.hpp"

namespace ghom {

struct ZElimResult {
    int rank = 0;
    std::vector<Int> nontrivial_factors;  // ascending divisibility chain, entries >= 2
};

/// Rank and invariant factors of an integer matrix without transform
/// tracking. Unit pivots are consumed sparsely; whatever survives is finished
/// either densely or by Euclid-style pivot chasing, so no size cliff.
ZElimResult sparse_z_elim(SparseMat A);

/// Rank of A over F_p by sparse elimination.
int sparse_fp_rank(const SparseMat& A, int64_t p);

/// Rank over Q (equals rank over Z).
inline int sparse_q_rank(SparseMat A) { return sparse_z_elim(std::move(A)).rank; }

}  // namespace ghom
