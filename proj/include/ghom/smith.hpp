#pragma once

#include <optional>
#include <vector>

#include "ghom/elim.hpp"
#include "ghom/finab.hpp"
#include "ghom/matrix.hpp"
#include "ghom/ring.hpp"

namespace ghom {

/// U*A*V = D with D diagonal, d_1 | d_2 | ... , d_i >= 0 and U, V unimodular.
/// The inverses ride along because downstream generator computations need
/// changes of basis in both directions.
struct SmithForm {
    DenseMat D, U, V, U_inv, V_inv;
    int rank = 0;

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        int n = std::min(D.rows(), D.cols());
        for (int i = 0; i < n; ++i) d.push_back(D(i, i));
        return d;
    }
    std::vector<Int> nontrivial_factors() const {
        std::vector<Int> f;
        for (const Int& d : diagonal())
            if (d >= 2) f.push_back(d);
        return f;
    }
};

SmithForm smith_normal_form(const DenseMat& A);

/// Rank plus nontrivial invariant factors; sparse-first with a dense fallback
/// below `dense_threshold` columns (the small-case pivoting is cheaper dense).
ZElimResult invariant_factors(const SparseMat& A, int dense_threshold = 2000);

int rank_over(const SparseMat& A, const Ring& ring);

/// Zero test in the coefficient ring (entrywise mod p over F_p).
bool is_zero_over(const SparseMat& A, const Ring& ring);

/// Unique row-style Hermite normal form (positive pivots, entries above a
/// pivot reduced into [0, pivot)). Zero rows are dropped.
DenseMat hermite_rows(DenseMat M);

/// Basis of ker A as matrix columns, canonicalized: over Z the Hermite form of
/// the kernel lattice, over a field the reduced-echelon kernel basis.
DenseMat kernel_basis(const SparseMat& A, const Ring& ring);

/// H = ker d_out / im d_in. Shapes: d_out maps the degree under inspection
/// down, d_in maps into it. Over a field the result carries the dimension as
/// free_rank. Throws CompositionNotZero when d_out ∘ d_in != 0.
FinAbGroup homology_at(const SparseMat& d_in, const SparseMat& d_out, const Ring& ring);

/// Integer solution of A x = b from a precomputed Smith form; nullopt when
/// no integral solution exists.
std::optional<std::vector<Int>> z_solve(const SmithForm& sf, const std::vector<Int>& b);

}  // namespace ghom
