#pragma once

#include <cstdint>
#include <vector>

#include "ghom/complex.hpp"
#include "ghom/gmodule.hpp"
#include "ghom/group.hpp"
#include "ghom/simplicial.hpp"

namespace ghom {

/// Matrix over the group ring, stored per column as (row, group element,
/// integer coefficient) terms.
struct GMatEntry {
    int row;
    int g;
    Int coeff;
};

struct GMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<GMatEntry>> col;

    GMat() = default;
    GMat(int r, int c) : rows(r), cols(c), col(c) {}
};

/// The standard resolution of the trivial module, kept in its free G-basis:
/// degree k is free on the k-tuples over G (the simplices with identity
/// first entry), so the G-rank is |G|^k. Differentials are ZG-matrices.
struct FreeResolution {
    GroupPtr group;
    int top_degree = 0;
    std::vector<int64_t> granks;  // |G|^k
    std::vector<GMat> d;          // d[k]: degree k -> k-1

    std::vector<int> tuple_of(int64_t index, int degree) const;
    int64_t index_of(const std::vector<int>& tuple) const;
};

FreeResolution bar_resolution(const GroupPtr& g, int top_degree, int64_t cap);

/// ZG-matrix composition is zero (d∘d = 0 already over the group ring).
bool gmat_compose_is_zero(const FiniteGroup& g, const GMat& a, const GMat& b);

/// The underlying integral complex C(G) of the resolution (basis G^{k+1}),
/// for validation at small orders.
EquivariantComplex resolution_z_complex(const FreeResolution& f, int64_t cap);

/// F_k ⊗_G M: rank |G|^k · rank(M); the right-module convention folds the
/// inverse action into every group-ring coefficient.
ChainComplex apply_coefficients(const FreeResolution& f, const GModule& m);

/// Hom_G(F_k, M) with coboundary (δφ)(b) = φ(d b).
CochainComplex apply_hom(const FreeResolution& f, const GModule& m);

}  // namespace ghom
