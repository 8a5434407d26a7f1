#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ghom/complex.hpp"
#include "ghom/group.hpp"

namespace ghom {

/// A chain over a simplicial degree: tuple index -> coefficient.
using Chain = std::map<int64_t, Int>;

/// Chain complex whose degree-p basis is X^{p+1} with the diagonal G-action,
/// carried as one permutation action per degree. The integral complex, its
/// labels and the augmentation ride in `cx`.
struct EquivariantComplex {
    GroupPtr group;
    GroupAction base;                  // G acting on X
    ChainComplex cx;                   // over Z
    std::vector<GroupAction> degree_action;  // diagonal action on tuples, per degree

    int top_degree() const { return cx.top_degree(); }
    int point_count() const { return base.set_size; }

    /// Digits of a tuple index (first coordinate most significant).
    std::vector<int> tuple_of(int64_t index, int degree) const;
    int64_t index_of(const std::vector<int>& tuple) const;
};

/// C(X): degree p free on (p+1)-tuples, alternating face differential,
/// all-ones augmentation.
EquivariantComplex ordered_simplicial(const GroupAction& base, int top_degree, int64_t cap);

/// x♯(-): prepend x to every simplex of a degree-k chain.
Chain join_point(const EquivariantComplex& c, int x, const Chain& chain, int degree);

/// d applied to a degree-k chain.
Chain boundary_chain(const EquivariantComplex& c, const Chain& chain, int degree);

/// Exact contracting-homotopy identity d(x♯c) = c - x♯(dc) on every basis
/// simplex of degrees 1..max_degree, plus the degree-0 variant
/// d(x♯(y)) = (y) - (x). Returns the number of simplices checked.
int64_t verify_join_homotopy(const EquivariantComplex& c, int x, int max_degree);

/// d∘d = 0, equivariance of every differential, ε∘d_1 = 0 and (optionally)
/// acyclicity of degrees 1..top-1 via the homotopy.
void validate_equivariant(const EquivariantComplex& c, bool check_acyclic);

/// Equivariance check d_k ∘ g = g ∘ d_k for all g (exhaustive).
void verify_equivariance(const EquivariantComplex& c);

}  // namespace ghom
