#pragma once

#include <string>
#include <vector>

#include "ghom/finab.hpp"
#include "ghom/group.hpp"
#include "ghom/matrix.hpp"
#include "ghom/ring.hpp"

namespace ghom {

/// Free module over Z, F_p or Q with an invertible action matrix per group
/// element. Every coefficient object in the engine is one of these.
struct GModule {
    GroupPtr group;
    Ring ring;
    int rank = 0;
    std::vector<DenseMat> action;  // indexed by group element
    std::string name;

    const DenseMat& act(int g) const { return action[g]; }
    const DenseMat& act_of_inverse(int g) const { return action[group->inv(g)]; }
};

/// Invertibility of every action matrix plus the homomorphism law
/// (exhaustive for |G| <= 24, sampled above).
void validate_module(const GModule& m);

GModule trivial_module(const GroupPtr& g, const Ring& ring, int rank = 1);

/// rank = set size, action matrices are the permutation matrices.
GModule permutation_module(const GroupAction& a, const Ring& ring);

/// ZG ⊗_H M for H ≤ G: rank [G:H]·rank(M); coset blocks permuted by G with
/// H-action twists on block returns. The trivial coset is represented by 1_G.
struct InducedData {
    GModule module;
    std::vector<int> coset_of;  // ambient element -> coset index
    std::vector<int> reps;      // coset index -> ambient representative
};
InducedData induced_module_data(const GroupPtr& g, const Subgroup& h, const GModule& m);
GModule induced_module(const GroupPtr& g, const Subgroup& h, const GModule& m);

/// Pullback along a verified homomorphism src -> m.group.
GModule restrict_module(const GroupPtr& src, const std::vector<int>& hom, const GModule& m);

/// Restriction to a subgroup (special case of restrict_module).
GModule restrict_to_subgroup(const Subgroup& h, const GModule& m);

GModule direct_sum_module(const GModule& a, const GModule& b);

/// M_G = M / <gm - m>: cokernel of the stacked action differences. Field
/// result carries the dimension as free_rank.
FinAbGroup coinvariants(const GModule& m);

/// Basis and projection data for the coinvariant space over a field; used
/// where M_H itself must act as a coefficient module.
struct FieldCoinvariants {
    FpMat complement;  // rank × dim, columns are representatives of a basis of M_H
    FpMat proj;        // dim × rank, M_H-coordinates of each basis vector of M
};
FieldCoinvariants field_coinvariants(const GModule& m,
                                     const std::vector<int>& subgroup_elems);

}  // namespace ghom
