#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ghom/complex.hpp"
#include "ghom/fpmat.hpp"
#include "ghom/gmodule.hpp"
#include "ghom/group.hpp"
#include "ghom/resolution.hpp"
#include "ghom/smith.hpp"

namespace ghom {

inline constexpr int64_t kDefaultCap = 2'000'000;

struct HomologyResult {
    GroupPtr group;
    Ring ring;
    std::string coeff_name;
    int max_degree = 0;
    bool cohomology = false;
    std::vector<FinAbGroup> groups;  // per degree 0..max_degree

    std::vector<int> dims() const {
        std::vector<int> d;
        for (auto& g : groups) d.push_back(g.free_rank);
        return d;
    }

    /// Display form of one degree: invariant factors over Z, a dimension
    /// over a field.
    std::string degree_str(int k) const {
        if (ring.kind == RingKind::Z) return groups[k].str();
        if (groups[k].free_rank == 0) return "0";
        return ring.str() + "^" + std::to_string(groups[k].free_rank);
    }
};

/// H_*(G,M) up to max_degree via the standard resolution. Results are cached
/// in-process by content.
HomologyResult group_homology(const GroupPtr& g, const GModule& m, int max_degree,
                              int64_t cap = kDefaultCap);
HomologyResult group_cohomology(const GroupPtr& g, const GModule& m, int max_degree,
                                int64_t cap = kDefaultCap);

/// Homology basis of a pair of field matrices: boundary basis extended to the
/// cycle space, with a fixed coordinate solver.
struct FpHomologyBasis {
    int64_t p = 2;
    int dim = 0;
    FpMat boundaries;
    FpMat reps;  // representative cycles, one column per homology coordinate
    std::shared_ptr<FpSolver> solver;

    std::vector<int64_t> coords(const std::vector<int64_t>& cycle) const;
};
FpHomologyBasis fp_homology_basis(const SparseMat& d_in, const SparseMat& d_out, int64_t p);

/// Integral homology basis with Smith-adapted generators: exposed coordinates
/// carry moduli (0 = free, >=2 = torsion); factor-1 positions are dropped.
struct ZHomologyBasis {
    FinAbGroup group;
    std::vector<Int> moduli;
    DenseMat generators;  // cycle columns, one per exposed coordinate

    DenseMat v_inv;
    std::vector<int> kernel_cols;
    DenseMat u_y;
    std::vector<Int> factors_full;  // per kernel coordinate
    std::vector<int> exposed;       // kernel coordinates kept

    std::vector<Int> coords(const std::vector<Int>& cycle) const;
};
ZHomologyBasis z_homology_basis(const SparseMat& d_in, const SparseMat& d_out);

/// A per-degree matrix between homology presentations. Over Z the coordinate
/// moduli ride along; over F_p every modulus is p.
struct ClassMapDegree {
    Ring ring;
    DenseMat matrix;  // target coords × source coords
    std::vector<Int> src_moduli, tgt_moduli;

    bool is_identity() const;
    bool is_isomorphism() const;
};

struct HomologyClassMap {
    std::vector<ClassMapDegree> degrees;
    std::vector<FinAbGroup> source, target;

    bool all_identity() const {
        for (auto& d : degrees)
            if (!d.is_identity()) return false;
        return true;
    }
    bool all_isomorphism() const;
};

/// Whether matrix ≡ identity / an isomorphism between presented f.g. abelian
/// groups (used directly by the spectral edge checks as well).
bool abelian_map_is_isomorphism(const DenseMat& a, const std::vector<Int>& src_moduli,
                                const std::vector<Int>& tgt_moduli);

/// H_k(H,M) -> H_k(G, ZG⊗_H M) induced by h⊗m -> h⊗(1⊗m); degreewise
/// isomorphism by Shapiro, verified on the computed presentations.
HomologyClassMap shapiro_transport(const GroupPtr& g, const Subgroup& h, const GModule& m,
                                   int max_degree, int64_t cap = kDefaultCap);

/// Diagonal conjugation by g with coefficient twist; induces the identity.
HomologyClassMap conjugation_action_map(const GroupPtr& g, int elt, const GModule& m,
                                        int max_degree, int64_t cap = kDefaultCap);

/// Conjugation maps for every group element at once (bases shared); true when
/// each induced matrix is the identity in every degree.
bool conjugation_identity_for_all(const GroupPtr& g, const GModule& m, int max_degree,
                                  int64_t cap = kDefaultCap);

/// G/H-action on H_q(H,M) for normal H: one matrix per coset, verified
/// well-defined (H acts trivially) and a representation.
struct QuotientActionResult {
    Quotient quotient;
    Ring ring;
    FinAbGroup homology;
    std::vector<Int> moduli;
    std::vector<DenseMat> action;  // per coset index
};
QuotientActionResult quotient_action_on_homology(const GroupPtr& g,
                                                 const std::vector<int>& normal_elems,
                                                 const GModule& m, int q,
                                                 int64_t cap = kDefaultCap);

/// Pontryagin product workspace for an abelian group over F_p: the bar
/// complex, homology bases per degree and the chain-level shuffle product.
class PontryaginAlgebra {
  public:
    PontryaginAlgebra(const GroupPtr& g, const Ring& ring, int max_degree,
                      int64_t cap = kDefaultCap);

    int max_degree() const { return max_degree_; }
    int dim(int degree) const { return basis_[degree].dim; }
    const GroupPtr& group() const { return group_; }

    /// Cycle representative of the i-th basis class in degree `degree`.
    std::vector<int64_t> basis_cycle(int degree, int i) const;
    std::vector<int64_t> unit_class() const { return {1}; }

    /// Coordinates of a cycle's class; throws NotACycle on non-cycles.
    std::vector<int64_t> class_coords(int degree, const std::vector<int64_t>& cycle) const;

    /// Chain-level signed shuffle product of two cycles.
    std::vector<int64_t> product_chain(int p_deg, const std::vector<int64_t>& a, int q_deg,
                                       const std::vector<int64_t>& b) const;

    /// Homology coordinates of the product class.
    std::vector<int64_t> product_coords(int p_deg, const std::vector<int64_t>& a, int q_deg,
                                        const std::vector<int64_t>& b) const;

  private:
    GroupPtr group_;
    Ring ring_;
    int max_degree_;
    FreeResolution res_;
    ChainComplex cx_;
    std::vector<FpHomologyBasis> basis_;
};

struct UctDegreeReport {
    int degree;
    int fp_dim;
    int expected;  // rank + p-torsion of H_q and H_{q-1}
    bool pass;
};
struct UctReport {
    int64_t p;
    std::vector<UctDegreeReport> degrees;
    bool all_pass() const {
        for (auto& d : degrees)
            if (!d.pass) return false;
        return true;
    }
};

/// dim H_q(G,F_p) against rank/torsion bookkeeping of integral homology.
UctReport uct_compare(const GroupPtr& g, int64_t p, int max_degree,
                      int64_t cap = kDefaultCap);

/// Clears the in-process homology cache (tests only).
void clear_homology_cache();

}  // namespace ghom
