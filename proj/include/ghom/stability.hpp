#pragma once

#include <string>
#include <vector>

#include "ghom/filtered.hpp"
#include "ghom/group.hpp"
#include "ghom/homology.hpp"
#include "ghom/simplicial.hpp"

namespace ghom {

/// GL_{n+1}(F_q) acting on the nonzero vectors of F_q^{n+1}, with the ordered
/// simplicial complex on that set. Acyclicity is validated through the join
/// homotopy at construction.
struct VectorOrbitComplex {
    LinearGroup gl;
    GroupAction base;  // on the nonzero vectors
    EquivariantComplex complex;
};
VectorOrbitComplex vector_orbit_complex(int n, int64_t q, int max_degree,
                                        int64_t cap = kDefaultCap);

/// Span dimension of a simplex (by tuple index) or of a chain (the maximum
/// over its support).
int simplex_dimension(const VectorOrbitComplex& voc, int degree, int64_t tuple_index);
int chain_dimension(const VectorOrbitComplex& voc, int degree, const Chain& chain);

/// The dimension filtration: a simplex of span dimension s sits at level s-1.
FilteredComplex dimension_filtration(const VectorOrbitComplex& voc);

/// Free abelian groups on the orbit labels with the induced differential
/// d[c] = [dc]; the bottom row of the stability sequence.
struct OrbitRowComplex {
    ChainComplex cx;  // over Z, ranks = orbit counts
    std::vector<std::vector<int64_t>> rep_tuples;  // per degree, tuple index per orbit
    std::vector<std::vector<int>> span_dims;       // per degree, |c| per orbit
    std::vector<Orbits> orbits;                    // per degree
};
OrbitRowComplex orbit_row_complex(const VectorOrbitComplex& voc);

struct RowFiltrationReport {
    int k = 0;
    std::vector<FinAbGroup> homology;        // degrees 0..max_degree
    std::vector<FinAbGroup> oracle;          // coinvariants route
    bool routes_agree = false;
    bool k_acyclic = false;                  // H_0 = Z and H_l = 0 for 1 <= l <= bound
    int acyclicity_bound = 0;                // min(k, degrees actually checkable)
};

/// Homology of the dimension-truncated orbit row complex, cross-checked
/// against coinvariants of the unquotiented filtered complex.
RowFiltrationReport row_filtration_homology(int n, int64_t q, int k, int max_degree,
                                            int64_t cap = kDefaultCap);

struct StabilizerLine {
    int orbit = 0;
    int64_t rep_tuple = 0;
    int span_dim = 0;
    int stabilizer_order = 0;
    std::vector<FinAbGroup> stab_homology;      // H_j(G_c)
    std::vector<FinAbGroup> ambient_homology;   // H_j(G, Z[G/G_c]) via transport
    bool shapiro_agrees = false;
    std::vector<FinAbGroup> smaller_gl;         // H_j(GL_{n+1-|c|}) — informational
    bool smaller_gl_matches = false;            // reported, never asserted
};

struct E1StructureReport {
    int p = 0;
    std::vector<StabilizerLine> lines;
    std::vector<int> direct_sum_dims;   // Σ_c dim H_j(G_c) over the orbits (Z free ranks)
    std::vector<FinAbGroup> e1_column;  // H_j(G, C_p) computed directly
    bool decomposition_agrees = false;
};

/// Per-orbit stabilizer homology against H_*(G, C_p), Shapiro half asserted;
/// the comparison with the smaller general linear group is reported only.
E1StructureReport e1_structure_check(int n, int64_t q, int p_deg, int max_q,
                                     int64_t cap = kDefaultCap);

/// Minimal Σ n_j over nonzero solutions of Σ n_j p^j ≡ 0 mod p^m - 1 with
/// 0 <= n_j < p·m, by exhaustive search.
int64_t min_weight_modular(int64_t p, int m);

struct BottomRowZeroReport {
    int pair_orbits = 0;
    bool d1_zero = true;
    bool witnesses_found = true;  // σ with σv = w for every orbit pair
};

/// d¹ out of the pair column hits the point column by [w] - [v]; a mapping
/// witness equates the two labels, so the map is zero.
BottomRowZeroReport bottom_row_d1_zero(int n, int64_t q, int64_t cap = kDefaultCap);

struct BoundaryIdentityReport {
    bool checked = false;
    bool last_two_cancel = false;  // [A] = [B]
    bool equals_class = false;     // ∂[(v0+v1, v0, v1)] = [c]
};

/// ∂[(v0+v1, v0, v1)] = [c] - [A] + [B] with [A] = [B] on an independent pair.
BoundaryIdentityReport boundary_identity_check(int n, int64_t q, int64_t cap = kDefaultCap);

}  // namespace ghom
