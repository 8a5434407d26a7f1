#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ghom/filtered.hpp"
#include "ghom/fpmat.hpp"
#include "ghom/gmodule.hpp"
#include "ghom/homology.hpp"
#include "ghom/simplicial.hpp"
#include "ghom/tensorcx.hpp"

namespace ghom {

/// Dimension (or Z-entry) table of one page, for reporting and export.
struct SSPage {
    int r = 0;
    std::vector<std::vector<int>> dim;               // [p][q], field pages
    std::vector<std::vector<FinAbGroup>> groups;     // Z pages (r <= 1)
};

/// First-quadrant spectral sequence of a canonically bounded filtered complex
/// over F_p, computed from the Z^r approximation subspaces with the literal
/// page-homology recomputation kept as an audit. Over Z only pages 0 and 1
/// are available (see pages_z).
class SpectralSequence {
  public:
    /// Computes pages 0..max_page. Cells with p+q > audit_degree are treated
    /// as truncation padding: excluded from audits but their differentials
    /// into the valid range still count. audit_degree < 0 means the full
    /// complex is meaningful.
    SpectralSequence(FilteredComplex fc, int max_page, int audit_degree = -1);

    const FilteredComplex& complex() const { return fc_; }
    int top_degree() const { return fc_.top_degree(); }
    int max_page() const { return max_page_; }
    int audit_degree() const { return audit_degree_; }

    /// Index of the first page at which every audited cell is stable.
    int stable_page() const { return std::min(max_page_, audit_degree_ + 2); }
    bool stabilized() const { return max_page_ >= audit_degree_ + 2; }

    int dim(int r, int p, int q) const;
    std::vector<SSPage> pages() const;

    /// d^r leaving (p,q); empty matrix when either endpoint is trivial.
    FpMat differential(int r, int p, int q) const;

    /// dim H_n of the underlying complex for the audited degrees.
    std::vector<int> abutment_dims() const;

    /// Σ_{p+q=n} dim E^stable == dim H_n for every audited n.
    bool convergence_holds() const;

    /// Homology of every audited page-r cell equals the page-(r+1) entry.
    bool page_turnover_holds() const;

    /// d^r ∘ d^r = 0 on every page, as matrices.
    bool differentials_square_to_zero() const;

    /// Edge maps; require stabilization.
    FpMat edge_pi(int q) const;    // E^2_{0,q} ->> E^stable_{0,q}
    FpMat edge_iota(int p) const;  // E^stable_{p,0} -> E^2_{p,0}

  private:
    struct Cell {
        int dim = 0;
        FpMat reps;
        std::shared_ptr<FpSolver> solver;
        FpMat d;  // d^r out of this cell, target coordinates
    };

    FilteredComplex fc_;
    int max_page_ = 0;
    int audit_degree_ = 0;
    int64_t p_ = 2;
    std::vector<FpMat> dmat_;                        // boundary matrices mod p
    std::vector<std::vector<std::vector<Cell>>> cell_;  // [r][p][q]

    FpMat z_space(int fl, int degree, int r) const;  // {x in F^fl C_deg : dx in F^{fl-r}}
    const Cell& at(int r, int p, int q) const;
};

/// Z-coefficient pages r <= 1 (E^0 = associated graded, E^1 its homology).
std::vector<SSPage> pages_z(const FilteredComplex& fc, int up_to_page);

/// Page tables for a field complex (wrapper building a SpectralSequence).
std::vector<SSPage> pages(const FilteredComplex& fc, int up_to_page);

struct TriangleVerdict {
    int q;
    bool isomorphism;
    bool surjective;
};
struct TriangleReport {
    bool hypothesis_met = false;
    int offending_p = -1, offending_q = -1;
    std::vector<TriangleVerdict> verdicts;

    bool all_pass(int n) const {
        if (!hypothesis_met) return false;
        for (auto& v : verdicts) {
            if (v.q < n && !v.isomorphism) return false;
            if (v.q == n && !v.surjective) return false;
        }
        return true;
    }
};

/// Zero lower triangle below total degree n away from the p = 0 column, then
/// rank-verified edge projections.
TriangleReport triangle_check(const SpectralSequence& ss, int n);

/// The two spectral sequences of F ⊗_G C with their filtered carriers.
struct DoubleSS {
    TensorComplex total;
    FilteredComplex by_first;   // 'E: filtered by resolution degree
    FilteredComplex by_second;  // ''E: filtered by coefficient degree
};
DoubleSS double_filtrations(const FreeResolution& f, const EquivariantComplex& c,
                            const Ring& ring, int max_total_degree);

struct AcyclicSSReport {
    std::vector<SSPage> pages;            // ''E pages
    std::vector<int> total_dims;          // dim H_p(G,C)
    std::vector<int> group_dims;          // dim H_p(G)
    std::vector<bool> iso_per_degree;     // ε-induced map is an isomorphism
    bool pass = false;
};

/// For acyclic C the coefficient complex computes plain group homology:
/// H_*(G,C) ≅ H_*(G), exhibited by the augmentation-induced map and audited
/// through the second-filtration pages.
AcyclicSSReport acyclic_coefficient_ss(const GroupPtr& g, const EquivariantComplex& c,
                                       int max_degree, const Ring& ring,
                                       int64_t cap = kDefaultCap);

struct LhsReport {
    Quotient quotient;
    int max_p = 0, max_q = 0;
    std::vector<std::vector<int>> e2;   // [p][q]
    std::vector<int> h_dims;            // dim H_n(G,M) for audited n
    std::vector<int> e2_antidiagonal;   // Σ_{p+q=n} e2
    std::vector<bool> collapse_consistent;  // equality per n
    std::vector<bool> forced_differentials; // strict inequality per n
    std::vector<int> iota_ranks;      // rank of the chain-level edge map per p
    std::vector<int> iota_onto_e2;    // 1 when the edge map fills E2_{p,0}
};

/// E² table H_p(G/H, H_q(H,M)) for normal H with field coefficients, plus the
/// abutment audit and chain-level edge-map data.
LhsReport lhs_e2(const GroupPtr& g, const std::vector<int>& normal_elems, const GModule& m,
                 int max_p, int max_q, int64_t cap = kDefaultCap);

}  // namespace ghom
