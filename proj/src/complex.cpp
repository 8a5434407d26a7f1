#include "ghom/complex.hpp"

#include "ghom/errors.hpp"
#include "ghom/kernels.hpp"
#include "ghom/smith.hpp"

namespace ghom {

void ChainComplex::validate() const {
    const int n = top_degree();
    require(int(d.size()) == n + 1 || (n == 0 && d.size() <= 1), Errc::ShapeMismatch,
            "one boundary slot per positive degree");
    for (int k = 1; k <= n; ++k) {
        require(d[k].rows() == ranks[k - 1] && d[k].cols() == ranks[k], Errc::ShapeMismatch,
                "boundary shape at degree " + std::to_string(k));
    }
    for (int k = 2; k <= n; ++k)
        require(is_zero_over(d[k - 1].multiply(d[k]), ring), Errc::CompositionNotZero,
                "d∘d != 0 at degree " + std::to_string(k));
    if (!augmentation.empty())
        require(int(augmentation.size()) == ranks[0], Errc::ShapeMismatch, "augmentation shape");
}

FinAbGroup ChainComplex::homology(int k) const {
    require(0 <= k && k <= top_degree(), Errc::BadInput, "degree out of range");
    return homology_at(boundary(k + 1), boundary(k), ring);
}

std::vector<FinAbGroup> ChainComplex::homology_all() const {
    const int n = top_degree();
    // one elimination per boundary matrix, shared between adjacent degrees
    std::vector<ZElimResult> elim(n + 2);
    kern::parallel_for(n, [&](int i) {
        int k = i + 1;
        if (ring.kind == RingKind::Z) {
            elim[k] = invariant_factors(d[k]);
        } else {
            elim[k].rank = rank_over(d[k], ring);
        }
    });
    std::vector<FinAbGroup> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        int rout = k >= 1 ? elim[k].rank : 0;
        int rin = k + 1 <= n ? elim[k + 1].rank : 0;
        int free = ranks[k] - rout - rin;
        require(free >= 0, Errc::BadInput, "negative rank in homology");
        out[k] = ring.kind == RingKind::Z
                     ? FinAbGroup(free, k + 1 <= n ? elim[k + 1].nontrivial_factors
                                                   : std::vector<Int>{})
                     : FinAbGroup(free, {});
    }
    return out;
}

void CochainComplex::validate() const {
    const int n = top_degree();
    require(int(delta.size()) == std::max(0, n), Errc::ShapeMismatch, "coboundary count");
    for (int k = 0; k < n; ++k)
        require(delta[k].rows() == ranks[k + 1] && delta[k].cols() == ranks[k],
                Errc::ShapeMismatch, "coboundary shape at degree " + std::to_string(k));
    for (int k = 0; k + 1 < n; ++k)
        require(is_zero_over(delta[k + 1].multiply(delta[k]), ring), Errc::CompositionNotZero,
                "delta∘delta != 0 at degree " + std::to_string(k));
}

FinAbGroup CochainComplex::cohomology(int k) const {
    require(0 <= k && k <= top_degree(), Errc::BadInput, "degree out of range");
    SparseMat din = k >= 1 ? coboundary(k - 1) : SparseMat(rank(0), 0);
    return homology_at(din, coboundary(k), ring);
}

std::vector<FinAbGroup> CochainComplex::cohomology_all() const {
    std::vector<FinAbGroup> out;
    for (int k = 0; k <= top_degree(); ++k) out.push_back(cohomology(k));
    return out;
}

}  // namespace ghom
