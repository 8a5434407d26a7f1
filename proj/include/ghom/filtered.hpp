#pragma once

#include <vector>

#include "ghom/complex.hpp"

namespace ghom {

/// Chain complex with a filtration level per basis vector. The filtration is
/// canonically bounded: levels are >= 0 and at degree n never exceed n, so
/// F^{-1} = 0 and F^n C_n = C_n.
struct FilteredComplex {
    ChainComplex cx;
    std::vector<std::vector<int>> level;  // [degree][basis]

    int top_degree() const { return cx.top_degree(); }

    /// Basis indices of degree n with level <= p (the coordinate subspace F^p C_n).
    std::vector<int> filtered_basis(int n, int p) const {
        std::vector<int> out;
        if (n < 0 || n > top_degree() || p < 0) return out;
        for (int i = 0; i < cx.ranks[n]; ++i)
            if (level[n][i] <= p) out.push_back(i);
        return out;
    }

    void validate() const;  // complex validity, bounds, d non-increasing
};

}  // namespace ghom
