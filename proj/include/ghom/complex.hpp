#pragma once

#include <string>
#include <vector>

#include "ghom/finab.hpp"
#include "ghom/matrix.hpp"
#include "ghom/ring.hpp"

namespace ghom {

/// Graded ranks with boundary matrices d_k: degree k -> k-1. Truncation is
/// explicit: nothing past top_degree exists, and homology at the top degree
/// therefore sees no incoming boundaries.
struct ChainComplex {
    Ring ring;
    std::vector<int> ranks;                         // degrees 0..N
    std::vector<SparseMat> d;                       // d[k] for 1..N; d[0] is a placeholder
    std::vector<std::vector<std::string>> labels;   // optional, per degree
    std::vector<Int> augmentation;                  // optional row vector on degree 0

    int top_degree() const { return int(ranks.size()) - 1; }
    int rank(int k) const { return (k >= 0 && k <= top_degree()) ? ranks[k] : 0; }

    /// d_k with boundary degrees padded by zero maps.
    SparseMat boundary(int k) const {
        if (k >= 1 && k <= top_degree()) return d[k];
        if (k == 0) return SparseMat(0, rank(0));
        return SparseMat(rank(k - 1), rank(k));
    }

    void validate() const;           // shape consistency and d∘d = 0
    FinAbGroup homology(int k) const;
    std::vector<FinAbGroup> homology_all() const;  // degrees 0..N, rank-sharing
};

/// Cochain complex: coboundaries delta[k]: degree k -> k+1 for 0 <= k < N.
struct CochainComplex {
    Ring ring;
    std::vector<int> ranks;
    std::vector<SparseMat> delta;

    int top_degree() const { return int(ranks.size()) - 1; }
    int rank(int k) const { return (k >= 0 && k <= top_degree()) ? ranks[k] : 0; }

    SparseMat coboundary(int k) const {
        if (k >= 0 && k < top_degree()) return delta[k];
        if (k == top_degree()) return SparseMat(0, rank(k));
        return SparseMat(rank(k + 1), rank(k));
    }

    void validate() const;
    FinAbGroup cohomology(int k) const;
    std::vector<FinAbGroup> cohomology_all() const;
};

}  // namespace ghom
