#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghom/ring.hpp"

namespace ghom {

enum class AlgebraKind { Tensor, Exterior, Symmetric, Shuffle };

AlgebraKind parse_algebra_kind(const std::string& s);

/// Exact coefficients up to an explicit truncation degree.
struct PowerSeries {
    std::vector<Int> coeff;  // degrees 0..N

    int truncation() const { return int(coeff.size()) - 1; }
    Int at(int n) const { return n >= 0 && n < int(coeff.size()) ? coeff[n] : Int(0); }
    bool operator==(const PowerSeries& o) const { return coeff == o.coeff; }
};

PowerSeries series_product(const PowerSeries& a, const PowerSeries& b, int truncation);

/// Degree-k component size of the graded algebra on d generators.
Int graded_component_count(AlgebraKind kind, int d, int k);

/// Basis words of the degree-k component: index sequences over 1..d (strictly
/// increasing for exterior, weakly increasing for symmetric/shuffle).
std::vector<std::vector<int>> graded_basis_words(AlgebraKind kind, int d, int k);

/// Dimension series with generators placed in generator_degree.
PowerSeries hilbert_series(AlgebraKind kind, int d, int truncation, int generator_degree = 1);

/// Element of the shuffle algebra: sorted word -> coefficient.
using ShuffleElt = std::map<std::vector<int>, Int>;

/// Product of two basis words (orbit-sum basis), reduced mod p when given a
/// field ring.
ShuffleElt shuffle_product(const std::vector<int>& u, const std::vector<int>& v,
                           const Ring& ring);
ShuffleElt shuffle_multiply(const ShuffleElt& a, const ShuffleElt& b, const Ring& ring);

/// The degreewise basis bijection between symmetric and shuffle components.
/// A module isomorphism, not an algebra map.
std::vector<std::pair<std::vector<int>, std::vector<int>>> symm_shuffle_iso(int d, int k);

/// Expected homology dimensions of a d-dimensional F_p vector space: p = 2
/// gives 1/(1-t)^d, odd p gives (1+t)^d/(1-t^2)^d, p = 0 stands for Q and
/// gives (1+t)^d.
PowerSeries cartan_expected_dims(int64_t p, int d, int truncation);

struct CartanVerifyReport {
    int64_t p = 2;
    int d = 1;
    std::vector<int> expected, computed;
    bool pass = false;
};

/// Compares cartan_expected_dims against the engine's homology of (Z/p)^d.
CartanVerifyReport cartan_verify(int64_t p, int d, int max_degree,
                                 int64_t cap = 2'000'000);

}  // namespace ghom
