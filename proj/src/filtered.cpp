#include "ghom/filtered.hpp"

#include "ghom/errors.hpp"

namespace ghom {

void FilteredComplex::validate() const {
    cx.validate();
    require(level.size() == cx.ranks.size(), Errc::ShapeMismatch, "one level list per degree");
    for (int n = 0; n <= top_degree(); ++n) {
        require(int(level[n].size()) == cx.ranks[n], Errc::ShapeMismatch,
                "level count at degree " + std::to_string(n));
        for (int l : level[n])
            if (l < 0 || l > n)
                fail(Errc::NotCanonicallyBounded,
                     "level " + std::to_string(l) + " out of [0," + std::to_string(n) +
                         "] at degree " + std::to_string(n));
    }
    for (int k = 1; k <= top_degree(); ++k) {
        SparseMat d = cx.d[k];
        d.compact();
        for (const auto& e : d.entries())
            if (level[k - 1][e.row] > level[k][e.col])
                fail(Errc::NotCanonicallyBounded,
                     "differential raises the filtration at degree " + std::to_string(k));
    }
}

}  // namespace ghom
