#pragma once

#include <vector>

#include "ghom/filtered.hpp"
#include "ghom/gmodule.hpp"
#include "ghom/resolution.hpp"
#include "ghom/simplicial.hpp"

namespace ghom {

/// Block layout of a total tensor complex: per total degree, the (p,q)
/// summands in ascending p with their offsets. `spectral` filters by either
/// index through this map.
struct DoubleComplexView {
    struct Block {
        int p, q, offset, size;
    };
    std::vector<std::vector<Block>> blocks;  // per total degree

    const Block* find(int n, int p) const {
        if (n < 0 || n >= int(blocks.size())) return nullptr;
        for (const auto& b : blocks[n])
            if (b.p == p) return &b;
        return nullptr;
    }
};

struct TensorComplex {
    ChainComplex cx;
    DoubleComplexView view;
};

/// Plain tensor product of complexes over the same ring, Koszul sign on the
/// second factor.
TensorComplex total_tensor(const ChainComplex& f, const ChainComplex& c);

/// F ⊗_G C for F the standard resolution and C an equivariant complex; the
/// (p,q) block is free of rank |G|^p · rank C_q with the inverse-action
/// convention folded into the F-differential part.
TensorComplex total_tensor_g(const FreeResolution& f, const EquivariantComplex& c,
                             const Ring& ring);

/// The two canonical filtrations of a total complex: by first index and by
/// second index.
std::pair<FilteredComplex, FilteredComplex> double_filtrations(const TensorComplex& t);

}  // namespace ghom
