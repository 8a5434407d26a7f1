#include "ghom/gmodule.hpp"

#include <random>

#include "ghom/errors.hpp"
#include "ghom/smith.hpp"

namespace ghom {

namespace {

DenseMat ring_reduce(DenseMat m, const Ring& ring) {
    if (ring.kind == RingKind::Fp) m.mod_inplace(ring.p);
    return m;
}

bool ring_equal(const DenseMat& a, const DenseMat& b, const Ring& ring) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (ring.kind != RingKind::Fp) return a == b;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (mod_reduce(a(i, j) - b(i, j), ring.p) != 0) return false;
    return true;
}

bool invertible_over(const DenseMat& m, const Ring& ring) {
    if (m.rows() != m.cols()) return false;
    SparseMat s = SparseMat::from_dense(m);
    switch (ring.kind) {
        case RingKind::Fp: return rank_over(s, ring) == m.rows();
        case RingKind::Q: return sparse_z_elim(std::move(s)).rank == m.rows();
        case RingKind::Z: {
            auto r = sparse_z_elim(std::move(s));
            return r.rank == m.rows() && r.nontrivial_factors.empty();
        }
    }
    return false;
}

}  // namespace

void validate_module(const GModule& m) {
    const FiniteGroup& g = *m.group;
    require(int(m.action.size()) == g.order, Errc::BadInput, "one action matrix per element");
    for (const DenseMat& a : m.action)
        require(a.rows() == m.rank && a.cols() == m.rank, Errc::ShapeMismatch,
                "action matrix shape");
    require(ring_equal(m.action[g.identity], DenseMat::identity(m.rank), m.ring), Errc::BadInput,
            "identity must act as the identity matrix");
    for (const DenseMat& a : m.action)
        require(invertible_over(a, m.ring), Errc::BadInput, "action matrix not invertible");
    auto law = [&](int a, int b) {
        return ring_equal(ring_reduce(m.action[a] * m.action[b], m.ring), m.action[g.mul(a, b)],
                          m.ring);
    };
    if (g.order <= 24) {
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                require(law(a, b), Errc::BadInput, "action is not a homomorphism");
    } else {
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> d(0, g.order - 1);
        for (int t = 0; t < 2000; ++t)
            require(law(d(rng), d(rng)), Errc::BadInput, "action is not a homomorphism");
    }
}

GModule trivial_module(const GroupPtr& g, const Ring& ring, int rank) {
    GModule m;
    m.group = g;
    m.ring = ring;
    m.rank = rank;
    m.action.assign(g->order, DenseMat::identity(rank));
    m.name = "trivial:" + ring.str() + (rank == 1 ? "" : "^" + std::to_string(rank));
    return m;
}

GModule permutation_module(const GroupAction& a, const Ring& ring) {
    GModule m;
    m.group = a.group;
    m.ring = ring;
    m.rank = a.set_size;
    m.action.reserve(a.group->order);
    for (int e = 0; e < a.group->order; ++e) {
        DenseMat p(a.set_size, a.set_size);
        for (int x = 0; x < a.set_size; ++x) p(a.perm[e][x], x) = 1;
        m.action.push_back(std::move(p));
    }
    m.name = "perm[" + std::to_string(a.set_size) + "]";
    return m;
}

InducedData induced_module_data(const GroupPtr& g, const Subgroup& h, const GModule& m) {
    require(same_group(m.group, h.group), Errc::GroupMismatch, "module must live over the subgroup");
    const int hs = h.group->order;
    require(g->order % hs == 0, Errc::NotASubgroup, "subgroup order must divide");
    std::vector<int> in_h(g->order, -1);
    for (int i = 0; i < hs; ++i) in_h[h.embed[i]] = i;
    require(in_h[g->identity] >= 0, Errc::NotASubgroup, "subgroup misses identity");

    // left cosets rH enumerated by least member; the trivial coset keeps 1_G
    // as its representative
    std::vector<int> coset(g->order, -1), reps;
    for (int x = 0; x < g->order; ++x) {
        if (coset[x] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(x);
        for (int i = 0; i < hs; ++i) coset[g->mul(x, h.embed[i])] = id;
    }
    reps[coset[g->identity]] = g->identity;
    const int idx = int(reps.size());
    const int r = m.rank;
    GModule out;
    out.group = g;
    out.ring = m.ring;
    out.rank = idx * r;
    out.action.reserve(g->order);
    for (int e = 0; e < g->order; ++e) {
        DenseMat a(out.rank, out.rank);
        for (int t = 0; t < idx; ++t) {
            int gt = g->mul(e, reps[t]);          // g·r_t = r_s·h
            int s = coset[gt];
            int hh = in_h[g->mul(g->inv(reps[s]), gt)];
            require(hh >= 0, Errc::NotASubgroup, "coset decomposition failed");
            const DenseMat& block = m.action[hh];
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (block(i, j) != 0) a(s * r + i, t * r + j) = block(i, j);
        }
        out.action.push_back(std::move(a));
    }
    out.name = "ind[" + m.name + "]";
    return {std::move(out), std::move(coset), std::move(reps)};
}

GModule induced_module(const GroupPtr& g, const Subgroup& h, const GModule& m) {
    return induced_module_data(g, h, m).module;
}

GModule restrict_module(const GroupPtr& src, const std::vector<int>& hom, const GModule& m) {
    require(is_homomorphism(*src, *m.group, hom), Errc::NotAHomomorphism,
            "map is not a group homomorphism");
    GModule out;
    out.group = src;
    out.ring = m.ring;
    out.rank = m.rank;
    out.action.reserve(src->order);
    for (int e = 0; e < src->order; ++e) out.action.push_back(m.action[hom[e]]);
    out.name = "res[" + m.name + "]";
    return out;
}

GModule restrict_to_subgroup(const Subgroup& h, const GModule& m) {
    return restrict_module(h.group, h.embed, m);
}

GModule direct_sum_module(const GModule& a, const GModule& b) {
    require(same_group(a.group, b.group), Errc::GroupMismatch, "direct sum needs one group");
    require(a.ring == b.ring, Errc::RingMismatch, "direct sum needs one ring");
    GModule out;
    out.group = a.group;
    out.ring = a.ring;
    out.rank = a.rank + b.rank;
    out.action.reserve(a.group->order);
    for (int e = 0; e < a.group->order; ++e) {
        DenseMat m(out.rank, out.rank);
        for (int i = 0; i < a.rank; ++i)
            for (int j = 0; j < a.rank; ++j) m(i, j) = a.action[e](i, j);
        for (int i = 0; i < b.rank; ++i)
            for (int j = 0; j < b.rank; ++j) m(a.rank + i, a.rank + j) = b.action[e](i, j);
        out.action.push_back(std::move(m));
    }
    out.name = a.name + "+" + b.name;
    return out;
}

FinAbGroup coinvariants(const GModule& m) {
    const FiniteGroup& g = *m.group;
    SparseMat stacked(m.rank, m.rank * std::max(0, g.order - 1));
    int block = 0;
    for (int e = 0; e < g.order; ++e) {
        if (e == g.identity) continue;
        const DenseMat& a = m.action[e];
        for (int i = 0; i < m.rank; ++i)
            for (int j = 0; j < m.rank; ++j) {
                Int v = a(i, j) - (i == j ? 1 : 0);
                if (v != 0) stacked.add(i, block * m.rank + j, v);
            }
        ++block;
    }
    stacked.compact();
    if (m.ring.kind == RingKind::Z) {
        ZElimResult r = invariant_factors(stacked);
        return FinAbGroup(m.rank - r.rank, r.nontrivial_factors);
    }
    return FinAbGroup(m.rank - rank_over(stacked, m.ring), {});
}

FieldCoinvariants field_coinvariants(const GModule& m, const std::vector<int>& subgroup_elems) {
    require(m.ring.kind == RingKind::Fp, Errc::RingUnsupported,
            "field coinvariants need F_p coefficients");
    const int64_t p = m.ring.p;
    FpMat stacked(m.rank, m.rank * int(subgroup_elems.size()), p);
    int block = 0;
    for (int e : subgroup_elems) {
        for (int i = 0; i < m.rank; ++i)
            for (int j = 0; j < m.rank; ++j)
                stacked(i, block * m.rank + j) =
                    mod_reduce(m.action[e](i, j) - (i == j ? 1 : 0), p);
        ++block;
    }
    FpMat span = fp_column_space(stacked);
    std::vector<int> ext = fp_extend_basis(span, FpMat::identity(m.rank, p));
    FpMat comp = FpMat::identity(m.rank, p).select_columns(ext);
    FpSolver solver(span.hcat(comp));
    FpMat proj(comp.cols(), m.rank, p);
    for (int j = 0; j < m.rank; ++j) {
        std::vector<int64_t> e(m.rank, 0);
        e[j] = 1;
        bool ok = false;
        auto c = solver.coords(e, ok);
        require(ok, Errc::BadInput, "coinvariant projection failed");
        for (int i = 0; i < comp.cols(); ++i) proj(i, j) = c[span.cols() + i];
    }
    return {comp, proj};
}

}  // namespace ghom
