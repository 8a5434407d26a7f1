#include "ghom/tensorcx.hpp"

#include "ghom/errors.hpp"
#include "ghom/smith.hpp"

namespace ghom {

namespace {

void check_square_zero(const ChainComplex& cx) {
    for (int k = 2; k <= cx.top_degree(); ++k)
        if (!is_zero_over(cx.d[k - 1].multiply(cx.d[k]), cx.ring))
            fail(Errc::SignCheckFailed, "total differential squared nonzero");
}

SparseMat reduce_ring(SparseMat m, const Ring& ring) {
    if (ring.kind != RingKind::Fp) return m;
    SparseMat out(m.rows(), m.cols());
    m.compact();
    for (const auto& e : m.entries()) {
        int64_t v = mod_reduce(e.val, ring.p);
        if (v != 0) out.add(e.row, e.col, v);
    }
    out.compact();
    return out;
}

}  // namespace

TensorComplex total_tensor(const ChainComplex& f, const ChainComplex& c) {
    require(f.ring == c.ring, Errc::RingMismatch, "tensor factors over different rings");
    TensorComplex t;
    t.cx.ring = f.ring;
    const int N = f.top_degree() + c.top_degree();
    t.view.blocks.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        int offset = 0;
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (p > f.top_degree() || q > c.top_degree()) continue;
            int size = f.ranks[p] * c.ranks[q];
            if (size == 0) continue;
            t.view.blocks[n].push_back({p, q, offset, size});
            offset += size;
        }
        t.cx.ranks.push_back(offset);
    }
    t.cx.d.resize(N + 1);
    t.cx.d[0] = SparseMat(0, t.cx.ranks[0]);
    for (int n = 1; n <= N; ++n) {
        SparseMat d(t.cx.ranks[n - 1], t.cx.ranks[n]);
        for (const auto& blk : t.view.blocks[n]) {
            const int p = blk.p, q = blk.q;
            const int cq = c.ranks[q];
            if (p >= 1) {
                const auto* tgt = t.view.find(n - 1, p - 1);
                if (tgt) {
                    SparseMat df = f.d[p];
                    df.compact();
                    for (const auto& e : df.entries())
                        for (int j = 0; j < cq; ++j)
                            d.add(tgt->offset + e.row * cq + j, blk.offset + e.col * cq + j,
                                  e.val);
                }
            }
            if (q >= 1) {
                const auto* tgt = t.view.find(n - 1, p);
                if (tgt) {
                    const int cq1 = c.ranks[q - 1];
                    SparseMat dc = c.d[q];
                    dc.compact();
                    Int sign = (p % 2 == 0) ? 1 : -1;
                    for (int i = 0; i < f.ranks[p]; ++i)
                        for (const auto& e : dc.entries())
                            d.add(tgt->offset + i * cq1 + e.row, blk.offset + i * cq + e.col,
                                  sign * e.val);
                }
            }
        }
        d.compact();
        t.cx.d[n] = reduce_ring(std::move(d), t.cx.ring);
    }
    check_square_zero(t.cx);
    return t;
}

TensorComplex total_tensor_g(const FreeResolution& f, const EquivariantComplex& c,
                             const Ring& ring) {
    require(same_group(f.group, c.group), Errc::GroupMismatch, "tensor factors over different groups");
    TensorComplex t;
    t.cx.ring = ring;
    const int N = f.top_degree + c.top_degree();
    t.view.blocks.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        int offset = 0;
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (p > f.top_degree || q > c.top_degree()) continue;
            int size = int(f.granks[p]) * c.cx.ranks[q];
            if (size == 0) continue;
            t.view.blocks[n].push_back({p, q, offset, size});
            offset += size;
        }
        t.cx.ranks.push_back(offset);
    }
    t.cx.d.resize(N + 1);
    t.cx.d[0] = SparseMat(0, t.cx.ranks[0]);
    for (int n = 1; n <= N; ++n) {
        SparseMat d(t.cx.ranks[n - 1], t.cx.ranks[n]);
        for (const auto& blk : t.view.blocks[n]) {
            const int p = blk.p, q = blk.q;
            const int cq = c.cx.ranks[q];
            if (p >= 1) {
                // d_F ⊗ id with the group coefficient moved onto C by the
                // right-module convention: g·b ⊗ x = b ⊗ g^{-1}x
                const auto* tgt = t.view.find(n - 1, p - 1);
                if (tgt) {
                    const auto& act = c.degree_action[q];
                    for (int w = 0; w < int(f.granks[p]); ++w)
                        for (const auto& e : f.d[p].col[w]) {
                            const auto& perm = act.perm[c.group->inv(e.g)];
                            for (int x = 0; x < cq; ++x)
                                d.add(tgt->offset + e.row * cq + perm[x],
                                      blk.offset + w * cq + x, e.coeff);
                        }
                }
            }
            if (q >= 1) {
                const auto* tgt = t.view.find(n - 1, p);
                if (tgt) {
                    const int cq1 = c.cx.ranks[q - 1];
                    SparseMat dc = c.cx.d[q];
                    dc.compact();
                    Int sign = (p % 2 == 0) ? 1 : -1;
                    for (int i = 0; i < int(f.granks[p]); ++i)
                        for (const auto& e : dc.entries())
                            d.add(tgt->offset + i * cq1 + e.row, blk.offset + i * cq + e.col,
                                  sign * e.val);
                }
            }
        }
        d.compact();
        t.cx.d[n] = reduce_ring(std::move(d), ring);
    }
    check_square_zero(t.cx);
    return t;
}

std::pair<FilteredComplex, FilteredComplex> double_filtrations(const TensorComplex& t) {
    FilteredComplex by_p, by_q;
    by_p.cx = t.cx;
    by_q.cx = t.cx;
    const int N = t.cx.top_degree();
    by_p.level.resize(N + 1);
    by_q.level.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        by_p.level[n].assign(t.cx.ranks[n], 0);
        by_q.level[n].assign(t.cx.ranks[n], 0);
        for (const auto& blk : t.view.blocks[n])
            for (int i = 0; i < blk.size; ++i) {
                by_p.level[n][blk.offset + i] = blk.p;
                by_q.level[n][blk.offset + i] = blk.q;
            }
    }
    by_p.validate();
    by_q.validate();
    return {std::move(by_p), std::move(by_q)};
}

}  // namespace ghom
