#include "ghom/smith.hpp"

#include "ghom/errors.hpp"
#include "ghom/fpmat.hpp"

namespace ghom {

namespace {

using boost::multiprecision::abs;

Int balanced_quot(const Int& b, const Int& a) {
    Int q = b / a;
    Int r = b - q * a;
    if (r != 0 && 2 * abs(r) > abs(a)) q += (r > 0) == (a > 0) ? 1 : -1;
    return q;
}

struct Transformer {
    DenseMat& m;
    DenseMat &U, &U_inv, &V, &V_inv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
        for (int c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
        for (int r = 0; r < U_inv.rows(); ++r) std::swap(U_inv(r, i), U_inv(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
        for (int r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
        for (int c = 0; c < V_inv.cols(); ++c) std::swap(V_inv(i, c), V_inv(j, c));
    }
    // row_i -= q * row_j
    void row_sub(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < m.cols(); ++c) m(i, c) -= q * m(j, c);
        for (int c = 0; c < U.cols(); ++c) U(i, c) -= q * U(j, c);
        for (int r = 0; r < U_inv.rows(); ++r) U_inv(r, j) += q * U_inv(r, i);
    }
    // col_i -= q * col_j
    void col_sub(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < m.rows(); ++r) m(r, i) -= q * m(r, j);
        for (int r = 0; r < V.rows(); ++r) V(r, i) -= q * V(r, j);
        for (int c = 0; c < V_inv.cols(); ++c) V_inv(j, c) += q * V_inv(i, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
        for (int c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
        for (int r = 0; r < U_inv.rows(); ++r) U_inv(r, i) = -U_inv(r, i);
    }
};

}  // namespace

SmithForm smith_normal_form(const DenseMat& A) {
    SmithForm sf;
    sf.D = A;
    sf.U = DenseMat::identity(A.rows());
    sf.U_inv = DenseMat::identity(A.rows());
    sf.V = DenseMat::identity(A.cols());
    sf.V_inv = DenseMat::identity(A.cols());
    DenseMat& m = sf.D;
    Transformer t{m, sf.U, sf.U_inv, sf.V, sf.V_inv};

    int top = 0;
    const int rows = m.rows(), cols = m.cols();
    while (top < rows && top < cols) {
        int pr = -1, pc = -1;
        Int best;
        for (int i = top; i < rows; ++i)
            for (int j = top; j < cols; ++j)
                if (m(i, j) != 0 && (pr < 0 || abs(m(i, j)) < best)) {
                    pr = i;
                    pc = j;
                    best = abs(m(i, j));
                }
        if (pr < 0) break;
        t.swap_rows(top, pr);
        t.swap_cols(top, pc);
        while (true) {
            bool dirty = false;
            for (int i = top + 1; i < rows; ++i) {
                if (m(i, top) == 0) continue;
                Int q = balanced_quot(m(i, top), m(top, top));
                t.row_sub(i, top, q);
                if (m(i, top) != 0) {
                    t.swap_rows(i, top);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = top + 1; j < cols; ++j) {
                if (m(top, j) == 0) continue;
                Int q = balanced_quot(m(top, j), m(top, top));
                t.col_sub(j, top, q);
                if (m(top, j) != 0) {
                    t.swap_cols(j, top);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // enforce divisibility against the rest of the block
            bool fixed = true;
            for (int i = top + 1; i < rows && fixed; ++i)
                for (int j = top + 1; j < cols && fixed; ++j)
                    if (m(i, j) % m(top, top) != 0) {
                        t.row_sub(top, i, Int(-1));  // fold row i into the pivot row
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (m(top, top) < 0) t.negate_row(top);
        ++top;
    }
    sf.rank = 0;
    for (int i = 0; i < std::min(rows, cols); ++i)
        if (m(i, i) != 0) ++sf.rank;
    return sf;
}

ZElimResult invariant_factors(const SparseMat& A, int dense_threshold) {
    if (A.cols() <= dense_threshold && A.rows() <= dense_threshold &&
        size_t(A.rows()) * size_t(A.cols()) <= size_t(dense_threshold) * dense_threshold) {
        SmithForm sf = smith_normal_form(A.dense());
        ZElimResult r;
        r.rank = sf.rank;
        r.nontrivial_factors = sf.nontrivial_factors();
        return r;
    }
    return sparse_z_elim(A);
}

int rank_over(const SparseMat& A, const Ring& ring) {
    if (A.rows() == 0 || A.cols() == 0) return 0;
    switch (ring.kind) {
        case RingKind::Fp: return sparse_fp_rank(A, ring.p);
        case RingKind::Z:
        case RingKind::Q: return sparse_z_elim(A).rank;
    }
    return 0;
}

bool is_zero_over(const SparseMat& A, const Ring& ring) {
    SparseMat c = A;
    c.compact();
    for (const auto& e : c.entries()) {
        if (ring.kind == RingKind::Fp) {
            if (mod_reduce(e.val, ring.p) != 0) return false;
        } else if (e.val != 0) {
            return false;
        }
    }
    return true;
}

DenseMat hermite_rows(DenseMat M) {
    const int rows = M.rows(), cols = M.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd-collapse the column below r into a single positive pivot
        while (true) {
            int pivot = -1;
            Int best;
            for (int i = r; i < rows; ++i)
                if (M(i, c) != 0 && (pivot < 0 || abs(M(i, c)) < best)) {
                    pivot = i;
                    best = abs(M(i, c));
                }
            if (pivot < 0) break;
            if (pivot != r)
                for (int j = 0; j < cols; ++j) std::swap(M(pivot, j), M(r, j));
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (M(i, c) == 0) continue;
                Int q = balanced_quot(M(i, c), M(r, c));
                for (int j = 0; j < cols; ++j) M(i, j) -= q * M(r, j);
                if (M(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (M(r, c) == 0) continue;
        if (M(r, c) < 0)
            for (int j = 0; j < cols; ++j) M(r, j) = -M(r, j);
        for (int i = 0; i < r; ++i) {
            Int q = M(i, c) / M(r, c);
            if (M(i, c) < 0 && M(i, c) % M(r, c) != 0) q -= 1;  // floor division
            if (q != 0)
                for (int j = 0; j < cols; ++j) M(i, j) -= q * M(r, j);
        }
        ++r;
    }
    DenseMat out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = M(i, j);
    return out;
}

namespace {

DenseMat kernel_basis_q(const DenseMat& A) {
    const int rows = A.rows(), cols = A.cols();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = Rat(A(i, j));
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rat inv = m[row][c];
        for (int j = 0; j < cols; ++j) m[row][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    DenseMat K(cols, int(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (size_t pi = 0; pi < pivot_col.size(); ++pi) v[pivot_col[pi]] = -m[pi][fc];
        Int lcm = 1;
        for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        std::vector<Int> w(cols);
        Int g = 0;
        for (int i = 0; i < cols; ++i) {
            w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
            g = boost::multiprecision::gcd(g, w[i]);
        }
        if (g > 1)
            for (Int& x : w) x /= g;
        for (int i = 0; i < cols; ++i)
            if (w[i] != 0) {
                if (w[i] < 0)
                    for (Int& x : w) x = -x;
                break;
            }
        for (int i = 0; i < cols; ++i) K(i, int(j)) = w[i];
    }
    return K;
}

}  // namespace

DenseMat kernel_basis(const SparseMat& A, const Ring& ring) {
    switch (ring.kind) {
        case RingKind::Z: {
            SmithForm sf = smith_normal_form(A.dense());
            int z = A.cols() - sf.rank;
            DenseMat K(A.cols(), z);
            for (int j = 0; j < z; ++j)
                for (int i = 0; i < A.cols(); ++i) K(i, j) = sf.V(i, sf.rank + j);
            return hermite_rows(K.transpose()).transpose();
        }
        case RingKind::Fp: {
            FpMat k = fp_kernel(FpMat::from_sparse(A, ring.p));
            return k.to_dense();
        }
        case RingKind::Q: return kernel_basis_q(A.dense());
    }
    fail(Errc::BadInput, "unknown ring");
}

FinAbGroup homology_at(const SparseMat& d_in, const SparseMat& d_out, const Ring& ring) {
    require(d_out.cols() == d_in.rows(), Errc::ShapeMismatch,
            "homology_at: d_out columns must match d_in rows");
    const int n = d_out.cols();
    if (!is_zero_over(d_out.multiply(d_in), ring))
        fail(Errc::CompositionNotZero, "d_out ∘ d_in is not the zero map");
    if (ring.kind == RingKind::Z) {
        ZElimResult rin = invariant_factors(d_in);
        int rout = rank_over(d_out, ring);
        int free = n - rout - rin.rank;
        require(free >= 0, Errc::BadInput, "negative free rank");
        return FinAbGroup(free, rin.nontrivial_factors);
    }
    int rin = rank_over(d_in, ring);
    int rout = rank_over(d_out, ring);
    int dim = n - rout - rin;
    require(dim >= 0, Errc::BadInput, "negative dimension");
    return FinAbGroup(dim, {});
}

std::optional<std::vector<Int>> z_solve(const SmithForm& sf, const std::vector<Int>& b) {
    require(int(b.size()) == sf.U.rows(), Errc::ShapeMismatch, "z_solve shape");
    std::vector<Int> ub = sf.U.apply(b);
    std::vector<Int> y(sf.V.rows());
    int n = std::min(sf.D.rows(), sf.D.cols());
    for (int i = 0; i < int(ub.size()); ++i) {
        if (i < n && sf.D(i, i) != 0) {
            if (ub[i] % sf.D(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / sf.D(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return sf.V.apply(y);
}

}  // namespace ghom
