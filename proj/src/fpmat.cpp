#include "ghom/fpmat.hpp"

#include "ghom/errors.hpp"
#include "ghom/kernels.hpp"

namespace ghom {

FpMat FpMat::operator*(const FpMat& b) const {
    require(cols_ == b.rows_ && p_ == b.p_, Errc::ShapeMismatch, "fp product");
    FpMat c(rows_, b.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int64_t aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) = (c(i, j) + aik * b(k, j)) % p_;
        }
    return c;
}

FpMat FpMat::operator-(const FpMat& b) const {
    require(rows_ == b.rows_ && cols_ == b.cols_ && p_ == b.p_, Errc::ShapeMismatch, "fp diff");
    FpMat c(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = mod_reduce(a_[i] - b.a_[i], p_);
    return c;
}

FpMat FpMat::transpose() const {
    FpMat t(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<int64_t> FpMat::apply(const std::vector<int64_t>& v) const {
    require(int(v.size()) == cols_, Errc::ShapeMismatch, "fp apply");
    std::vector<int64_t> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        int64_t acc = 0;
        for (int j = 0; j < cols_; ++j) acc = (acc + (*this)(i, j) * v[j]) % p_;
        out[i] = acc;
    }
    return out;
}

FpMat FpMat::hcat(const FpMat& b) const {
    if (rows_ == 0 && cols_ == 0) return b;
    if (b.rows_ == 0 && b.cols_ == 0) return *this;
    require(rows_ == b.rows_ && p_ == b.p_, Errc::ShapeMismatch, "fp hcat");
    FpMat c(rows_, cols_ + b.cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j);
        for (int j = 0; j < b.cols_; ++j) c(i, cols_ + j) = b(i, j);
    }
    return c;
}

FpMat FpMat::select_columns(const std::vector<int>& idx) const {
    FpMat c(rows_, int(idx.size()), p_);
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) c(i, int(j)) = (*this)(i, idx[j]);
    return c;
}

FpMat FpMat::select_rows(const std::vector<int>& idx) const {
    FpMat c(int(idx.size()), cols_, p_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j) c(int(i), j) = (*this)(idx[i], j);
    return c;
}

namespace {

// In-place row echelon; returns pivot (row, col) pairs in order.
std::vector<std::pair<int, int>> echelonize(FpMat& m) {
    const int64_t p = m.p();
    std::vector<std::pair<int, int>> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        int64_t inv = mod_inverse(m(row, col), p);
        for (int j = col; j < m.cols(); ++j) m(row, j) = (m(row, j) * inv) % p;
        kern::fp_eliminate_below(m, row, col);
        pivots.push_back({row, col});
        ++row;
    }
    return pivots;
}

// Full reduced row echelon form.
std::vector<std::pair<int, int>> rref(FpMat& m) {
    auto pivots = echelonize(m);
    const int64_t p = m.p();
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [r, c] = *it;
        for (int i = 0; i < r; ++i) {
            int64_t f = m(i, c);
            if (f == 0) continue;
            for (int j = c; j < m.cols(); ++j) m(i, j) = mod_reduce(m(i, j) - f * m(r, j), p);
        }
    }
    return pivots;
}

}  // namespace

int fp_rank(FpMat m) { return int(echelonize(m).size()); }

FpMat fp_kernel(const FpMat& m) {
    FpMat e = m;
    auto pivots = rref(e);
    const int64_t p = m.p();
    std::vector<int> pivot_col(m.cols(), -1);
    for (auto [r, c] : pivots) pivot_col[c] = r;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (pivot_col[c] < 0) free_cols.push_back(c);
    FpMat k(m.cols(), int(free_cols.size()), p);
    for (size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        k(fc, int(j)) = 1;
        for (auto [r, c] : pivots) k(c, int(j)) = mod_reduce(-e(r, fc), p);
    }
    return k;
}

FpMat fp_column_space(const FpMat& m) {
    FpMat e = m;
    auto pivots = echelonize(e);
    std::vector<int> cols;
    cols.reserve(pivots.size());
    for (auto [r, c] : pivots) cols.push_back(c);
    return m.select_columns(cols);
}

std::vector<int64_t> fp_solve(const FpMat& m, const std::vector<int64_t>& b, bool& ok) {
    require(int(b.size()) == m.rows(), Errc::ShapeMismatch, "fp solve");
    const int64_t p = m.p();
    FpMat aug(m.rows(), m.cols() + 1, p);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = mod_reduce(b[i], p);
    }
    auto pivots = rref(aug);
    std::vector<int64_t> x(m.cols(), 0);
    ok = true;
    for (auto [r, c] : pivots)
        if (c == m.cols()) ok = false;  // inconsistent row
    if (!ok) return x;
    for (auto [r, c] : pivots)
        if (c < m.cols()) x[c] = aug(r, m.cols());
    return x;
}

std::vector<int> fp_extend_basis(const FpMat& base, const FpMat& extra) {
    require(base.cols() == 0 || base.rows() == extra.rows(), Errc::ShapeMismatch, "extend basis");
    FpMat work = base.cols() == 0 ? extra : base.hcat(extra);
    FpMat e = work;
    auto pivots = echelonize(e);
    std::vector<int> adopted;
    for (auto [r, c] : pivots)
        if (c >= base.cols()) adopted.push_back(c - base.cols());
    return adopted;
}

FpSolver::FpSolver(FpMat basis) : ech_(std::move(basis)), p_(ech_.p()) {
    record_ = FpMat::identity(ech_.rows(), p_);
    // echelonize while recording row ops so coords() can replay them on v
    int row = 0;
    for (int col = 0; col < ech_.cols() && row < ech_.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < ech_.rows(); ++i)
            if (ech_(i, col) != 0) {
                piv = i;
                break;
            }
        require(piv >= 0, Errc::BadInput, "FpSolver needs independent columns");
        if (piv != row)
            for (int j = 0; j < ech_.rows(); ++j) std::swap(record_(piv, j), record_(row, j));
        if (piv != row)
            for (int j = 0; j < ech_.cols(); ++j) std::swap(ech_(piv, j), ech_(row, j));
        int64_t inv = mod_inverse(ech_(row, col), p_);
        for (int j = 0; j < ech_.cols(); ++j) ech_(row, j) = (ech_(row, j) * inv) % p_;
        for (int j = 0; j < ech_.rows(); ++j) record_(row, j) = (record_(row, j) * inv) % p_;
        for (int i = 0; i < ech_.rows(); ++i) {
            if (i == row) continue;
            int64_t f = ech_(i, col);
            if (f == 0) continue;
            for (int j = 0; j < ech_.cols(); ++j)
                ech_(i, j) = mod_reduce(ech_(i, j) - f * ech_(row, j), p_);
            for (int j = 0; j < ech_.rows(); ++j)
                record_(i, j) = mod_reduce(record_(i, j) - f * record_(row, j), p_);
        }
        pivots_.push_back(col);
        ++row;
    }
}

std::vector<int64_t> FpSolver::coords(const std::vector<int64_t>& v, bool& ok) const {
    std::vector<int64_t> w = record_.apply(v);
    // after the recorded reduction the basis is the identity on its pivot
    // rows; rows beyond dim() must vanish for v to lie in the span
    std::vector<int64_t> x(ech_.cols(), 0);
    ok = true;
    for (int i = 0; i < int(ech_.rows()); ++i) {
        if (i < dim()) {
            x[i] = w[i];
        } else if (w[i] != 0) {
            ok = false;
        }
    }
    return x;
}

}  // namespace ghom
