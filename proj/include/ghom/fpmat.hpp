#pragma once

#include <cstdint>
#include <vector>

#include "ghom/matrix.hpp"
#include "ghom/ring.hpp"

namespace ghom {

/// Dense matrix over F_p with int64 residues. Columns are the vectors
/// throughout: kernels, spans and solves all speak column language.
class FpMat {
  public:
    FpMat() = default;
    FpMat(int rows, int cols, int64_t p) : rows_(rows), cols_(cols), p_(p), a_(size_t(rows) * cols) {}

    static FpMat identity(int n, int64_t p) {
        FpMat m(n, n, p);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static FpMat from_sparse(const SparseMat& s, int64_t p) {
        FpMat m(s.rows(), s.cols(), p);
        for (const auto& e : s.entries()) {
            int64_t v = (m(e.row, e.col) + mod_reduce(e.val, p)) % p;
            m(e.row, e.col) = v;
        }
        return m;
    }

    static FpMat from_dense(const DenseMat& d, int64_t p) {
        FpMat m(d.rows(), d.cols(), p);
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) m(i, j) = mod_reduce(d(i, j), p);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int64_t p() const { return p_; }

    int64_t& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    int64_t operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const FpMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (int64_t x : a_)
            if (x != 0) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    FpMat operator*(const FpMat& b) const;
    FpMat operator-(const FpMat& b) const;
    FpMat transpose() const;

    std::vector<int64_t> apply(const std::vector<int64_t>& v) const;

    FpMat column(int j) const {
        FpMat c(rows_, 1, p_);
        for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    /// Horizontal concatenation [this | b].
    FpMat hcat(const FpMat& b) const;

    /// Keeps the listed columns, in order.
    FpMat select_columns(const std::vector<int>& idx) const;
    FpMat select_rows(const std::vector<int>& idx) const;

    DenseMat to_dense() const {
        DenseMat d(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) d(i, j) = (*this)(i, j);
        return d;
    }

  private:
    int rows_ = 0, cols_ = 0;
    int64_t p_ = 2;
    std::vector<int64_t> a_;
};

int fp_rank(FpMat m);

/// Columns form the canonical (RREF-derived) basis of ker m.
FpMat fp_kernel(const FpMat& m);

/// Column space basis, taken from the original columns at pivot positions.
FpMat fp_column_space(const FpMat& m);

/// Solves m x = b for one solution; `ok` reports consistency.
std::vector<int64_t> fp_solve(const FpMat& m, const std::vector<int64_t>& b, bool& ok);

/// Greedily extends `base` by columns of `extra` to a basis of their joint
/// span; returns the indices of the adopted extra columns.
std::vector<int> fp_extend_basis(const FpMat& base, const FpMat& extra);

/// Fixed-basis coordinate solver for a subspace given by independent columns.
/// Construction echelonizes once; coords() back-substitutes per query.
class FpSolver {
  public:
    explicit FpSolver(FpMat basis);
    int dim() const { return int(pivots_.size()); }
    /// Coordinates of v in the basis; `ok` false if v is outside the span.
    std::vector<int64_t> coords(const std::vector<int64_t>& v, bool& ok) const;

  private:
    FpMat ech_;                 // echelonized [basis]
    FpMat record_;              // applied row operations folded into a transform
    std::vector<int> pivots_;   // pivot row per basis column
    int64_t p_;
};

}  // namespace ghom
