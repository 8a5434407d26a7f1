#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ghom/errors.hpp"
#include "ghom/ring.hpp"

namespace ghom {

/// Dense integer matrix, row-major. The workhorse for module actions,
/// normal forms with transforms and anything small enough to hold densely.
class DenseMat {
  public:
    DenseMat() = default;
    DenseMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static DenseMat identity(int n) {
        DenseMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static DenseMat zero(int rows, int cols) { return DenseMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const DenseMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    DenseMat transpose() const {
        DenseMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    DenseMat operator*(const DenseMat& b) const {
        require(cols_ == b.rows_, Errc::ShapeMismatch, "matrix product shape");
        DenseMat c(rows_, b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    DenseMat operator-(const DenseMat& b) const {
        require(rows_ == b.rows_ && cols_ == b.cols_, Errc::ShapeMismatch, "matrix difference");
        DenseMat c(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] - b.a_[i];
        return c;
    }

    DenseMat operator+(const DenseMat& b) const {
        require(rows_ == b.rows_ && cols_ == b.cols_, Errc::ShapeMismatch, "matrix sum");
        DenseMat c(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] + b.a_[i];
        return c;
    }

    void mod_inplace(int64_t p) {
        for (Int& x : a_) {
            x %= p;
            if (x < 0) x += p;
        }
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        require(int(v.size()) == cols_, Errc::ShapeMismatch, "matrix-vector shape");
        std::vector<Int> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct Triplet {
    int row = 0, col = 0;
    Int val;
};

/// Sparse integer matrix kept as column-sorted triplets. Differentials of
/// large complexes live here; the eliminators consume this form directly.
class SparseMat {
  public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Triplet>& entries() const { return t_; }
    size_t nnz() const { return t_.size(); }

    void add(int row, int col, Int val) {
        if (val == 0) return;
        t_.push_back({row, col, std::move(val)});
        compacted_ = false;
    }

    /// Sorts by (col,row) and merges duplicate coordinates.
    void compact() {
        if (compacted_) return;
        std::sort(t_.begin(), t_.end(), [](const Triplet& a, const Triplet& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
        std::vector<Triplet> out;
        out.reserve(t_.size());
        for (auto& e : t_) {
            if (!out.empty() && out.back().col == e.col && out.back().row == e.row)
                out.back().val += e.val;
            else
                out.push_back(std::move(e));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Triplet& e) { return e.val == 0; }),
                  out.end());
        t_ = std::move(out);
        compacted_ = true;
    }

    bool is_zero() const {
        for (const auto& e : t_)
            if (e.val != 0) return false;
        return true;
    }

    DenseMat dense() const {
        DenseMat m(rows_, cols_);
        for (const auto& e : t_) m(e.row, e.col) += e.val;
        return m;
    }

    static SparseMat from_dense(const DenseMat& m) {
        SparseMat s(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m(i, j) != 0) s.add(i, j, m(i, j));
        s.compact();
        return s;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        require(int(v.size()) == cols_, Errc::ShapeMismatch, "sparse apply shape");
        std::vector<Int> out(rows_);
        for (const auto& e : t_)
            if (v[e.col] != 0) out[e.row] += e.val * v[e.col];
        return out;
    }

    /// this * b, sparse-sparse; used for d∘d = 0 checks.
    SparseMat multiply(const SparseMat& b) const {
        require(cols_ == b.rows_, Errc::ShapeMismatch, "sparse product shape");
        SparseMat a = *this;
        a.compact();
        SparseMat bc = b;
        bc.compact();
        std::vector<std::vector<std::pair<int, const Int*>>> acol(cols_);
        for (const auto& e : a.t_) acol[e.col].push_back({e.row, &e.val});
        SparseMat c(rows_, b.cols_);
        for (const auto& eb : bc.t_)
            for (auto& [i, av] : acol[eb.row]) c.add(i, eb.col, *av * eb.val);
        c.compact();
        return c;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Triplet> t_;
    bool compacted_ = true;
};

}  // namespace ghom
