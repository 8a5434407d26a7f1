#include "ghom/elim.hpp"

#include <algorithm>
#include <queue>

#include "ghom/errors.hpp"
#include "ghom/finab.hpp"

namespace ghom {

namespace {

using boost::multiprecision::abs;

// Row-major working form with a lazily maintained column occupancy index.
struct Workspace {
    using Row = std::vector<std::pair<int, Int>>;  // sorted by column
    std::vector<Row> rows;
    std::vector<std::vector<int>> col_rows;  // may contain stale row ids
    std::vector<int> col_nnz;
    std::vector<char> row_alive, col_alive;

    explicit Workspace(SparseMat& a) {
        a.compact();
        rows.resize(a.rows());
        col_rows.resize(a.cols());
        col_nnz.assign(a.cols(), 0);
        row_alive.assign(a.rows(), 1);
        col_alive.assign(a.cols(), 1);
        for (const auto& e : a.entries()) rows[e.row].push_back({e.col, e.val});
        for (auto& r : rows)
            std::sort(r.begin(), r.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        for (int i = 0; i < a.rows(); ++i)
            for (auto& [c, v] : rows[i]) {
                col_rows[c].push_back(i);
                ++col_nnz[c];
            }
    }

    const Int* value_at(int r, int c) const {
        const Row& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != c) return nullptr;
        return &it->second;
    }

    // rows[dst] += f * rows[src]; updates the column index.
    void row_axpy(int dst, int src, const Int& f) {
        if (f == 0) return;
        Row out;
        out.reserve(rows[dst].size() + rows[src].size());
        auto a = rows[dst].begin(), ae = rows[dst].end();
        auto b = rows[src].begin(), be = rows[src].end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                Int v = f * b->second;
                if (v != 0) {
                    col_rows[b->first].push_back(dst);
                    ++col_nnz[b->first];
                    out.push_back({b->first, std::move(v)});
                }
                ++b;
            } else {
                Int v = a->second + f * b->second;
                if (v != 0)
                    out.push_back({a->first, std::move(v)});
                else
                    --col_nnz[a->first];
                ++a;
                ++b;
            }
        }
        rows[dst] = std::move(out);
    }

    void kill_row(int r) {
        for (auto& [c, v] : rows[r]) --col_nnz[c];
        rows[r].clear();
        rows[r].shrink_to_fit();
        row_alive[r] = 0;
    }

    // Live (row, value) pairs of a column; compacts the stale index.
    std::vector<std::pair<int, const Int*>> column(int c) {
        std::vector<std::pair<int, const Int*>> out;
        std::vector<int> fresh;
        std::sort(col_rows[c].begin(), col_rows[c].end());
        col_rows[c].erase(std::unique(col_rows[c].begin(), col_rows[c].end()), col_rows[c].end());
        for (int r : col_rows[c]) {
            if (!row_alive[r]) continue;
            const Int* v = value_at(r, c);
            if (!v || *v == 0) continue;
            fresh.push_back(r);
            out.push_back({r, v});
        }
        col_rows[c] = std::move(fresh);
        col_nnz[c] = int(out.size());
        return out;
    }
};

// Balanced division: b = q*a + r with |r| <= |a|/2.
Int balanced_quot(const Int& b, const Int& a) {
    Int q = b / a;
    Int r = b - q * a;
    if (r != 0 && 2 * abs(r) > abs(a)) q += (r > 0) == (a > 0) ? 1 : -1;
    return q;
}

// Invariant factors of a small dense block, no transforms.
std::vector<Int> dense_diagonalize(DenseMat m) {
    std::vector<Int> diag;
    int top = 0;
    int rows = m.rows(), cols = m.cols();
    while (top < rows && top < cols) {
        // locate minimal nonzero entry in the remaining block
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
        if (pr != top)
            for (int j = top; j < cols; ++j) std::swap(m(pr, j), m(top, j));
        if (pc != top)
            for (int i = top; i < rows; ++i) std::swap(m(i, pc), m(i, top));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = top + 1; i < rows; ++i) {
                if (m(i, top) == 0) continue;
                Int q = balanced_quot(m(i, top), m(top, top));
                for (int j = top; j < cols; ++j) m(i, j) -= q * m(top, j);
                if (m(i, top) != 0) {
                    // remainder smaller than pivot: swap it up and restart
                    for (int j = top; j < cols; ++j) std::swap(m(i, j), m(top, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = top + 1; j < cols; ++j) {
                if (m(top, j) == 0) continue;
                Int q = balanced_quot(m(top, j), m(top, top));
                for (int i = top; i < rows; ++i) m(i, j) -= q * m(i, top);
                if (m(top, j) != 0) {
                    for (int i = top; i < rows; ++i) std::swap(m(i, j), m(i, top));
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m(top, top)));
        ++top;
    }
    return diag;
}

constexpr size_t kDenseCoreLimit = 1u << 22;  // entries

}  // namespace

ZElimResult sparse_z_elim(SparseMat A) {
    Workspace w(A);
    const int ncols = A.cols();
    ZElimResult res;

    // Phase 1: consume unit pivots cheapest-column first.
    using HeapItem = std::pair<int, int>;  // (nnz, col)
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
    for (int c = 0; c < ncols; ++c)
        if (w.col_nnz[c] > 0) heap.push({w.col_nnz[c], c});
    std::vector<char> deferred(ncols, 0);
    std::vector<int> defer_list;
    while (!heap.empty()) {
        auto [n0, c] = heap.top();
        heap.pop();
        if (!w.col_alive[c]) continue;
        auto col = w.column(c);
        if (int(col.size()) != n0) {
            if (!col.empty()) heap.push({int(col.size()), c});
            continue;  // stale entry
        }
        if (col.empty()) {
            w.col_alive[c] = 0;
            continue;
        }
        int pivot_row = -1;
        size_t best_len = 0;
        for (auto& [r, v] : col)
            if (*v == 1 || *v == -1)
                if (pivot_row < 0 || w.rows[r].size() < best_len) {
                    pivot_row = r;
                    best_len = w.rows[r].size();
                }
        if (pivot_row < 0) {
            if (!deferred[c]) {
                deferred[c] = 1;
                defer_list.push_back(c);
            }
            continue;
        }
        deferred[c] = 0;
        const Int pv = *w.value_at(pivot_row, c);
        std::vector<int> touched_cols;
        for (auto& [r, vp] : col) {
            if (r == pivot_row) continue;
            Int f = -(*vp) * pv;  // pv in {1,-1}, so f*pv = -(*vp)
            w.row_axpy(r, pivot_row, f);
        }
        for (auto& [cc, vv] : w.rows[pivot_row])
            if (cc != c) touched_cols.push_back(cc);
        w.kill_row(pivot_row);
        w.col_alive[c] = 0;
        w.col_nnz[c] = 0;
        ++res.rank;
        for (int cc : touched_cols)
            if (w.col_alive[cc] && w.col_nnz[cc] > 0) {
                heap.push({w.col_nnz[cc], cc});
                if (deferred[cc]) deferred[cc] = 0;
            }
    }

    // Collect the surviving block.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < A.rows(); ++r)
        if (w.row_alive[r] && !w.rows[r].empty()) live_rows.push_back(r);
    {
        std::vector<char> col_used(ncols, 0);
        for (int r : live_rows)
            for (auto& [c, v] : w.rows[r]) col_used[c] = 1;
        for (int c = 0; c < ncols; ++c)
            if (col_used[c]) live_cols.push_back(c);
    }
    std::vector<Int> diag;
    if (!live_rows.empty()) {
        if (live_rows.size() * live_cols.size() <= kDenseCoreLimit) {
            std::vector<int> col_pos(ncols, -1);
            for (size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = int(j);
            DenseMat core(int(live_rows.size()), int(live_cols.size()));
            for (size_t i = 0; i < live_rows.size(); ++i)
                for (auto& [c, v] : w.rows[live_rows[i]]) core(int(i), col_pos[c]) = v;
            diag = dense_diagonalize(std::move(core));
        } else {
            // Euclid pivot chasing on the sparse leftover: shrink the minimal
            // entry by row ops until its column is singleton, clear its row in
            // place (legal because the column is singleton), extract, repeat.
            while (true) {
                int pr = -1, pc = -1;
                Int best;
                for (int r : live_rows) {
                    if (!w.row_alive[r]) continue;
                    for (auto& [c, v] : w.rows[r])
                        if (v != 0 && (pr < 0 || abs(v) < best)) {
                            pr = r;
                            pc = c;
                            best = abs(v);
                        }
                }
                if (pr < 0) break;
                bool isolated = false;
                while (!isolated) {
                    // column sweep
                    bool col_clean = false;
                    while (!col_clean) {
                        col_clean = true;
                        Int a = *w.value_at(pr, pc);
                        for (auto& [r, vp] : w.column(pc)) {
                            if (r == pr) continue;
                            Int q = balanced_quot(*vp, a);
                            w.row_axpy(r, pr, -q);
                            const Int* rem = w.value_at(r, pc);
                            if (rem && *rem != 0) {
                                pr = r;  // strictly smaller entry takes over
                                col_clean = false;
                                break;
                            }
                        }
                    }
                    // row sweep; column pc is singleton so these column
                    // operations only touch row pr
                    isolated = true;
                    Int a = *w.value_at(pr, pc);
                    for (auto& [c, v] : w.rows[pr]) {
                        if (c == pc) continue;
                        Int q = balanced_quot(v, a);
                        if (q != 0) {
                            v -= q * a;
                            if (v == 0) --w.col_nnz[c];
                        }
                        if (v != 0 && abs(v) < abs(a)) {
                            pc = c;
                            isolated = false;
                            break;
                        }
                    }
                    if (isolated) {
                        // a full balanced row sweep leaves only exact zeros
                        // beside the pivot
                        auto& row = w.rows[pr];
                        row.erase(std::remove_if(row.begin(), row.end(),
                                                 [](const auto& e) { return e.second == 0; }),
                                  row.end());
                        require(row.size() == 1, Errc::BadInput, "pivot isolation failed");
                    }
                }
                diag.push_back(abs(*w.value_at(pr, pc)));
                w.kill_row(pr);
                w.col_alive[pc] = 0;
            }
        }
    }
    res.rank += int(diag.size());
    std::vector<Int> nontrivial;
    for (Int& d : diag) {
        require(d != 0, Errc::BadInput, "zero pivot in diagonalization");
        if (d >= 2) nontrivial.push_back(d);
    }
    res.nontrivial_factors = canonical_invariant_factors(std::move(nontrivial));
    return res;
}

int sparse_fp_rank(const SparseMat& A, int64_t p) {
    // per-row sparse elimination mod p
    struct Row {
        std::vector<std::pair<int, int64_t>> e;  // sorted by col
    };
    SparseMat a = A;
    a.compact();
    std::vector<Row> rows(a.rows());
    for (const auto& t : a.entries()) {
        int64_t v = mod_reduce(t.val, p);
        if (v != 0) rows[t.row].e.push_back({t.col, v});
    }
    std::vector<std::vector<int>> col_rows(a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (auto& [c, v] : rows[r].e) col_rows[c].push_back(r);
    std::vector<char> row_done(a.rows(), 0);
    auto value_at = [&](int r, int c) -> int64_t {
        auto& e = rows[r].e;
        auto it = std::lower_bound(e.begin(), e.end(), c,
                                   [](const auto& x, int col) { return x.first < col; });
        return (it != e.end() && it->first == c) ? it->second : 0;
    };
    int rank = 0;
    for (int c = 0; c < a.cols(); ++c) {
        int pivot = -1;
        size_t best = 0;
        for (int r : col_rows[c]) {
            if (row_done[r]) continue;
            if (value_at(r, c) == 0) continue;
            if (pivot < 0 || rows[r].e.size() < best) {
                pivot = r;
                best = rows[r].e.size();
            }
        }
        if (pivot < 0) continue;
        int64_t inv = mod_inverse(value_at(pivot, c), p);
        for (int r : col_rows[c]) {
            if (r == pivot || row_done[r]) continue;
            int64_t v = value_at(r, c);
            if (v == 0) continue;
            int64_t f = mod_reduce(-v * inv, p);
            // rows[r] += f * rows[pivot]
            std::vector<std::pair<int, int64_t>> out;
            out.reserve(rows[r].e.size() + rows[pivot].e.size());
            auto i1 = rows[r].e.begin(), e1 = rows[r].e.end();
            auto i2 = rows[pivot].e.begin(), e2 = rows[pivot].e.end();
            while (i1 != e1 || i2 != e2) {
                if (i2 == e2 || (i1 != e1 && i1->first < i2->first)) {
                    out.push_back(*i1++);
                } else if (i1 == e1 || i2->first < i1->first) {
                    int64_t nv = mod_reduce(f * i2->second, p);
                    if (nv != 0) {
                        col_rows[i2->first].push_back(r);
                        out.push_back({i2->first, nv});
                    }
                    ++i2;
                } else {
                    int64_t nv = mod_reduce(i1->second + f * i2->second, p);
                    if (nv != 0) out.push_back({i1->first, nv});
                    ++i1;
                    ++i2;
                }
            }
            rows[r].e = std::move(out);
        }
        row_done[pivot] = 1;
        rows[pivot].e.clear();
        ++rank;
    }
    return rank;
}

}  // namespace ghom
