#include "ghom/spectral.hpp"

#include "ghom/errors.hpp"
#include "ghom/smith.hpp"

namespace ghom {

namespace {

std::vector<int64_t> column_of(const FpMat& m, int j) {
    std::vector<int64_t> v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

}  // namespace

FpMat SpectralSequence::z_space(int fl, int degree, int r) const {
    const int64_t p = p_;
    if (degree < 0 || degree > top_degree()) return FpMat(0, 0, p);
    const int n_rank = fc_.cx.ranks[degree];
    if (fl < 0) return FpMat(n_rank, 0, p);
    auto cols = fc_.filtered_basis(degree, std::min(fl, degree));
    if (r <= 0 || degree == 0) {
        // the whole coordinate subspace F^fl
        FpMat out(n_rank, int(cols.size()), p);
        for (size_t j = 0; j < cols.size(); ++j) out(cols[j], int(j)) = 1;
        return out;
    }
    // rows of C_{degree-1} with level > fl - r
    std::vector<int> rows;
    for (int i = 0; i < fc_.cx.ranks[degree - 1]; ++i)
        if (fc_.level[degree - 1][i] > fl - r) rows.push_back(i);
    const FpMat& d = dmat_[degree];
    FpMat restricted(int(rows.size()), int(cols.size()), p);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) restricted(int(i), int(j)) = d(rows[i], cols[j]);
    FpMat k = fp_kernel(restricted);
    FpMat out(n_rank, k.cols(), p);
    for (int j = 0; j < k.cols(); ++j)
        for (size_t i = 0; i < cols.size(); ++i) out(cols[i], j) = k(int(i), j);
    return out;
}

SpectralSequence::SpectralSequence(FilteredComplex fc, int max_page, int audit_degree)
    : fc_(std::move(fc)), max_page_(max_page) {
    fc_.validate();
    require(fc_.cx.ring.kind == RingKind::Fp, Errc::RingUnsupported,
            "full page computation needs field coefficients (pages_z handles Z)");
    p_ = fc_.cx.ring.p;
    const int N = top_degree();
    audit_degree_ = audit_degree < 0 ? N : std::min(audit_degree, N);
    require(max_page_ >= 0, Errc::BadInput, "negative page index");

    dmat_.resize(N + 1);
    for (int k = 1; k <= N; ++k) dmat_[k] = FpMat::from_sparse(fc_.cx.d[k], p_);
    dmat_[0] = FpMat(0, fc_.cx.ranks[0], p_);

    cell_.resize(max_page_ + 1);
    for (int r = 0; r <= max_page_; ++r) {
        cell_[r].assign(N + 1, {});
        for (int p = 0; p <= N; ++p) cell_[r][p].assign(N - p + 1, Cell{});
        for (int p = 0; p <= N; ++p)
            for (int q = 0; q + p <= N; ++q) {
                const int n = p + q;
                Cell& c = cell_[r][p][q];
                FpMat numer = z_space(p, n, r);
                FpMat d1 = z_space(p - 1, n, r - 1);
                FpMat pre = z_space(p + r - 1, n + 1, r - 1);
                FpMat d2(fc_.cx.ranks[n], pre.cols(), p_);
                if (n + 1 <= N && pre.cols() > 0) {
                    for (int j = 0; j < pre.cols(); ++j) {
                        auto img = dmat_[n + 1].apply(column_of(pre, j));
                        for (int i = 0; i < fc_.cx.ranks[n]; ++i) d2(i, j) = img[i];
                    }
                }
                FpMat denom_span = fp_column_space(d1.hcat(d2));
                auto ext = fp_extend_basis(denom_span, numer);
                c.reps = numer.select_columns(ext);
                c.dim = c.reps.cols();
                c.solver = std::make_shared<FpSolver>(denom_span.hcat(c.reps));
            }
        // differentials d^r: (p,q) -> (p-r, q+r-1)
        for (int p = 0; p <= N; ++p)
            for (int q = 0; q + p <= N; ++q) {
                Cell& c = cell_[r][p][q];
                const int n = p + q;
                const int tp = p - r, tq = q + r - 1;
                bool target_ok = tp >= 0 && tq >= 0 && tp + tq <= N && n >= 1;
                int tdim = target_ok ? cell_[r][tp][tq].dim : 0;
                c.d = FpMat(tdim, c.dim, p_);
                if (!target_ok || c.dim == 0 || tdim == 0) continue;
                const Cell& tgt = cell_[r][tp][tq];
                const int denom_cols = tgt.solver->dim() - tgt.dim;
                for (int j = 0; j < c.dim; ++j) {
                    auto img = dmat_[n].apply(column_of(c.reps, j));
                    bool ok = false;
                    auto coords = tgt.solver->coords(img, ok);
                    require(ok, Errc::BadInput, "page differential left its target cell");
                    for (int i = 0; i < tdim; ++i) c.d(i, j) = coords[denom_cols + i];
                }
            }
    }
}

const SpectralSequence::Cell& SpectralSequence::at(int r, int p, int q) const {
    static const Cell empty{};
    if (r < 0 || r > max_page_ || p < 0 || q < 0 || p + q > top_degree()) return empty;
    return cell_[r][p][q];
}

int SpectralSequence::dim(int r, int p, int q) const { return at(r, p, q).dim; }

FpMat SpectralSequence::differential(int r, int p, int q) const { return at(r, p, q).d; }

std::vector<SSPage> SpectralSequence::pages() const {
    std::vector<SSPage> out;
    const int N = top_degree();
    for (int r = 0; r <= max_page_; ++r) {
        SSPage pg;
        pg.r = r;
        pg.dim.assign(N + 1, {});
        for (int p = 0; p <= N; ++p) {
            pg.dim[p].assign(N - p + 1, 0);
            for (int q = 0; p + q <= N; ++q) pg.dim[p][q] = cell_[r][p][q].dim;
        }
        out.push_back(std::move(pg));
    }
    return out;
}

std::vector<int> SpectralSequence::abutment_dims() const {
    std::vector<int> out;
    const int N = top_degree();
    for (int n = 0; n <= audit_degree_; ++n) {
        int r_out = n >= 1 ? fp_rank(dmat_[n]) : 0;
        int r_in = n + 1 <= N ? fp_rank(dmat_[n + 1]) : 0;
        out.push_back(fc_.cx.ranks[n] - r_out - r_in);
    }
    return out;
}

bool SpectralSequence::convergence_holds() const {
    if (!stabilized()) return false;
    auto h = abutment_dims();
    const int s = stable_page();
    for (int n = 0; n <= audit_degree_; ++n) {
        int sum = 0;
        for (int p = 0; p <= n; ++p) sum += cell_[s][p][n - p].dim;
        if (sum != h[n]) return false;
    }
    return true;
}

bool SpectralSequence::page_turnover_holds() const {
    for (int r = 0; r < max_page_; ++r)
        for (int p = 0; p <= top_degree(); ++p)
            for (int q = 0; p + q <= top_degree(); ++q) {
                if (p + q > audit_degree_) continue;
                const Cell& c = cell_[r][p][q];
                int ker = c.dim - fp_rank(c.d);
                const Cell& in = at(r, p + r, q - r + 1);
                int im = fp_rank(in.d);
                if (ker - im != cell_[r + 1][p][q].dim) return false;
            }
    return true;
}

bool SpectralSequence::differentials_square_to_zero() const {
    for (int r = 0; r <= max_page_; ++r)
        for (int p = 0; p <= top_degree(); ++p)
            for (int q = 0; p + q <= top_degree(); ++q) {
                const Cell& c = cell_[r][p][q];
                const Cell& mid = at(r, p - r, q + r - 1);
                if (c.dim == 0 || mid.dim == 0 || mid.d.rows() == 0) continue;
                if (!(mid.d * c.d).is_zero()) return false;
            }
    return true;
}

FpMat SpectralSequence::edge_pi(int q) const {
    require(stabilized(), Errc::NotStabilized, "compute more pages for edge maps");
    require(max_page_ >= 2, Errc::NotStabilized, "edge maps start at page 2");
    const Cell& e2 = at(2, 0, q);
    const Cell& es = at(stable_page(), 0, q);
    FpMat m(es.dim, e2.dim, p_);
    const int denom_cols = es.dim > 0 ? es.solver->dim() - es.dim : 0;
    for (int j = 0; j < e2.dim; ++j) {
        if (es.dim == 0) break;
        bool ok = false;
        auto coords = es.solver->coords(column_of(e2.reps, j), ok);
        require(ok, Errc::BadInput, "edge projection failed");
        for (int i = 0; i < es.dim; ++i) m(i, j) = coords[denom_cols + i];
    }
    return m;
}

FpMat SpectralSequence::edge_iota(int p) const {
    require(stabilized(), Errc::NotStabilized, "compute more pages for edge maps");
    require(max_page_ >= 2, Errc::NotStabilized, "edge maps start at page 2");
    const Cell& es = at(stable_page(), p, 0);
    const Cell& e2 = at(2, p, 0);
    FpMat m(e2.dim, es.dim, p_);
    const int denom_cols = e2.dim > 0 ? e2.solver->dim() - e2.dim : 0;
    for (int j = 0; j < es.dim; ++j) {
        if (e2.dim == 0) break;
        bool ok = false;
        auto coords = e2.solver->coords(column_of(es.reps, j), ok);
        require(ok, Errc::BadInput, "edge inclusion failed");
        for (int i = 0; i < e2.dim; ++i) m(i, j) = coords[denom_cols + i];
    }
    return m;
}

std::vector<SSPage> pages(const FilteredComplex& fc, int up_to_page) {
    if (fc.cx.ring.kind == RingKind::Z) return pages_z(fc, up_to_page);
    SpectralSequence ss(fc, up_to_page);
    return ss.pages();
}

std::vector<SSPage> pages_z(const FilteredComplex& fc, int up_to_page) {
    fc.validate();
    require(fc.cx.ring.kind == RingKind::Z, Errc::RingUnsupported, "pages_z needs Z coefficients");
    require(up_to_page <= 1, Errc::RingUnsupported,
            "over Z only pages 0 and 1 are supported; use field coefficients for more");
    const int N = fc.top_degree();
    std::vector<SSPage> out;
    // positions of level-p basis vectors per degree
    auto graded = [&](int n, int p) {
        std::vector<int> idx;
        if (n < 0 || n > N) return idx;
        for (int i = 0; i < fc.cx.ranks[n]; ++i)
            if (fc.level[n][i] == p) idx.push_back(i);
        return idx;
    };
    auto graded_d = [&](int n, int p) {
        // block of d_n between level-p vectors of degrees n and n-1
        auto rows = graded(n - 1, p), cols = graded(n, p);
        SparseMat m(int(rows.size()), int(cols.size()));
        if (n < 1 || n > N) return m;
        std::vector<int> rpos(fc.cx.ranks[n - 1], -1), cpos(fc.cx.ranks[n], -1);
        for (size_t i = 0; i < rows.size(); ++i) rpos[rows[i]] = int(i);
        for (size_t j = 0; j < cols.size(); ++j) cpos[cols[j]] = int(j);
        SparseMat d = fc.cx.d[n];
        d.compact();
        for (const auto& e : d.entries())
            if (cpos[e.col] >= 0 && rpos[e.row] >= 0) m.add(rpos[e.row], cpos[e.col], e.val);
        m.compact();
        return m;
    };
    for (int r = 0; r <= up_to_page; ++r) {
        SSPage pg;
        pg.r = r;
        pg.groups.assign(N + 1, {});
        for (int p = 0; p <= N; ++p) {
            pg.groups[p].assign(N - p + 1, FinAbGroup::trivial());
            for (int q = 0; p + q <= N; ++q) {
                const int n = p + q;
                if (r == 0) {
                    pg.groups[p][q] = FinAbGroup::free_of_rank(int(graded(n, p).size()));
                } else {
                    pg.groups[p][q] =
                        homology_at(graded_d(n + 1, p), graded_d(n, p), Ring::integers());
                }
            }
        }
        out.push_back(std::move(pg));
    }
    return out;
}

TriangleReport triangle_check(const SpectralSequence& ss, int n) {
    require(ss.stabilized(), Errc::NotStabilized, "triangle check needs stabilized pages");
    require(n <= ss.audit_degree(), Errc::BadInput, "triangle degree beyond audited range");
    TriangleReport rep;
    rep.hypothesis_met = true;
    for (int total = 1; total <= n && rep.hypothesis_met; ++total)
        for (int p = 1; p <= total; ++p) {
            if (ss.dim(2, p, total - p) != 0) {
                rep.hypothesis_met = false;
                rep.offending_p = p;
                rep.offending_q = total - p;
                break;
            }
        }
    if (!rep.hypothesis_met) return rep;
    for (int q = 0; q <= n; ++q) {
        FpMat pi = ss.edge_pi(q);
        int rank = fp_rank(pi);
        TriangleVerdict v;
        v.q = q;
        v.surjective = rank == pi.rows();
        v.isomorphism = v.surjective && pi.rows() == pi.cols();
        rep.verdicts.push_back(v);
    }
    return rep;
}

DoubleSS double_filtrations(const FreeResolution& f, const EquivariantComplex& c,
                            const Ring& ring, int max_total_degree) {
    TensorComplex t = total_tensor_g(f, c, ring);
    if (max_total_degree >= 0 && max_total_degree < t.cx.top_degree()) {
        t.cx.ranks.resize(max_total_degree + 1);
        t.cx.d.resize(max_total_degree + 1);
        t.view.blocks.resize(max_total_degree + 1);
    }
    DoubleSS out;
    auto [by_p, by_q] = ghom::double_filtrations(t);
    out.total = std::move(t);
    out.by_first = std::move(by_p);
    out.by_second = std::move(by_q);
    return out;
}

AcyclicSSReport acyclic_coefficient_ss(const GroupPtr& g, const EquivariantComplex& c,
                                       int max_degree, const Ring& ring, int64_t cap) {
    require(same_group(g, c.group), Errc::GroupMismatch, "complex lives over a different group");
    require(ring.kind == RingKind::Fp, Errc::RingUnsupported,
            "acyclic-coefficient pages need field coefficients");
    require(!c.cx.augmentation.empty(), Errc::NotAcyclic, "complex carries no augmentation");
    // acyclicity over Z with H_0 recognized through the augmentation
    auto h = c.cx.homology_all();
    require(h[0] == FinAbGroup::free_of_rank(1), Errc::NotAcyclic, "H_0 is not Z");
    for (int k = 1; k + 1 <= c.top_degree(); ++k)
        require(h[k].is_trivial(), Errc::NotAcyclic,
                "H_" + std::to_string(k) + " does not vanish");

    FreeResolution f = bar_resolution(g, max_degree + 1, cap);
    DoubleSS dss = double_filtrations(f, c, ring, max_degree + 1);
    SpectralSequence ss(dss.by_second, max_degree + 3, max_degree);

    AcyclicSSReport rep;
    rep.pages = ss.pages();
    rep.total_dims = ss.abutment_dims();
    HomologyResult hg = group_homology(g, trivial_module(g, ring), max_degree, cap);
    rep.group_dims = hg.dims();

    // ε-induced comparison map out of the (k,0) blocks
    ChainComplex target = apply_coefficients(f, trivial_module(g, ring));
    const int64_t p = ring.p;
    bool all = true;
    for (int k = 0; k <= max_degree; ++k) {
        FpHomologyBasis src =
            fp_homology_basis(dss.total.cx.boundary(k + 1), dss.total.cx.boundary(k), p);
        FpHomologyBasis tgt = fp_homology_basis(target.boundary(k + 1), target.boundary(k), p);
        SparseMat phi(target.ranks[k], dss.total.cx.ranks[k]);
        if (const auto* blk = dss.total.view.find(k, k)) {
            // block (k, 0): index w·|X| + x  ->  w, coefficient ε(x) = 1
            const int m = c.cx.ranks[0];
            for (int w = 0; w < int(f.granks[k]); ++w)
                for (int x = 0; x < m; ++x) phi.add(w, blk->offset + w * m + x, 1);
        }
        phi.compact();
        FpMat phim = FpMat::from_sparse(phi, p);
        FpMat induced(tgt.dim, src.dim, p);
        for (int j = 0; j < src.dim; ++j) {
            auto img = phim.apply(column_of(src.reps, j));
            auto coords = tgt.coords(img);
            for (int i = 0; i < tgt.dim; ++i) induced(i, j) = coords[i];
        }
        bool iso = src.dim == tgt.dim && fp_rank(induced) == src.dim;
        rep.iso_per_degree.push_back(iso);
        all = all && iso && rep.total_dims[k] == rep.group_dims[k];
    }
    rep.pass = all && ss.convergence_holds() && ss.page_turnover_holds();
    return rep;
}

LhsReport lhs_e2(const GroupPtr& g, const std::vector<int>& normal_elems, const GModule& m,
                 int max_p, int max_q, int64_t cap) {
    require(same_group(g, m.group), Errc::GroupMismatch, "module lives over a different group");
    require(m.ring.kind == RingKind::Fp, Errc::RingUnsupported,
            "the E2 builder works over field coefficients");
    require(is_normal(*g, normal_elems), Errc::NotNormal, "subgroup must be normal");
    LhsReport rep;
    rep.max_p = max_p;
    rep.max_q = max_q;
    rep.e2.assign(max_p + 1, std::vector<int>(max_q + 1, 0));
    for (int q = 0; q <= max_q; ++q) {
        QuotientActionResult qa = quotient_action_on_homology(g, normal_elems, m, q, cap);
        if (q == 0) rep.quotient = qa.quotient;
        GModule coeff;
        coeff.group = qa.quotient.group;
        coeff.ring = m.ring;
        coeff.rank = qa.homology.free_rank;
        for (auto a : qa.action) {
            a.mod_inplace(m.ring.p);
            coeff.action.push_back(std::move(a));
        }
        coeff.name = "H_" + std::to_string(q) + "(H,M)";
        validate_module(coeff);
        HomologyResult hp = group_homology(qa.quotient.group, coeff, max_p, cap);
        for (int p = 0; p <= max_p; ++p) rep.e2[p][q] = hp.groups[p].free_rank;
    }
    // abutment audit on the degrees the table covers completely
    const int audit_n = std::min(max_p, max_q);
    HomologyResult hg = group_homology(g, m, audit_n, cap);
    for (int n = 0; n <= audit_n; ++n) {
        int sum = 0;
        for (int p = 0; p <= n; ++p) sum += rep.e2[p][n - p];
        rep.h_dims.push_back(hg.groups[n].free_rank);
        rep.e2_antidiagonal.push_back(sum);
        rep.collapse_consistent.push_back(sum == hg.groups[n].free_rank);
        rep.forced_differentials.push_back(sum > hg.groups[n].free_rank);
        require(sum >= hg.groups[n].free_rank, Errc::BadInput,
                "E2 antidiagonal smaller than the abutment");
    }
    // edge map ι_p: H_p(G,M) -> H_p(G/H, M_H) at chain level
    Subgroup h = subgroup_group(g, normal_elems);
    FieldCoinvariants co = field_coinvariants(m, normal_elems);
    Quotient qt = quotient_group(g, normal_elems);
    const int cdim = co.complement.cols();
    GModule mh;
    mh.group = qt.group;
    mh.ring = m.ring;
    mh.rank = cdim;
    for (int cidx = 0; cidx < qt.group->order; ++cidx) {
        FpMat amb = FpMat::from_dense(m.act(qt.reps[cidx]), m.ring.p);
        mh.action.push_back((co.proj * (amb * co.complement)).to_dense());
    }
    mh.name = "M_H";
    validate_module(mh);

    const int n_res = audit_n + 1;
    FreeResolution res_g = bar_resolution(g, n_res, cap);
    FreeResolution res_q = bar_resolution(qt.group, n_res, cap);
    ChainComplex cx_g = apply_coefficients(res_g, m);
    ChainComplex cx_q = apply_coefficients(res_q, mh);
    const int r = m.rank;
    std::vector<SparseMat> t(n_res + 1);
    for (int k = 0; k <= n_res; ++k) {
        SparseMat tk(cx_q.ranks[k], cx_g.ranks[k]);
        for (int64_t w = 0; w < res_g.granks[k]; ++w) {
            auto tup = res_g.tuple_of(w, int(k));
            std::vector<int> qtup(k);
            for (int i = 0; i < k; ++i) qtup[i] = qt.project[tup[i]];
            int64_t wq = res_q.index_of(qtup);
            for (int j = 0; j < r; ++j)
                for (int i = 0; i < cdim; ++i)
                    if (co.proj(i, j) != 0)
                        tk.add(int(wq) * cdim + i, int(w) * r + j, co.proj(i, j));
        }
        tk.compact();
        t[k] = std::move(tk);
    }
    for (int k = 1; k <= n_res; ++k) {
        SparseMat lhs = t[k - 1].multiply(cx_g.d[k]);
        SparseMat rhs = cx_q.d[k].multiply(t[k]);
        FpMat a = FpMat::from_sparse(lhs, m.ring.p), b = FpMat::from_sparse(rhs, m.ring.p);
        require(a == b, Errc::BadInput, "edge chain map fails to commute");
    }
    for (int p = 0; p <= std::min(max_p, audit_n); ++p) {
        FpHomologyBasis src = fp_homology_basis(cx_g.boundary(p + 1), cx_g.boundary(p), m.ring.p);
        FpHomologyBasis tgt = fp_homology_basis(cx_q.boundary(p + 1), cx_q.boundary(p), m.ring.p);
        FpMat tm = FpMat::from_sparse(t[p], m.ring.p);
        FpMat induced(tgt.dim, src.dim, m.ring.p);
        for (int j = 0; j < src.dim; ++j) {
            auto img = tm.apply(column_of(src.reps, j));
            auto coords = tgt.coords(img);
            for (int i = 0; i < tgt.dim; ++i) induced(i, j) = coords[i];
        }
        int rank = fp_rank(induced);
        rep.iota_ranks.push_back(rank);
        rep.iota_onto_e2.push_back(rank == rep.e2[p][0] ? 1 : 0);
    }
    return rep;
}

}  // namespace ghom
