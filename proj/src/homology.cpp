#include "ghom/homology.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "ghom/errors.hpp"
#include "ghom/kernels.hpp"

namespace ghom {

namespace {

uint64_t fnv64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string group_fingerprint(const FiniteGroup& g) {
    std::ostringstream os;
    os << g.order << ':';
    for (auto& row : g.table)
        for (int x : row) os << x << ',';
    return std::to_string(fnv64(os.str()));
}

std::string module_fingerprint(const GModule& m) {
    std::ostringstream os;
    os << m.ring.str() << ':' << m.rank << ':';
    for (auto& a : m.action)
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a(i, j) != 0) os << i << '.' << j << '.' << a(i, j) << ';';
    return std::to_string(fnv64(os.str()));
}

std::mutex g_cache_mutex;
std::unordered_map<std::string, HomologyResult> g_cache;

const HomologyResult* cache_lookup(const std::string& key) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    return it == g_cache.end() ? nullptr : &it->second;
}

void cache_store(const std::string& key, const HomologyResult& r) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.emplace(key, r);  // idempotent on collision: first writer wins
}

std::vector<int64_t> sparse_apply_mod(const SparseMat& m, const std::vector<int64_t>& v,
                                      int64_t p) {
    std::vector<int64_t> out(m.rows(), 0);
    for (const auto& e : m.entries())
        if (v[e.col] != 0) out[e.row] = mod_reduce(out[e.row] + mod_reduce(e.val, p) * v[e.col], p);
    return out;
}

std::vector<Int> sparse_apply(const SparseMat& m, const std::vector<Int>& v) {
    return m.apply(v);
}

bool sparse_equal_mod(const SparseMat& a, const SparseMat& b, const Ring& ring) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    SparseMat diff(a.rows(), a.cols());
    SparseMat ac = a, bc = b;
    ac.compact();
    bc.compact();
    for (const auto& e : ac.entries()) diff.add(e.row, e.col, e.val);
    for (const auto& e : bc.entries()) diff.add(e.row, e.col, -e.val);
    diff.compact();
    for (const auto& e : diff.entries()) {
        if (ring.kind == RingKind::Fp) {
            if (mod_reduce(e.val, ring.p) != 0) return false;
        } else if (e.val != 0) {
            return false;
        }
    }
    return true;
}

void verify_chain_map(const ChainComplex& src, const ChainComplex& tgt,
                      const std::vector<SparseMat>& t, const Ring& ring) {
    const int n = std::min(src.top_degree(), tgt.top_degree());
    for (int k = 1; k <= n; ++k) {
        SparseMat lhs = t[k - 1].multiply(src.d[k]);
        SparseMat rhs = tgt.d[k].multiply(t[k]);
        require(sparse_equal_mod(lhs, rhs, ring), Errc::BadInput,
                "chain map square fails at degree " + std::to_string(k));
    }
}

}  // namespace

void clear_homology_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

HomologyResult group_homology(const GroupPtr& g, const GModule& m, int max_degree, int64_t cap) {
    require(same_group(g, m.group), Errc::GroupMismatch, "module lives over a different group");
    std::string key = "H:" + group_fingerprint(*g) + ":" + module_fingerprint(m) + ":" +
                      std::to_string(max_degree);
    if (const HomologyResult* hit = cache_lookup(key)) return *hit;
    FreeResolution res = bar_resolution(g, max_degree + 1, cap);
    require(res.granks.back() * m.rank <= cap, Errc::TooLarge, "coefficient complex exceeds cap");
    ChainComplex cx = apply_coefficients(res, m);
    auto all = cx.homology_all();
    HomologyResult out;
    out.group = g;
    out.ring = m.ring;
    out.coeff_name = m.name;
    out.max_degree = max_degree;
    out.groups.assign(all.begin(), all.begin() + max_degree + 1);
    cache_store(key, out);
    return out;
}

HomologyResult group_cohomology(const GroupPtr& g, const GModule& m, int max_degree, int64_t cap) {
    require(same_group(g, m.group), Errc::GroupMismatch, "module lives over a different group");
    std::string key = "C:" + group_fingerprint(*g) + ":" + module_fingerprint(m) + ":" +
                      std::to_string(max_degree);
    if (const HomologyResult* hit = cache_lookup(key)) return *hit;
    FreeResolution res = bar_resolution(g, max_degree + 1, cap);
    require(res.granks.back() * m.rank <= cap, Errc::TooLarge, "coefficient complex exceeds cap");
    CochainComplex cx = apply_hom(res, m);
    HomologyResult out;
    out.group = g;
    out.ring = m.ring;
    out.coeff_name = m.name;
    out.max_degree = max_degree;
    out.cohomology = true;
    for (int k = 0; k <= max_degree; ++k) out.groups.push_back(cx.cohomology(k));
    cache_store(key, out);
    return out;
}

std::vector<int64_t> FpHomologyBasis::coords(const std::vector<int64_t>& cycle) const {
    bool ok = false;
    auto c = solver->coords(cycle, ok);
    require(ok, Errc::NotACycle, "vector is not a cycle of this degree");
    return std::vector<int64_t>(c.end() - dim, c.end());
}

FpHomologyBasis fp_homology_basis(const SparseMat& d_in, const SparseMat& d_out, int64_t p) {
    FpHomologyBasis b;
    b.p = p;
    FpMat din = FpMat::from_sparse(d_in, p);
    FpMat dout = FpMat::from_sparse(d_out, p);
    b.boundaries = fp_column_space(din);
    FpMat cycles = fp_kernel(dout);
    auto ext = fp_extend_basis(b.boundaries, cycles);
    b.reps = cycles.select_columns(ext);
    b.dim = b.reps.cols();
    b.solver = std::make_shared<FpSolver>(b.boundaries.hcat(b.reps));
    return b;
}

std::vector<Int> ZHomologyBasis::coords(const std::vector<Int>& cycle) const {
    std::vector<Int> a_full = v_inv.apply(cycle);
    const int z = int(kernel_cols.size());
    const int n = v_inv.rows();
    for (int j = 0; j < n - z; ++j)
        require(a_full[j] == 0, Errc::NotACycle, "vector is not a cycle");
    std::vector<Int> a(z);
    for (int j = 0; j < z; ++j) a[j] = a_full[kernel_cols[j]];
    std::vector<Int> c = u_y.apply(a);
    std::vector<Int> out;
    out.reserve(exposed.size());
    for (int pos : exposed) {
        Int v = c[pos];
        const Int& f = factors_full[pos];
        if (f >= 2) {
            v %= f;
            if (v < 0) v += f;
        }
        out.push_back(v);
    }
    return out;
}

ZHomologyBasis z_homology_basis(const SparseMat& d_in, const SparseMat& d_out) {
    require(d_out.cols() == d_in.rows(), Errc::ShapeMismatch, "z_homology_basis shapes");
    const int n = d_out.cols();
    SmithForm sf_out = smith_normal_form(d_out.dense());
    ZHomologyBasis b;
    b.v_inv = sf_out.V_inv;
    const int z = n - sf_out.rank;
    b.kernel_cols.resize(z);
    for (int j = 0; j < z; ++j) b.kernel_cols[j] = sf_out.rank + j;

    DenseMat a_full = sf_out.V_inv * d_in.dense();
    for (int i = 0; i < sf_out.rank; ++i)
        for (int j = 0; j < a_full.cols(); ++j)
            require(a_full(i, j) == 0, Errc::CompositionNotZero,
                    "boundaries do not land in the cycle lattice");
    DenseMat y(z, a_full.cols());
    for (int i = 0; i < z; ++i)
        for (int j = 0; j < a_full.cols(); ++j) y(i, j) = a_full(sf_out.rank + i, j);
    SmithForm sf_y = smith_normal_form(y);
    b.u_y = sf_y.U;
    b.factors_full.assign(z, Int(0));
    for (int i = 0; i < std::min(z, y.cols()); ++i) b.factors_full[i] = sf_y.D(i, i);

    // generators: columns of K · U_y^{-1} at the exposed positions
    DenseMat k(n, z);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < z; ++j) k(i, j) = sf_out.V(i, b.kernel_cols[j]);
    DenseMat gen_full = k * sf_y.U_inv;
    std::vector<Int> torsion;
    int free = 0;
    for (int j = 0; j < z; ++j) {
        const Int& f = b.factors_full[j];
        if (f == 1) continue;
        b.exposed.push_back(j);
        if (f == 0)
            ++free;
        else
            torsion.push_back(f);
    }
    b.generators = DenseMat(n, int(b.exposed.size()));
    for (size_t jj = 0; jj < b.exposed.size(); ++jj)
        for (int i = 0; i < n; ++i) b.generators(i, int(jj)) = gen_full(i, b.exposed[jj]);
    b.moduli.reserve(b.exposed.size());
    for (int pos : b.exposed) b.moduli.push_back(b.factors_full[pos]);
    b.group = FinAbGroup(free, torsion);
    return b;
}

bool ClassMapDegree::is_identity() const {
    if (matrix.rows() != matrix.cols()) return false;
    for (int i = 0; i < matrix.rows(); ++i)
        for (int j = 0; j < matrix.cols(); ++j) {
            Int diff = matrix(i, j) - (i == j ? 1 : 0);
            if (ring.kind == RingKind::Fp) {
                if (mod_reduce(diff, ring.p) != 0) return false;
            } else {
                const Int& m = tgt_moduli[i];
                if (m >= 2) {
                    if (diff % m != 0) return false;
                } else if (diff != 0) {
                    return false;
                }
            }
        }
    return true;
}

bool abelian_map_is_isomorphism(const DenseMat& a, const std::vector<Int>& src_moduli,
                                const std::vector<Int>& tgt_moduli) {
    const int st = a.rows(), ss = a.cols();
    std::vector<int> torsion_rows;
    for (int i = 0; i < st; ++i)
        if (tgt_moduli[i] >= 2) torsion_rows.push_back(i);
    const int nt = int(torsion_rows.size());
    // surjective: cokernel of [A | relations] trivial
    {
        SparseMat b(st, ss + nt);
        for (int i = 0; i < st; ++i)
            for (int j = 0; j < ss; ++j)
                if (a(i, j) != 0) b.add(i, j, a(i, j));
        for (int t = 0; t < nt; ++t) b.add(torsion_rows[t], ss + t, tgt_moduli[torsion_rows[t]]);
        b.compact();
        ZElimResult r = invariant_factors(b);
        if (r.rank != st || !r.nontrivial_factors.empty()) return false;
    }
    // injective: preimage lattice of the target relations inside the source
    {
        SparseMat c(st, ss + nt);
        for (int i = 0; i < st; ++i)
            for (int j = 0; j < ss; ++j)
                if (a(i, j) != 0) c.add(i, j, a(i, j));
        for (int t = 0; t < nt; ++t) c.add(torsion_rows[t], ss + t, -tgt_moduli[torsion_rows[t]]);
        c.compact();
        DenseMat ker = kernel_basis(c, Ring::integers());
        for (int col = 0; col < ker.cols(); ++col)
            for (int j = 0; j < ss; ++j) {
                const Int& m = src_moduli[j];
                if (m >= 2) {
                    if (ker(j, col) % m != 0) return false;
                } else if (m == 0 && ker(j, col) != 0) {
                    return false;
                }
            }
    }
    return true;
}

bool ClassMapDegree::is_isomorphism() const {
    if (ring.kind == RingKind::Fp) {
        if (matrix.rows() != matrix.cols()) return false;
        return fp_rank(FpMat::from_dense(matrix, ring.p)) == matrix.rows();
    }
    if (ring.kind == RingKind::Q) {
        if (matrix.rows() != matrix.cols()) return false;
        return sparse_z_elim(SparseMat::from_dense(matrix)).rank == matrix.rows();
    }
    // presentations must agree as groups first
    std::vector<Int> s = src_moduli, t = tgt_moduli;
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    if (s != t) return false;
    return abelian_map_is_isomorphism(matrix, src_moduli, tgt_moduli);
}

bool HomologyClassMap::all_isomorphism() const {
    for (auto& d : degrees)
        if (!d.is_isomorphism()) return false;
    return true;
}

namespace {

struct DegreeBasis {
    Ring ring;
    FpHomologyBasis fp;
    ZHomologyBasis z;
    int dim() const { return ring.kind == RingKind::Fp ? fp.dim : int(z.exposed.size()); }
    std::vector<Int> moduli() const {
        if (ring.kind != RingKind::Fp) return z.moduli;
        return std::vector<Int>(fp.dim, Int(ring.p));
    }
    FinAbGroup value() const {
        return ring.kind == RingKind::Fp ? FinAbGroup(fp.dim, {}) : z.group;
    }
};

DegreeBasis degree_basis(const ChainComplex& cx, int k) {
    DegreeBasis b;
    b.ring = cx.ring;
    if (cx.ring.kind == RingKind::Fp)
        b.fp = fp_homology_basis(cx.boundary(k + 1), cx.boundary(k), cx.ring.p);
    else if (cx.ring.kind == RingKind::Z)
        b.z = z_homology_basis(cx.boundary(k + 1), cx.boundary(k));
    else
        fail(Errc::RingUnsupported, "class maps need Z or F_p coefficients");
    return b;
}

// Matrix of the map induced on homology by the degree-k chain map `t`.
ClassMapDegree induced_degree(const SparseMat& t, const DegreeBasis& src, const DegreeBasis& tgt,
                              const Ring& ring) {
    ClassMapDegree out;
    out.ring = ring;
    out.src_moduli = src.moduli();
    out.tgt_moduli = tgt.moduli();
    out.matrix = DenseMat(tgt.dim(), src.dim());
    if (ring.kind == RingKind::Fp) {
        for (int j = 0; j < src.dim(); ++j) {
            std::vector<int64_t> rep(src.fp.reps.rows());
            for (int i = 0; i < src.fp.reps.rows(); ++i) rep[i] = src.fp.reps(i, j);
            auto mapped = sparse_apply_mod(t, rep, ring.p);
            auto c = tgt.fp.coords(mapped);
            for (int i = 0; i < tgt.dim(); ++i) out.matrix(i, j) = c[i];
        }
    } else {
        for (int j = 0; j < src.dim(); ++j) {
            std::vector<Int> rep(src.z.generators.rows());
            for (int i = 0; i < src.z.generators.rows(); ++i) rep[i] = src.z.generators(i, j);
            auto mapped = sparse_apply(t, rep);
            auto c = tgt.z.coords(mapped);
            for (int i = 0; i < tgt.dim(); ++i) out.matrix(i, j) = c[i];
        }
    }
    return out;
}

}  // namespace

HomologyClassMap shapiro_transport(const GroupPtr& g, const Subgroup& h, const GModule& m,
                                   int max_degree, int64_t cap) {
    require(same_group(m.group, h.group), Errc::GroupMismatch, "module must live over the subgroup");
    InducedData ind = induced_module_data(g, h, m);
    const int n = max_degree + 1;
    FreeResolution res_h = bar_resolution(h.group, n, cap);
    FreeResolution res_g = bar_resolution(g, n, cap);
    ChainComplex cx_h = apply_coefficients(res_h, m);
    ChainComplex cx_g = apply_coefficients(res_g, ind.module);
    const int r = m.rank;
    const int big_r = ind.module.rank;
    const int t0 = ind.coset_of[g->identity];

    std::vector<SparseMat> t(n + 1);
    for (int k = 0; k <= n; ++k) {
        SparseMat tk(cx_g.ranks[k], cx_h.ranks[k]);
        for (int64_t w = 0; w < res_h.granks[k]; ++w) {
            auto tup = res_h.tuple_of(w, k);
            std::vector<int> gtup(k);
            for (int i = 0; i < k; ++i) gtup[i] = h.embed[tup[i]];
            int64_t wg = res_g.index_of(gtup);
            for (int j = 0; j < r; ++j)
                tk.add(int(wg) * big_r + t0 * r + j, int(w) * r + j, 1);
        }
        tk.compact();
        t[k] = std::move(tk);
    }
    verify_chain_map(cx_h, cx_g, t, m.ring);

    HomologyClassMap out;
    for (int k = 0; k <= max_degree; ++k) {
        DegreeBasis src = degree_basis(cx_h, k);
        DegreeBasis tgt = degree_basis(cx_g, k);
        out.source.push_back(src.value());
        out.target.push_back(tgt.value());
        out.degrees.push_back(induced_degree(t[k], src, tgt, m.ring));
    }
    return out;
}

HomologyClassMap conjugation_action_map(const GroupPtr& g, int elt, const GModule& m,
                                        int max_degree, int64_t cap) {
    require(same_group(g, m.group), Errc::GroupMismatch, "module lives over a different group");
    require(0 <= elt && elt < g->order, Errc::BadInput, "element out of range");
    const int n = max_degree + 1;
    FreeResolution res = bar_resolution(g, n, cap);
    ChainComplex cx = apply_coefficients(res, m);
    const int r = m.rank;
    const DenseMat& rho = m.act(elt);

    std::vector<SparseMat> t(n + 1);
    for (int k = 0; k <= n; ++k) {
        SparseMat tk(cx.ranks[k], cx.ranks[k]);
        for (int64_t w = 0; w < res.granks[k]; ++w) {
            auto tup = res.tuple_of(w, k);
            for (int& y : tup) y = g->conj(elt, y);
            int64_t wc = res.index_of(tup);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (rho(i, j) != 0) tk.add(int(wc) * r + i, int(w) * r + j, rho(i, j));
        }
        tk.compact();
        t[k] = std::move(tk);
    }
    verify_chain_map(cx, cx, t, m.ring);

    HomologyClassMap out;
    for (int k = 0; k <= max_degree; ++k) {
        DegreeBasis b = degree_basis(cx, k);
        out.source.push_back(b.value());
        out.target.push_back(b.value());
        out.degrees.push_back(induced_degree(t[k], b, b, m.ring));
    }
    return out;
}

bool conjugation_identity_for_all(const GroupPtr& g, const GModule& m, int max_degree,
                                  int64_t cap) {
    require(same_group(g, m.group), Errc::GroupMismatch, "module lives over a different group");
    const int n = max_degree + 1;
    FreeResolution res = bar_resolution(g, n, cap);
    ChainComplex cx = apply_coefficients(res, m);
    std::vector<DegreeBasis> bases;
    for (int k = 0; k <= max_degree; ++k) bases.push_back(degree_basis(cx, k));
    const int r = m.rank;
    for (int elt = 0; elt < g->order; ++elt) {
        const DenseMat& rho = m.act(elt);
        for (int k = 0; k <= max_degree; ++k) {
            SparseMat tk(cx.ranks[k], cx.ranks[k]);
            for (int64_t w = 0; w < res.granks[k]; ++w) {
                auto tup = res.tuple_of(w, k);
                for (int& y : tup) y = g->conj(elt, y);
                int64_t wc = res.index_of(tup);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        if (rho(i, j) != 0) tk.add(int(wc) * r + i, int(w) * r + j, rho(i, j));
            }
            tk.compact();
            if (!induced_degree(tk, bases[k], bases[k], m.ring).is_identity()) return false;
        }
    }
    return true;
}

QuotientActionResult quotient_action_on_homology(const GroupPtr& g,
                                                 const std::vector<int>& normal_elems,
                                                 const GModule& m, int q, int64_t cap) {
    require(same_group(g, m.group), Errc::GroupMismatch, "module lives over a different group");
    require(is_normal(*g, normal_elems), Errc::NotNormal, "subgroup must be normal");
    Subgroup h = subgroup_group(g, normal_elems);
    GModule restricted = restrict_to_subgroup(h, m);
    const int n = q + 1;
    FreeResolution res = bar_resolution(h.group, n, cap);
    ChainComplex cx = apply_coefficients(res, restricted);
    DegreeBasis basis = degree_basis(cx, q);

    std::vector<int> to_sub(g->order, -1);
    for (int i = 0; i < h.group->order; ++i) to_sub[h.embed[i]] = i;
    const int r = m.rank;

    auto chain_map_for = [&](int amb) {
        std::vector<SparseMat> t(n + 1);
        const DenseMat& rho = m.act(amb);
        for (int k = 0; k <= n; ++k) {
            SparseMat tk(cx.ranks[k], cx.ranks[k]);
            for (int64_t w = 0; w < res.granks[k]; ++w) {
                auto tup = res.tuple_of(w, k);
                for (int& y : tup) {
                    int c = g->conj(amb, h.embed[y]);
                    y = to_sub[c];
                    require(y >= 0, Errc::NotNormal, "conjugation left the subgroup");
                }
                int64_t wc = res.index_of(tup);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        if (rho(i, j) != 0) tk.add(int(wc) * r + i, int(w) * r + j, rho(i, j));
            }
            tk.compact();
            t[k] = std::move(tk);
        }
        verify_chain_map(cx, cx, t, m.ring);
        return induced_degree(t[q], basis, basis, m.ring);
    };

    QuotientActionResult out;
    out.quotient = quotient_group(g, normal_elems);
    out.ring = m.ring;
    out.homology = basis.value();
    out.moduli = basis.moduli();
    for (int rep : out.quotient.reps) out.action.push_back(chain_map_for(rep).matrix);

    // every element of the subgroup must induce the identity
    for (int e : normal_elems)
        require(chain_map_for(e).is_identity(), Errc::BadInput,
                "subgroup element acts nontrivially on homology");
    // representation law on the quotient
    const int qorder = out.quotient.group->order;
    for (int a = 0; a < qorder; ++a)
        for (int b = 0; b < qorder; ++b) {
            int ab = out.quotient.group->mul(a, b);
            DenseMat prod = out.action[a] * out.action[b];
            ClassMapDegree check;
            check.ring = m.ring;
            check.matrix = DenseMat(prod.rows(), prod.cols());
            check.tgt_moduli = out.moduli;
            for (int i = 0; i < prod.rows(); ++i)
                for (int j = 0; j < prod.cols(); ++j)
                    check.matrix(i, j) = prod(i, j) - out.action[ab](i, j) + (i == j ? 1 : 0);
            require(check.is_identity(), Errc::BadInput, "quotient action is not a representation");
        }
    return out;
}

PontryaginAlgebra::PontryaginAlgebra(const GroupPtr& g, const Ring& ring, int max_degree,
                                     int64_t cap)
    : group_(g), ring_(ring), max_degree_(max_degree) {
    require(g->is_abelian(), Errc::NotAbelian, "Pontryagin product needs an abelian group");
    require(ring.kind == RingKind::Fp, Errc::RingUnsupported,
            "Pontryagin product is computed over F_p");
    res_ = bar_resolution(g, max_degree + 1, cap);
    cx_ = apply_coefficients(res_, trivial_module(g, ring));
    basis_.reserve(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k)
        basis_.push_back(fp_homology_basis(cx_.boundary(k + 1), cx_.boundary(k), ring.p));
}

std::vector<int64_t> PontryaginAlgebra::basis_cycle(int degree, int i) const {
    const auto& b = basis_[degree];
    std::vector<int64_t> out(b.reps.rows());
    for (int r = 0; r < b.reps.rows(); ++r) out[r] = b.reps(r, i);
    return out;
}

std::vector<int64_t> PontryaginAlgebra::class_coords(int degree,
                                                     const std::vector<int64_t>& cycle) const {
    require(degree >= 0 && degree <= max_degree_, Errc::DegreeOverflow, "degree out of range");
    require(int(cycle.size()) == cx_.ranks[degree], Errc::ShapeMismatch, "cycle length");
    auto dz = sparse_apply_mod(cx_.boundary(degree), cycle, ring_.p);
    for (int64_t x : dz) require(x == 0, Errc::NotACycle, "chain is not a cycle");
    return basis_[degree].coords(cycle);
}

std::vector<int64_t> PontryaginAlgebra::product_chain(int p_deg, const std::vector<int64_t>& a,
                                                      int q_deg,
                                                      const std::vector<int64_t>& b) const {
    require(p_deg + q_deg <= max_degree_, Errc::DegreeOverflow, "product degree exceeds range");
    const int64_t p = ring_.p;
    const int n = p_deg + q_deg;
    const FiniteGroup& g = *group_;

    // letters of the normalized tuple: successive quotients
    auto to_letters = [&](const std::vector<int>& tup) {
        std::vector<int> letters(tup.size());
        int prev = g.identity;
        for (size_t i = 0; i < tup.size(); ++i) {
            letters[i] = g.mul(g.inv(prev), tup[i]);
            prev = tup[i];
        }
        return letters;
    };
    auto from_letters = [&](const std::vector<int>& letters) {
        std::vector<int> tup(letters.size());
        int acc = g.identity;
        for (size_t i = 0; i < letters.size(); ++i) {
            acc = g.mul(acc, letters[i]);
            tup[i] = acc;
        }
        return tup;
    };

    std::vector<int64_t> out(cx_.ranks[n], 0);
    // position subsets for the first factor, in lexicographic order
    std::vector<int> comb(p_deg);
    for (int i = 0; i < p_deg; ++i) comb[i] = i;
    auto advance = [&]() {
        int i = p_deg - 1;
        while (i >= 0 && comb[i] == n - p_deg + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < p_deg; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };

    for (int64_t wa = 0; wa < int64_t(res_.granks[p_deg]); ++wa) {
        if (a[wa] == 0) continue;
        auto la = to_letters(res_.tuple_of(wa, p_deg));
        for (int64_t wb = 0; wb < int64_t(res_.granks[q_deg]); ++wb) {
            if (b[wb] == 0) continue;
            auto lb = to_letters(res_.tuple_of(wb, q_deg));
            int64_t coeff = mod_reduce(a[wa] * b[wb], p);
            if (p_deg > 0)
                for (int i = 0; i < p_deg; ++i) comb[i] = i;
            bool more = true;
            while (more) {
                int inversions = 0;
                std::vector<int> letters(n);
                std::vector<char> taken(n, 0);
                for (int i = 0; i < p_deg; ++i) {
                    letters[comb[i]] = la[i];
                    taken[comb[i]] = 1;
                    inversions += comb[i] - i;
                }
                int bi = 0;
                for (int pos = 0; pos < n; ++pos)
                    if (!taken[pos]) letters[pos] = lb[bi++];
                int64_t sign = inversions % 2 == 0 ? 1 : p - 1;
                int64_t idx = res_.index_of(from_letters(letters));
                out[idx] = mod_reduce(out[idx] + coeff * sign, p);
                more = p_deg > 0 && advance();
            }
        }
    }
    return out;
}

std::vector<int64_t> PontryaginAlgebra::product_coords(int p_deg, const std::vector<int64_t>& a,
                                                       int q_deg,
                                                       const std::vector<int64_t>& b) const {
    // inputs must be cycles
    class_coords(p_deg, a);
    class_coords(q_deg, b);
    return class_coords(p_deg + q_deg, product_chain(p_deg, a, q_deg, b));
}

UctReport uct_compare(const GroupPtr& g, int64_t p, int max_degree, int64_t cap) {
    require(is_prime(p), Errc::BadInput, "p must be prime");
    HomologyResult hz = group_homology(g, trivial_module(g, Ring::integers()), max_degree, cap);
    HomologyResult hp = group_homology(g, trivial_module(g, Ring::mod(p)), max_degree, cap);
    UctReport out;
    out.p = p;
    for (int q = 0; q <= max_degree; ++q) {
        UctDegreeReport d;
        d.degree = q;
        d.fp_dim = hp.groups[q].free_rank;
        d.expected = hz.groups[q].free_rank + hz.groups[q].torsion_count_divisible_by(p) +
                     (q >= 1 ? hz.groups[q - 1].torsion_count_divisible_by(p) : 0);
        d.pass = d.fp_dim == d.expected;
        out.degrees.push_back(d);
    }
    return out;
}

}  // namespace ghom
