#include "ghom/stability.hpp"

#include <set>

#include "ghom/errors.hpp"
#include "ghom/gmodule.hpp"
#include "ghom/smith.hpp"

namespace ghom {

VectorOrbitComplex vector_orbit_complex(int n, int64_t q, int max_degree, int64_t cap) {
    VectorOrbitComplex voc;
    voc.gl = general_linear_group(n + 1, q);
    voc.base = nonzero_vector_action(voc.gl);
    voc.complex = ordered_simplicial(voc.base, max_degree, cap);
    validate_equivariant(voc.complex, /*check_acyclic=*/true);
    return voc;
}

int simplex_dimension(const VectorOrbitComplex& voc, int degree, int64_t tuple_index) {
    auto tup = voc.complex.tuple_of(tuple_index, degree);
    const auto& space = voc.gl.space;
    FpMat m(space.n, int(tup.size()), space.q);
    for (size_t j = 0; j < tup.size(); ++j) {
        auto v = space.coords(tup[j] + 1);  // +1 skips the zero vector
        for (int i = 0; i < space.n; ++i) m(i, int(j)) = v[i];
    }
    return fp_rank(m);
}

int chain_dimension(const VectorOrbitComplex& voc, int degree, const Chain& chain) {
    int best = 0;
    for (auto& [idx, coeff] : chain)
        if (coeff != 0) best = std::max(best, simplex_dimension(voc, degree, idx));
    return best;
}

FilteredComplex dimension_filtration(const VectorOrbitComplex& voc) {
    FilteredComplex fc;
    fc.cx = voc.complex.cx;
    const int top = voc.complex.top_degree();
    fc.level.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        fc.level[p].resize(fc.cx.ranks[p]);
        for (int64_t t = 0; t < fc.cx.ranks[p]; ++t)
            fc.level[p][t] = simplex_dimension(voc, p, t) - 1;
    }
    fc.validate();
    return fc;
}

OrbitRowComplex orbit_row_complex(const VectorOrbitComplex& voc) {
    OrbitRowComplex row;
    const int top = voc.complex.top_degree();
    row.cx.ring = Ring::integers();
    row.orbits.reserve(top + 1);
    for (int p = 0; p <= top; ++p) {
        Orbits o = orbit_decompose(voc.complex.degree_action[p]);
        row.cx.ranks.push_back(int(o.reps.size()));
        row.rep_tuples.push_back(std::vector<int64_t>(o.reps.begin(), o.reps.end()));
        std::vector<int> dims;
        for (int rep : o.reps) dims.push_back(simplex_dimension(voc, p, rep));
        row.span_dims.push_back(std::move(dims));
        row.orbits.push_back(std::move(o));
    }
    row.cx.d.resize(top + 1);
    row.cx.d[0] = SparseMat(0, row.cx.ranks[0]);
    for (int p = 1; p <= top; ++p) {
        SparseMat d(row.cx.ranks[p - 1], row.cx.ranks[p]);
        for (int c = 0; c < row.cx.ranks[p]; ++c) {
            Chain simplex{{row.rep_tuples[p][c], Int(1)}};
            for (auto& [face, coeff] : boundary_chain(voc.complex, simplex, p))
                d.add(row.orbits[p - 1].orbit_of[face], c, coeff);
        }
        d.compact();
        row.cx.d[p] = std::move(d);
    }
    row.cx.validate();  // includes the induced d∘d = 0 check
    // orbit labels (with span dimensions for reading the filtration)
    row.cx.labels.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        for (int c = 0; c < row.cx.ranks[p]; ++c) {
            std::string base = voc.complex.cx.labels.empty()
                                   ? std::to_string(row.rep_tuples[p][c])
                                   : voc.complex.cx.labels[p][row.rep_tuples[p][c]];
            row.cx.labels[p].push_back("[" + base + "]|dim=" +
                                       std::to_string(row.span_dims[p][c]));
        }
    }
    return row;
}

RowFiltrationReport row_filtration_homology(int n, int64_t q, int k, int max_degree,
                                            int64_t cap) {
    require(k >= 0, Errc::BadInput, "filtration index must be non-negative");
    VectorOrbitComplex voc = vector_orbit_complex(n, q, max_degree + 1, cap);
    OrbitRowComplex row = orbit_row_complex(voc);
    const int top = voc.complex.top_degree();

    // dimension-truncated orbit complex: orbits with |c| <= k+1
    ChainComplex trunc;
    trunc.ring = Ring::integers();
    std::vector<std::vector<int>> keep(top + 1);
    std::vector<std::vector<int>> pos(top + 1);
    for (int p = 0; p <= top; ++p) {
        pos[p].assign(row.cx.ranks[p], -1);
        for (int c = 0; c < row.cx.ranks[p]; ++c)
            if (row.span_dims[p][c] <= k + 1) {
                pos[p][c] = int(keep[p].size());
                keep[p].push_back(c);
            }
        trunc.ranks.push_back(int(keep[p].size()));
    }
    trunc.d.resize(top + 1);
    trunc.d[0] = SparseMat(0, trunc.ranks[0]);
    for (int p = 1; p <= top; ++p) {
        SparseMat d(trunc.ranks[p - 1], trunc.ranks[p]);
        SparseMat full = row.cx.d[p];
        full.compact();
        for (const auto& e : full.entries())
            if (pos[p][e.col] >= 0) {
                require(pos[p - 1][e.row] >= 0, Errc::BadInput,
                        "differential raised the span dimension");
                d.add(pos[p - 1][e.row], pos[p][e.col], e.val);
            }
        d.compact();
        trunc.d[p] = std::move(d);
    }
    trunc.validate();

    RowFiltrationReport rep;
    rep.k = k;
    auto all = trunc.homology_all();
    rep.homology.assign(all.begin(), all.begin() + max_degree + 1);

    // Oracle route: coinvariants of the unquotiented filtered subcomplex,
    // with its own breadth-first orbit scan. Every kept tuple is pushed
    // through the differential and the quotient square is checked exactly,
    // so the engine's representative-only assembly is genuinely re-derived.
    {
        auto bfs_labels = [](const GroupAction& a) {
            std::vector<int> label(a.set_size, -1);
            for (int s = 0; s < a.set_size; ++s) {
                if (label[s] >= 0) continue;
                std::vector<int> stack{s};
                label[s] = s;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (int e = 0; e < a.group->order; ++e) {
                        int y = a.perm[e][x];
                        if (label[y] < 0) {
                            label[y] = s;
                            stack.push_back(y);
                        }
                    }
                }
            }
            return label;
        };
        ChainComplex co;
        co.ring = Ring::integers();
        std::vector<std::vector<int64_t>> kept_tuples(top + 1);
        std::vector<std::vector<int>> tuple_pos(top + 1);
        std::vector<std::vector<int>> labels(top + 1);
        std::vector<std::vector<int>> orb_pos(top + 1);  // rep tuple -> compact index
        for (int p = 0; p <= top; ++p) {
            tuple_pos[p].assign(voc.complex.cx.ranks[p], -1);
            for (int64_t t = 0; t < voc.complex.cx.ranks[p]; ++t)
                if (simplex_dimension(voc, p, t) <= k + 1) {
                    tuple_pos[p][t] = int(kept_tuples[p].size());
                    kept_tuples[p].push_back(t);
                }
            labels[p] = bfs_labels(voc.complex.degree_action[p]);
            orb_pos[p].assign(voc.complex.cx.ranks[p], -1);
            int count = 0;
            for (int64_t t = 0; t < voc.complex.cx.ranks[p]; ++t)
                if (tuple_pos[p][t] >= 0 && labels[p][t] == t) orb_pos[p][t] = count++;
            co.ranks.push_back(count);
        }
        co.d.resize(top + 1);
        co.d[0] = SparseMat(0, co.ranks[0]);
        for (int p = 1; p <= top; ++p) {
            SparseMat d(co.ranks[p - 1], co.ranks[p]);
            std::vector<char> seen(co.ranks[p], 0);
            std::vector<std::map<int, Int>> columns(co.ranks[p]);
            for (int64_t t : kept_tuples[p]) {
                int cpos = orb_pos[p][labels[p][t]];
                require(cpos >= 0, Errc::BadInput, "orbit misses the filtered piece");
                Chain simplex{{t, Int(1)}};
                std::map<int, Int> col;
                for (auto& [face, coeff] : boundary_chain(voc.complex, simplex, p)) {
                    require(tuple_pos[p - 1][face] >= 0, Errc::BadInput,
                            "face left the filtered piece");
                    col[orb_pos[p - 1][labels[p - 1][face]]] += coeff;
                }
                for (auto it = col.begin(); it != col.end();)
                    it = it->second == 0 ? col.erase(it) : std::next(it);
                if (!seen[cpos]) {
                    seen[cpos] = 1;
                    columns[cpos] = col;
                } else {
                    require(columns[cpos] == col, Errc::BadInput,
                            "orbit differential is not well defined");
                }
            }
            for (int c = 0; c < co.ranks[p]; ++c)
                for (auto& [r, v] : columns[c]) d.add(r, c, v);
            d.compact();
            co.d[p] = std::move(d);
        }
        co.validate();
        auto oracle_all = co.homology_all();
        rep.oracle.assign(oracle_all.begin(), oracle_all.begin() + max_degree + 1);
    }
    rep.routes_agree = rep.homology == rep.oracle;

    rep.acyclicity_bound = std::min(k, max_degree);
    rep.k_acyclic = rep.homology[0] == FinAbGroup::free_of_rank(1);
    for (int l = 1; l <= rep.acyclicity_bound; ++l)
        rep.k_acyclic = rep.k_acyclic && rep.homology[l].is_trivial();
    return rep;
}

E1StructureReport e1_structure_check(int n, int64_t q, int p_deg, int max_q, int64_t cap) {
    VectorOrbitComplex voc = vector_orbit_complex(n, q, std::max(p_deg, 1), cap);
    const GroupPtr& g = voc.gl.group;
    Orbits orbits = orbit_decompose(voc.complex.degree_action[p_deg]);

    E1StructureReport rep;
    rep.p = p_deg;
    rep.direct_sum_dims.assign(max_q + 1, 0);

    for (size_t oi = 0; oi < orbits.reps.size(); ++oi) {
        StabilizerLine line;
        line.orbit = int(oi);
        line.rep_tuple = orbits.reps[oi];
        line.span_dim = simplex_dimension(voc, p_deg, orbits.reps[oi]);
        std::vector<int> stab = stabilizer(voc.complex.degree_action[p_deg], int(orbits.reps[oi]));
        line.stabilizer_order = int(stab.size());
        Subgroup sub = subgroup_group(g, stab);
        GModule triv_h = trivial_module(sub.group, Ring::integers());
        HomologyClassMap transport = shapiro_transport(g, sub, triv_h, max_q, cap);
        line.stab_homology = transport.source;
        line.ambient_homology = transport.target;
        line.shapiro_agrees =
            transport.source == transport.target && transport.all_isomorphism();

        // the smaller general linear group GL_{(n+1)-|c|}; informational only,
        // the identification needs an infinite centre
        int smaller = (n + 1) - line.span_dim;
        GroupPtr small_g =
            smaller >= 1 ? general_linear_group(smaller, q).group : cyclic_group(1);
        HomologyResult small_h =
            group_homology(small_g, trivial_module(small_g, Ring::integers()), max_q, cap);
        line.smaller_gl = small_h.groups;
        line.smaller_gl_matches = line.smaller_gl == line.stab_homology;

        for (int j = 0; j <= max_q; ++j)
            rep.direct_sum_dims[j] += line.stab_homology[j].free_rank;
        rep.lines.push_back(std::move(line));
    }

    // E^1_{p,q} = H_q(G, C_p) with the permutation coefficients on X^{p+1}
    GModule perm = permutation_module(voc.complex.degree_action[p_deg], Ring::integers());
    HomologyResult e1 = group_homology(g, perm, max_q, cap);
    rep.e1_column = e1.groups;

    rep.decomposition_agrees = true;
    for (int j = 0; j <= max_q; ++j) {
        FinAbGroup sum = FinAbGroup::trivial();
        for (auto& line : rep.lines) sum = direct_sum(sum, line.stab_homology[j]);
        if (sum != rep.e1_column[j]) rep.decomposition_agrees = false;
    }
    return rep;
}

int64_t min_weight_modular(int64_t p, int m) {
    require(is_prime(p), Errc::BadInput, "p must be prime");
    require(m >= 1, Errc::BadInput, "m must be positive");
    Int modulus = 1;
    for (int i = 0; i < m; ++i) modulus *= p;
    modulus -= 1;
    std::vector<Int> pw(m);
    pw[0] = 1;
    for (int i = 1; i < m; ++i) pw[i] = pw[i - 1] * p;
    const int64_t bound = p * m;  // sufficient window: minima live below p per slot
    std::vector<int64_t> n_j(m, 0);
    int64_t best = -1;
    while (true) {
        int64_t weight = 0;
        Int value = 0;
        bool nonzero = false;
        for (int i = 0; i < m; ++i) {
            weight += n_j[i];
            value += pw[i] * n_j[i];
            nonzero = nonzero || n_j[i] > 0;
        }
        if (nonzero && (modulus == 0 || value % modulus == 0))
            if (best < 0 || weight < best) best = weight;
        int i = 0;
        while (i < m && n_j[i] == bound - 1) {
            n_j[i] = 0;
            ++i;
        }
        if (i == m) break;
        ++n_j[i];
    }
    return best;
}

BottomRowZeroReport bottom_row_d1_zero(int n, int64_t q, int64_t cap) {
    VectorOrbitComplex voc = vector_orbit_complex(n, q, 1, cap);
    OrbitRowComplex row = orbit_row_complex(voc);
    BottomRowZeroReport rep;
    rep.pair_orbits = row.cx.ranks[1];
    rep.d1_zero = row.cx.d[1].is_zero();
    const auto& space = voc.gl.space;
    for (int c = 0; c < row.cx.ranks[1]; ++c) {
        auto tup = voc.complex.tuple_of(row.rep_tuples[1][c], 1);
        std::vector<int64_t> v = space.coords(tup[0] + 1);
        std::vector<int64_t> w = space.coords(tup[1] + 1);
        try {
            FpMat sigma = gl_mapping_witness({v}, {w}, space);
            auto img = sigma.apply(v);
            if (img != w) rep.witnesses_found = false;
        } catch (const Error&) {
            rep.witnesses_found = false;
        }
    }
    return rep;
}

BoundaryIdentityReport boundary_identity_check(int n, int64_t q, int64_t cap) {
    require(n >= 1, Errc::BadInput, "need at least a plane for an independent pair");
    VectorOrbitComplex voc = vector_orbit_complex(n, q, 2, cap);
    OrbitRowComplex row = orbit_row_complex(voc);
    const auto& space = voc.gl.space;
    // v0 = e1, v1 = e2
    std::vector<int64_t> e1(space.n, 0), e2(space.n, 0);
    e1[0] = 1;
    e2[1] = 1;
    std::vector<int64_t> sum(space.n, 0);
    sum[0] = 1;
    sum[1] = 1;
    auto pt = [&](const std::vector<int64_t>& v) { return int(space.index(v) - 1); };
    BoundaryIdentityReport rep;
    rep.checked = true;
    int64_t c_idx = voc.complex.index_of({pt(e1), pt(e2)});
    int64_t joined = voc.complex.index_of({pt(sum), pt(e1), pt(e2)});
    int64_t a_idx = voc.complex.index_of({pt(sum), pt(e2)});
    int64_t b_idx = voc.complex.index_of({pt(sum), pt(e1)});
    rep.last_two_cancel =
        row.orbits[1].orbit_of[a_idx] == row.orbits[1].orbit_of[b_idx];
    // ∂[joined] on orbit labels
    std::map<int, Int> dd;
    Chain simplex{{joined, Int(1)}};
    for (auto& [face, coeff] : boundary_chain(voc.complex, simplex, 2))
        dd[row.orbits[1].orbit_of[face]] += coeff;
    for (auto it = dd.begin(); it != dd.end();)
        it = it->second == 0 ? dd.erase(it) : std::next(it);
    std::map<int, Int> expect{{row.orbits[1].orbit_of[c_idx], Int(1)}};
    rep.equals_class = dd == expect;
    return rep;
}

}  // namespace ghom
