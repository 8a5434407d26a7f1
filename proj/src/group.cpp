#include "ghom/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ghom/errors.hpp"
#include "ghom/kernels.hpp"

namespace ghom {

GroupPtr group_from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                          std::string name) {
    const int n = int(table.size());
    require(n > 0, Errc::BadInput, "empty table");
    for (auto& row : table) {
        require(int(row.size()) == n, Errc::BadInput, "table not square");
        for (int x : row) require(0 <= x && x < n, Errc::BadInput, "table entry out of range");
    }
    // Latin square: every row and column is a permutation
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int j = 0; j < n; ++j) {
            if (seen_row[table[i][j]]) fail(Errc::NotLatinSquare, "duplicate in row " + std::to_string(i));
            seen_row[table[i][j]] = 1;
            if (seen_col[table[j][i]]) fail(Errc::NotLatinSquare, "duplicate in column " + std::to_string(i));
            seen_col[table[j][i]] = 1;
        }
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) fail(Errc::NoIdentity, "no two-sided identity element");
    // associativity: exhaustive for small orders, sampled above
    auto check3 = [&](int a, int b, int c) {
        if (table[table[a][b]][c] != table[a][table[b][c]])
            fail(Errc::NotAssociative,
                 "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check3(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int t = 0; t < 20000; ++t) check3(d(rng), d(rng), d(rng));
    }
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->table = std::move(table);
    g->identity = identity;
    g->inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g->table[a][b] == identity) g->inverse[a] = b;
    for (int a = 0; a < n; ++a) {
        require(g->inverse[a] >= 0, Errc::NotLatinSquare, "missing inverse");
        require(g->table[g->inverse[a]][a] == identity, Errc::NotAssociative,
                "one-sided inverse");
    }
    g->labels = std::move(labels);
    g->name = std::move(name);
    return g;
}

GroupPtr cyclic_group(int n) {
    require(n >= 1, Errc::BadInput, "cyclic order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return group_from_table(std::move(t), std::move(labels), "Z/" + std::to_string(n));
}

GroupPtr symmetric_group(int n) {
    require(n >= 1 && n <= 6, Errc::TooLarge, "symmetric group degree out of supported range");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = int(i);
    const int m = int(perms.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) {
        std::string s;
        for (int x : perms[a]) s += std::to_string(x);
        labels[a] = s;
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index[c];
        }
    }
    return group_from_table(std::move(t), std::move(labels), "S_" + std::to_string(n));
}

GroupPtr dihedral_group(int n) {
    require(n >= 1, Errc::BadInput, "dihedral parameter must be positive");
    const int m = 2 * n;
    auto idx = [n](int rot, int flip) { return rot + n * flip; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int r1 = 0; r1 < n; ++r1)
        for (int f1 = 0; f1 < 2; ++f1) {
            labels[idx(r1, f1)] = (f1 ? "sr" : "r") + std::to_string(r1);
            for (int r2 = 0; r2 < n; ++r2)
                for (int f2 = 0; f2 < 2; ++f2) {
                    int rot = f1 == 0 ? (r1 + r2) % n : ((r1 - r2) % n + n) % n;
                    t[idx(r1, f1)][idx(r2, f2)] = idx(rot, f1 ^ f2);
                }
        }
    return group_from_table(std::move(t), std::move(labels), "D_" + std::to_string(n));
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
    const int n = a->order * b->order;
    auto idx = [&](int x, int y) { return x * b->order + y; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int x1 = 0; x1 < a->order; ++x1)
        for (int y1 = 0; y1 < b->order; ++y1) {
            labels[idx(x1, y1)] = "(" + a->label(x1) + "," + b->label(y1) + ")";
            for (int x2 = 0; x2 < a->order; ++x2)
                for (int y2 = 0; y2 < b->order; ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a->mul(x1, x2), b->mul(y1, y2));
        }
    return group_from_table(std::move(t), std::move(labels), a->name + "x" + b->name);
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> elems{g.identity};
    std::vector<int> frontier{g.identity};
    for (int x : gens)
        if (elems.insert(x).second) frontier.push_back(x);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y : gens) {
                int z = g.mul(x, y);
                if (elems.insert(z).second) next.push_back(z);
                z = g.mul(y, x);
                if (elems.insert(z).second) next.push_back(z);
            }
        frontier = std::move(next);
    }
    return std::vector<int>(elems.begin(), elems.end());
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    if (elems.empty()) return false;
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(g.identity)) return false;
    for (int a : s) {
        if (!s.count(g.inv(a))) return false;
        for (int b : s)
            if (!s.count(g.mul(a, b))) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& elems) {
    if (!is_subgroup(g, elems)) return false;
    std::set<int> s(elems.begin(), elems.end());
    for (int x : s)
        for (int h = 0; h < g.order; ++h)
            if (!s.count(g.conj(h, x))) return false;
    return true;
}

Subgroup subgroup_group(const GroupPtr& g, std::vector<int> elems, std::string name) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    require(is_subgroup(*g, elems), Errc::NotASubgroup, "element set is not a subgroup");
    const int m = int(elems.size());
    std::vector<int> to_sub(g->order, -1);
    for (int i = 0; i < m; ++i) to_sub[elems[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = g->label(elems[i]);
        for (int j = 0; j < m; ++j) t[i][j] = to_sub[g->mul(elems[i], elems[j])];
    }
    return {group_from_table(std::move(t), std::move(labels),
                             name.empty() ? "sub(" + g->name + ")" : name),
            std::move(elems)};
}

Quotient quotient_group(const GroupPtr& g, const std::vector<int>& normal_elems) {
    require(is_normal(*g, normal_elems), Errc::NotNormal, "subgroup is not normal");
    std::set<int> h(normal_elems.begin(), normal_elems.end());
    std::vector<int> coset(g->order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g->order; ++x) {
        if (coset[x] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(x);
        for (int e : h) coset[g->mul(x, e)] = id;
    }
    reps[coset[g->identity]] = g->identity;
    const int m = int(reps.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = g->label(reps[i]) + "H";
        for (int j = 0; j < m; ++j) t[i][j] = coset[g->mul(reps[i], reps[j])];
    }
    return {group_from_table(std::move(t), std::move(labels), g->name + "/H"), std::move(coset),
            std::move(reps)};
}

namespace {

FinAbGroup abelian_invariants(GroupPtr q) {
    std::vector<Int> factors;
    while (q->order > 1) {
        int best = -1, best_ord = 0;
        for (int x = 0; x < q->order; ++x) {
            int o = q->element_order(x);
            if (o > best_ord) {
                best_ord = o;
                best = x;
            }
        }
        factors.push_back(best_ord);
        std::vector<int> cyc;
        int x = q->identity;
        do {
            cyc.push_back(x);
            x = q->mul(x, best);
        } while (x != q->identity);
        q = quotient_group(q, cyc).group;
    }
    std::sort(factors.begin(), factors.end());
    factors.erase(std::remove(factors.begin(), factors.end(), Int(1)), factors.end());
    return FinAbGroup(0, std::move(factors));
}

}  // namespace

FinAbGroup abelianization(const FiniteGroup& g) {
    std::vector<int> comms;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    std::vector<int> derived = subgroup_closure(g, comms);
    auto self = std::make_shared<FiniteGroup>(g);
    return abelian_invariants(quotient_group(self, derived).group);
}

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> closure{g.identity};
    while (int(closure.size()) < g.order) {
        std::set<int> have(closure.begin(), closure.end());
        for (int x = 0; x < g.order; ++x)
            if (!have.count(x)) {
                gens.push_back(x);
                break;
            }
        closure = subgroup_closure(g, gens);
    }
    return gens;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& map) {
    if (int(map.size()) != src.order) return false;
    for (int x : map)
        if (x < 0 || x >= dst.order) return false;
    for (int a = 0; a < src.order; ++a)
        for (int b = 0; b < src.order; ++b)
            if (map[src.mul(a, b)] != dst.mul(map[a], map[b])) return false;
    return true;
}

GroupAction regular_action(const GroupPtr& g) {
    GroupAction a;
    a.group = g;
    a.set_size = g->order;
    a.perm = g->table;
    a.point_labels.resize(g->order);
    for (int x = 0; x < g->order; ++x) a.point_labels[x] = g->label(x);
    return a;
}

GroupAction trivial_action(const GroupPtr& g, int set_size) {
    GroupAction a;
    a.group = g;
    a.set_size = set_size;
    std::vector<int> id(set_size);
    std::iota(id.begin(), id.end(), 0);
    a.perm.assign(g->order, id);
    return a;
}

GroupAction coset_action(const GroupPtr& g, const std::vector<int>& subgroup_elems) {
    require(is_subgroup(*g, subgroup_elems), Errc::NotASubgroup, "coset_action needs a subgroup");
    std::vector<int> coset(g->order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g->order; ++x) {
        if (coset[x] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(x);
        for (int h : subgroup_elems) coset[g->mul(x, h)] = id;
    }
    GroupAction a;
    a.group = g;
    a.set_size = int(reps.size());
    a.perm.assign(g->order, std::vector<int>(a.set_size));
    for (int e = 0; e < g->order; ++e)
        for (int c = 0; c < a.set_size; ++c) a.perm[e][c] = coset[g->mul(e, reps[c])];
    a.point_labels.resize(a.set_size);
    for (int c = 0; c < a.set_size; ++c) a.point_labels[c] = g->label(reps[c]) + "H";
    return a;
}

GroupAction tuple_action(const GroupAction& base, int p, int64_t cap) {
    int64_t count = 1;
    for (int i = 0; i <= p; ++i) {
        count *= base.set_size;
        require(count <= cap, Errc::TooLarge, "tuple space exceeds cap");
    }
    const int n = int(count);
    const int m = base.set_size;
    GroupAction a;
    a.group = base.group;
    a.set_size = n;
    a.perm.assign(base.group->order, std::vector<int>(n));
    for (int e = 0; e < base.group->order; ++e) {
        auto& out = a.perm[e];
        const auto& pe = base.perm[e];
        kern::parallel_for(n, [&](int t) {
            int rest = t, image = 0;
            int64_t mult = 1;
            // digits from least significant (last tuple slot) upward
            for (int i = 0; i <= p; ++i) {
                int digit = rest % m;
                rest /= m;
                image += int(pe[digit] * mult);
                mult *= m;
            }
            out[t] = image;
        });
    }
    if (!base.point_labels.empty()) {
        a.point_labels.resize(n);
        for (int t = 0; t < n; ++t) {
            int rest = t;
            std::vector<int> digits(p + 1);
            for (int i = p; i >= 0; --i) {
                digits[i] = rest % m;
                rest /= m;
            }
            std::string s = "(";
            for (int i = 0; i <= p; ++i) s += (i ? "," : "") + base.point_labels[digits[i]];
            a.point_labels[t] = s + ")";
        }
    }
    return a;
}

void validate_action(const GroupAction& a) {
    const FiniteGroup& g = *a.group;
    for (int x = 0; x < a.set_size; ++x)
        require(a.perm[g.identity][x] == x, Errc::BadInput, "identity must act trivially");
    for (int e = 0; e < g.order; ++e) {
        std::vector<char> seen(a.set_size, 0);
        for (int x = 0; x < a.set_size; ++x) {
            int y = a.perm[e][x];
            require(0 <= y && y < a.set_size && !seen[y], Errc::BadInput, "action not bijective");
            seen[y] = 1;
        }
    }
    for (int e = 0; e < g.order; ++e)
        for (int f = 0; f < g.order; ++f)
            for (int x = 0; x < a.set_size; ++x)
                require(a.perm[g.mul(e, f)][x] == a.perm[e][a.perm[f][x]], Errc::BadInput,
                        "action is not a homomorphism");
}

Orbits orbit_decompose(const GroupAction& a) {
    std::vector<int> gen_idx = generating_set(*a.group);
    std::vector<std::vector<int>> gens;
    for (int g : gen_idx) gens.push_back(a.perm[g]);
    Orbits o;
    o.label = kern::orbit_labels(a.set_size, gens);
    for (int x = 0; x < a.set_size; ++x)
        if (o.label[x] == x) o.reps.push_back(x);
    std::vector<int> ordinal(a.set_size, -1);
    for (size_t i = 0; i < o.reps.size(); ++i) ordinal[o.reps[i]] = int(i);
    o.orbit_of.resize(a.set_size);
    o.sizes.assign(o.reps.size(), 0);
    for (int x = 0; x < a.set_size; ++x) {
        o.orbit_of[x] = ordinal[o.label[x]];
        ++o.sizes[o.orbit_of[x]];
    }
    return o;
}

std::vector<int> stabilizer(const GroupAction& a, int point) {
    std::vector<int> out;
    for (int e = 0; e < a.group->order; ++e)
        if (a.perm[e][point] == point) out.push_back(e);
    return out;
}

std::vector<int64_t> VectorSpaceOverFq::coords(int64_t index) const {
    std::vector<int64_t> v(n);
    for (int i = n - 1; i >= 0; --i) {
        v[i] = index % q;
        index /= q;
    }
    return v;
}

int64_t VectorSpaceOverFq::index(const std::vector<int64_t>& v) const {
    int64_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * q + mod_reduce(v[i], q);
    return idx;
}

std::string VectorSpaceOverFq::label(int64_t index) const {
    auto v = coords(index);
    std::string s = "[";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

LinearGroup general_linear_group(int n, int64_t q, int64_t order_cap) {
    require(is_prime(q), Errc::BadInput, "q must be prime");
    require(n >= 1, Errc::BadInput, "dimension must be positive");
    Int order = 1;
    Int qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    Int qi = 1;
    for (int i = 0; i < n; ++i) {
        order *= (qn - qi);
        qi *= q;
    }
    require(order <= order_cap, Errc::TooLarge,
            "|GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")| = " + order.str() +
                " exceeds cap " + std::to_string(order_cap));

    VectorSpaceOverFq space{q, n};
    // enumerate all matrices lexicographically, keep the invertible ones
    int64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    std::vector<FpMat> mats;
    std::vector<std::vector<int64_t>> keys;
    for (int64_t code = 0; code < total; ++code) {
        FpMat m(n, n, q);
        int64_t rest = code;
        std::vector<int64_t> key(n * n);
        for (int pos = n * n - 1; pos >= 0; --pos) {
            key[pos] = rest % q;
            rest /= q;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = key[i * n + j];
        if (fp_rank(m) == n) {
            mats.push_back(m);
            keys.push_back(key);
        }
    }
    std::map<std::vector<int64_t>, int> index;
    for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = int(i);
    const int m = int(mats.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) {
        std::string s = "[";
        for (int i = 0; i < n; ++i) {
            s += i ? ";" : "";
            for (int j = 0; j < n; ++j) s += (j ? "," : "") + std::to_string(mats[a](i, j));
        }
        labels[a] = s + "]";
        for (int b = 0; b < m; ++b) {
            FpMat prod = mats[a] * mats[b];
            std::vector<int64_t> key(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) key[i * n + j] = prod(i, j);
            t[a][b] = index.at(key);
        }
    }
    LinearGroup gl;
    gl.group = group_from_table(std::move(t), std::move(labels),
                                "GL_" + std::to_string(n) + "(F" + std::to_string(q) + ")");
    gl.space = space;
    gl.mats = std::move(mats);
    return gl;
}

GroupAction nonzero_vector_action(const LinearGroup& gl) {
    const auto& space = gl.space;
    const int64_t npts = space.point_count() - 1;  // drop the zero vector
    GroupAction a;
    a.group = gl.group;
    a.set_size = int(npts);
    a.perm.assign(gl.group->order, std::vector<int>(a.set_size));
    a.point_labels.resize(a.set_size);
    for (int x = 0; x < a.set_size; ++x) a.point_labels[x] = space.label(x + 1);
    for (int e = 0; e < gl.group->order; ++e) {
        const FpMat& m = gl.mats[e];
        for (int x = 0; x < a.set_size; ++x) {
            auto v = space.coords(x + 1);
            auto w = m.apply(v);
            a.perm[e][x] = int(space.index(w) - 1);
        }
    }
    return a;
}

FpMat gl_mapping_witness(const std::vector<std::vector<int64_t>>& v,
                         const std::vector<std::vector<int64_t>>& w,
                         const VectorSpaceOverFq& space) {
    require(v.size() == w.size(), Errc::LengthMismatch, "tuples must have equal length");
    const int k = int(v.size());
    const int n = space.n;
    const int64_t q = space.q;
    require(k >= 1 && k <= n, Errc::LengthMismatch, "tuple length out of range");
    auto as_mat = [&](const std::vector<std::vector<int64_t>>& t) {
        FpMat m(n, int(t.size()), q);
        for (size_t j = 0; j < t.size(); ++j) {
            require(int(t[j].size()) == n, Errc::LengthMismatch, "vector dimension mismatch");
            for (int i = 0; i < n; ++i) m(i, int(j)) = mod_reduce(t[j][i], q);
        }
        return m;
    };
    FpMat V = as_mat(v), W = as_mat(w);
    require(fp_rank(V) == k, Errc::NotIndependent, "v tuple is linearly dependent");
    require(fp_rank(W) == k, Errc::NotIndependent, "w tuple is linearly dependent");

    // extend V by columns of W to a basis of V+W, and symmetrically
    std::vector<int> wv = fp_extend_basis(V, W);  // w-columns completing V to V+W
    std::vector<int> vw = fp_extend_basis(W, V);  // v-columns completing W to V+W
    require(wv.size() == vw.size(), Errc::BadInput, "complement dimensions disagree");
    FpMat S = V.hcat(W.select_columns(wv));
    // greedy complement of V+W by standard basis vectors
    std::vector<int> ub = fp_extend_basis(S, FpMat::identity(n, q));
    FpMat U = FpMat::identity(n, q).select_columns(ub);

    FpMat B = S.hcat(U);                                      // v | C_V | U
    FpMat M = W.hcat(V.select_columns(vw)).hcat(U);           // w | C_W | U
    require(B.cols() == n && fp_rank(B) == n, Errc::BadInput, "basis assembly failed");

    // sigma = M * B^{-1}
    FpMat Binv(n, n, q);
    {
        FpMat aug = B.hcat(FpMat::identity(n, q));
        // invert by full reduction
        for (int col = 0, row = 0; col < n; ++col, ++row) {
            int piv = -1;
            for (int i = row; i < n; ++i)
                if (aug(i, col) != 0) {
                    piv = i;
                    break;
                }
            require(piv >= 0, Errc::BadInput, "singular basis");
            for (int j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(row, j));
            int64_t inv = mod_inverse(aug(row, col), q);
            for (int j = 0; j < 2 * n; ++j) aug(row, j) = (aug(row, j) * inv) % q;
            for (int i = 0; i < n; ++i) {
                if (i == row || aug(i, col) == 0) continue;
                int64_t f = aug(i, col);
                for (int j = 0; j < 2 * n; ++j)
                    aug(i, j) = mod_reduce(aug(i, j) - f * aug(row, j), q);
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) Binv(i, j) = aug(i, n + j);
    }
    FpMat sigma = M * Binv;

    for (int j = 0; j < k; ++j) {
        auto img = sigma.apply(space.coords(space.index(v[j])));
        for (int i = 0; i < n; ++i)
            require(img[i] == mod_reduce(w[j][i], q), Errc::BadInput, "witness check failed");
    }
    for (int j = 0; j < U.cols(); ++j) {
        std::vector<int64_t> u(n);
        for (int i = 0; i < n; ++i) u[i] = U(i, j);
        auto img = sigma.apply(u);
        for (int i = 0; i < n; ++i)
            require(img[i] == u[i], Errc::BadInput, "witness does not fix the complement");
    }
    require(fp_rank(sigma) == n, Errc::BadInput, "witness is singular");
    return sigma;
}

}  // namespace ghom
