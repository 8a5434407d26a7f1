#include "ghom/simplicial.hpp"

#include "ghom/errors.hpp"

namespace ghom {

std::vector<int> EquivariantComplex::tuple_of(int64_t index, int degree) const {
    const int m = base.set_size;
    std::vector<int> t(degree + 1);
    for (int i = degree; i >= 0; --i) {
        t[i] = int(index % m);
        index /= m;
    }
    return t;
}

int64_t EquivariantComplex::index_of(const std::vector<int>& tuple) const {
    int64_t idx = 0;
    for (int x : tuple) idx = idx * base.set_size + x;
    return idx;
}

EquivariantComplex ordered_simplicial(const GroupAction& base, int top_degree, int64_t cap) {
    require(base.set_size >= 1, Errc::BadInput, "empty point set");
    int64_t count = base.set_size;
    for (int p = 1; p <= top_degree; ++p) {
        count *= base.set_size;
        require(count <= cap, Errc::TooLarge,
                "|X|^" + std::to_string(p + 1) + " exceeds cap " + std::to_string(cap));
    }
    EquivariantComplex ec;
    ec.group = base.group;
    ec.base = base;
    ec.cx.ring = Ring::integers();
    const int m = base.set_size;
    int64_t rank = 1;
    for (int p = 0; p <= top_degree; ++p) {
        rank *= m;
        ec.cx.ranks.push_back(int(rank));
    }
    ec.cx.d.resize(top_degree + 1);
    ec.cx.d[0] = SparseMat(0, m);
    for (int p = 1; p <= top_degree; ++p) {
        SparseMat d(ec.cx.ranks[p - 1], ec.cx.ranks[p]);
        // removing digit j of a tuple splits the index into the parts above
        // and below that digit
        std::vector<int64_t> pow(p + 2, 1);
        for (int i = 1; i <= p + 1; ++i) pow[i] = pow[i - 1] * m;
        const int64_t cols = ec.cx.ranks[p];
        for (int64_t t = 0; t < cols; ++t) {
            for (int j = 0; j <= p; ++j) {
                int64_t hi = t / pow[p + 1 - j];       // digits before j
                int64_t lo = t % pow[p - j];           // digits after j
                int64_t face = hi * pow[p - j] + lo;
                d.add(int(face), int(t), (j % 2 == 0) ? 1 : -1);
            }
        }
        d.compact();
        ec.cx.d[p] = std::move(d);
    }
    if (!base.point_labels.empty()) {
        ec.cx.labels.resize(top_degree + 1);
        for (int p = 0; p <= top_degree; ++p) {
            ec.cx.labels[p].resize(ec.cx.ranks[p]);
            for (int64_t t = 0; t < ec.cx.ranks[p]; ++t) {
                auto tup = ec.tuple_of(t, p);
                std::string s = "(";
                for (int i = 0; i <= p; ++i) s += (i ? "," : "") + base.point_labels[tup[i]];
                ec.cx.labels[p][t] = s + ")";
            }
        }
    }
    ec.cx.augmentation.assign(m, Int(1));
    ec.degree_action.reserve(top_degree + 1);
    for (int p = 0; p <= top_degree; ++p)
        ec.degree_action.push_back(tuple_action(base, p, cap));
    return ec;
}

Chain join_point(const EquivariantComplex& c, int x, const Chain& chain, int degree) {
    require(degree + 1 <= c.top_degree(), Errc::DegreeOverflow,
            "join would leave the truncation");
    require(0 <= x && x < c.point_count(), Errc::BadInput, "join point out of range");
    int64_t shift = 1;
    for (int i = 0; i <= degree; ++i) shift *= c.point_count();
    Chain out;
    for (auto& [idx, coeff] : chain) out[x * shift + idx] = coeff;
    return out;
}

Chain boundary_chain(const EquivariantComplex& c, const Chain& chain, int degree) {
    Chain out;
    if (degree == 0) return out;
    for (auto& [idx, coeff] : chain) {
        auto tup = c.tuple_of(idx, degree);
        for (int j = 0; j <= degree; ++j) {
            std::vector<int> face;
            face.reserve(degree);
            for (int i = 0; i <= degree; ++i)
                if (i != j) face.push_back(tup[i]);
            Int v = coeff * ((j % 2 == 0) ? 1 : -1);
            auto key = c.index_of(face);
            auto it = out.find(key);
            if (it == out.end())
                out[key] = v;
            else {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

int64_t verify_join_homotopy(const EquivariantComplex& c, int x, int max_degree) {
    require(max_degree + 1 <= c.top_degree(), Errc::DegreeOverflow,
            "homotopy check needs one degree of headroom");
    int64_t checked = 0;
    for (int64_t y = 0; y < c.cx.ranks[0]; ++y) {
        // d(x♯(y)) = (y) - (x)
        Chain single{{y, Int(1)}};
        Chain lhs = boundary_chain(c, join_point(c, x, single, 0), 1);
        Chain expect;
        expect[y] += 1;
        expect[x] -= 1;
        for (auto it = expect.begin(); it != expect.end();)
            it = it->second == 0 ? expect.erase(it) : std::next(it);
        require(lhs == expect, Errc::NotAcyclic, "degree-0 homotopy identity failed");
        ++checked;
    }
    for (int k = 1; k <= max_degree; ++k) {
        for (int64_t t = 0; t < c.cx.ranks[k]; ++t) {
            Chain simplex{{t, Int(1)}};
            Chain lhs = boundary_chain(c, join_point(c, x, simplex, k), k + 1);
            Chain rhs = simplex;
            for (auto& [idx, coeff] : join_point(c, x, boundary_chain(c, simplex, k), k - 1)) {
                rhs[idx] -= coeff;
                if (rhs[idx] == 0) rhs.erase(idx);
            }
            require(lhs == rhs, Errc::NotAcyclic,
                    "homotopy identity failed at degree " + std::to_string(k));
            ++checked;
        }
    }
    return checked;
}

void verify_equivariance(const EquivariantComplex& c) {
    const FiniteGroup& g = *c.group;
    for (int k = 1; k <= c.top_degree(); ++k) {
        const auto& act_k = c.degree_action[k];
        const auto& act_k1 = c.degree_action[k - 1];
        for (int e = 0; e < g.order; ++e) {
            // d(g·t) == g·d(t) column by column
            for (int64_t t = 0; t < c.cx.ranks[k]; ++t) {
                Chain tc{{t, Int(1)}};
                Chain lhs = boundary_chain(c, Chain{{act_k.perm[e][t], Int(1)}}, k);
                Chain rhs;
                for (auto& [idx, coeff] : boundary_chain(c, tc, k))
                    rhs[act_k1.perm[e][idx]] += coeff;
                require(lhs == rhs, Errc::BadInput, "differential is not equivariant");
            }
        }
    }
}

void validate_equivariant(const EquivariantComplex& c, bool check_acyclic) {
    c.cx.validate();
    if (!c.cx.augmentation.empty() && c.top_degree() >= 1) {
        // ε ∘ d_1 = 0
        const SparseMat& d1 = c.cx.d[1];
        std::vector<Int> sums(d1.cols());
        for (const auto& e : d1.entries()) sums[e.col] += c.cx.augmentation[e.row] * e.val;
        for (const Int& s : sums) require(s == 0, Errc::BadInput, "augmentation not a chain map");
    }
    if (check_acyclic && c.top_degree() >= 1)
        verify_join_homotopy(c, 0, c.top_degree() - 1);
}

}  // namespace ghom
