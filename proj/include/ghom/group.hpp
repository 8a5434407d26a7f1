#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ghom/fpmat.hpp"
#include "ghom/finab.hpp"

namespace ghom {

/// A finite group as an indexed element set with a validated multiplication
/// table. Everything downstream speaks element indices.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;  // table[g][h] = g·h
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;
    std::string name;

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    std::string label(int g) const {
        return g < int(labels.size()) && !labels[g].empty() ? labels[g] : std::to_string(g);
    }
    int element_order(int g) const {
        int n = 1, x = g;
        while (x != identity) {
            x = mul(x, g);
            ++n;
        }
        return n;
    }
    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Structural identity: same table, not necessarily the same object.
inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->order == b->order && a->identity == b->identity && a->table == b->table;
}

/// Validates the table (Latin square, identity, inverses, associativity —
/// exhaustive up to order 64, sampled above) and wraps it.
GroupPtr group_from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {},
                          std::string name = "");

GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n);
GroupPtr dihedral_group(int n);  // symmetries of the n-gon, order 2n
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);

/// Subgroup generated by `gens` (element indices).
std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);
bool is_normal(const FiniteGroup& g, const std::vector<int>& elems);

/// The subgroup as a group of its own plus the index embedding into g.
struct Subgroup {
    GroupPtr group;
    std::vector<int> embed;  // subgroup index -> ambient index
};
Subgroup subgroup_group(const GroupPtr& g, std::vector<int> elems, std::string name = "");

/// Quotient by a normal subgroup; `project` maps ambient elements to coset
/// indices and `reps` picks one ambient representative per coset (the least,
/// except that the trivial coset is represented by the identity).
struct Quotient {
    GroupPtr group;
    std::vector<int> project;
    std::vector<int> reps;
};
Quotient quotient_group(const GroupPtr& g, const std::vector<int>& normal_elems);

/// G/[G,G] in canonical invariant-factor form.
FinAbGroup abelianization(const FiniteGroup& g);

/// A small generating set (greedy), used to drive orbit scans.
std::vector<int> generating_set(const FiniteGroup& g);

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& map);

struct GroupAction {
    GroupPtr group;
    int set_size = 0;
    std::vector<std::vector<int>> perm;  // perm[g][x] = g·x
    std::vector<std::string> point_labels;

    int apply(int g, int x) const { return perm[g][x]; }
};

GroupAction regular_action(const GroupPtr& g);
GroupAction trivial_action(const GroupPtr& g, int set_size);

/// Left multiplication on left cosets of H; coset 0 is H itself and cosets
/// are enumerated by their least member.
GroupAction coset_action(const GroupPtr& g, const std::vector<int>& subgroup_elems);

/// Diagonal action on (p+1)-tuples of the base set, tuples indexed
/// lexicographically (first coordinate most significant).
GroupAction tuple_action(const GroupAction& base, int p, int64_t cap);

void validate_action(const GroupAction& a);

struct Orbits {
    std::vector<int> label;  // point -> least point of its orbit
    std::vector<int> reps;   // sorted orbit representatives
    std::vector<int> orbit_of;  // point -> orbit ordinal (index into reps)
    std::vector<int> sizes;
};

Orbits orbit_decompose(const GroupAction& a);

/// Stabilizer of a point, as ambient element indices.
std::vector<int> stabilizer(const GroupAction& a, int point);

/// F_q^n with q prime; vectors are indexed lexicographically with the first
/// coordinate most significant.
struct VectorSpaceOverFq {
    int64_t q = 2;
    int n = 1;

    int64_t point_count() const {
        int64_t c = 1;
        for (int i = 0; i < n; ++i) c *= q;
        return c;
    }
    std::vector<int64_t> coords(int64_t index) const;
    int64_t index(const std::vector<int64_t>& v) const;
    std::string label(int64_t index) const;
};

/// GL_n(F_q) with matrix labels and the defining matrices kept around.
struct LinearGroup {
    GroupPtr group;
    VectorSpaceOverFq space;
    std::vector<FpMat> mats;
};

LinearGroup general_linear_group(int n, int64_t q, int64_t order_cap = 200);

/// Natural action on the nonzero vectors of the defining space.
GroupAction nonzero_vector_action(const LinearGroup& gl);

/// An invertible matrix mapping v_i to w_i and fixing a complement of
/// span(v)+span(w) pointwise. Tuples must be linearly independent and of
/// equal length.
FpMat gl_mapping_witness(const std::vector<std::vector<int64_t>>& v,
                         const std::vector<std::vector<int64_t>>& w,
                         const VectorSpaceOverFq& space);

}  // namespace ghom
