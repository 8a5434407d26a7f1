#include "ghom/gradedalg.hpp"

#include <algorithm>

#include "ghom/errors.hpp"
#include "ghom/group.hpp"
#include "ghom/homology.hpp"

namespace ghom {

AlgebraKind parse_algebra_kind(const std::string& s) {
    if (s == "tensor") return AlgebraKind::Tensor;
    if (s == "exterior") return AlgebraKind::Exterior;
    if (s == "symmetric") return AlgebraKind::Symmetric;
    if (s == "shuffle") return AlgebraKind::Shuffle;
    fail(Errc::BadInput, "unknown algebra kind: " + s);
}

PowerSeries series_product(const PowerSeries& a, const PowerSeries& b, int truncation) {
    PowerSeries out;
    out.coeff.assign(truncation + 1, Int(0));
    for (int i = 0; i <= truncation; ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; i + j <= truncation; ++j) out.coeff[i + j] += a.at(i) * b.at(j);
    }
    return out;
}

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int v = 1;
    for (int i = 0; i < k; ++i) {
        v *= (n - i);
        v /= (i + 1);
    }
    return v;
}

}  // namespace

Int graded_component_count(AlgebraKind kind, int d, int k) {
    require(d >= 0 && k >= 0, Errc::BadInput, "negative dimension or degree");
    switch (kind) {
        case AlgebraKind::Tensor: {
            Int v = 1;
            for (int i = 0; i < k; ++i) v *= d;
            return v;
        }
        case AlgebraKind::Exterior: return binomial(d, k);
        case AlgebraKind::Symmetric:
        case AlgebraKind::Shuffle: return binomial(d + k - 1, k);
    }
    return 0;
}

std::vector<std::vector<int>> graded_basis_words(AlgebraKind kind, int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    auto emit = [&](auto&& self, int next_min) -> void {
        if (int(word.size()) == k) {
            out.push_back(word);
            return;
        }
        for (int i = next_min; i <= d; ++i) {
            word.push_back(i);
            int nm = i;
            if (kind == AlgebraKind::Exterior) nm = i + 1;
            if (kind == AlgebraKind::Tensor) nm = 1;
            self(self, nm);
            word.pop_back();
        }
    };
    if (k == 0) return {std::vector<int>{}};
    emit(emit, 1);
    return out;
}

PowerSeries hilbert_series(AlgebraKind kind, int d, int truncation, int generator_degree) {
    require(generator_degree >= 1, Errc::BadInput, "generator degree must be positive");
    PowerSeries out;
    out.coeff.assign(truncation + 1, Int(0));
    for (int n = 0; n <= truncation; ++n)
        if (n % generator_degree == 0)
            out.coeff[n] = graded_component_count(kind, d, n / generator_degree);
    return out;
}

namespace {

void reduce_elt(ShuffleElt& e, const Ring& ring) {
    for (auto it = e.begin(); it != e.end();) {
        if (ring.kind == RingKind::Fp) {
            it->second %= ring.p;
            if (it->second < 0) it->second += ring.p;
        }
        it = it->second == 0 ? e.erase(it) : std::next(it);
    }
}

}  // namespace

ShuffleElt shuffle_product(const std::vector<int>& u, const std::vector<int>& v,
                           const Ring& ring) {
    std::vector<int> su = u, sv = v;
    std::sort(su.begin(), su.end());
    std::sort(sv.begin(), sv.end());
    std::vector<int> merged = su;
    merged.insert(merged.end(), sv.begin(), sv.end());
    std::sort(merged.begin(), merged.end());
    const int n = int(merged.size()), k = int(su.size());
    // coefficient = number of position subsets of the sorted merge whose
    // content is u
    Int count = 0;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    auto advance = [&]() {
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (k == 0) {
        count = 1;
    } else {
        bool more = true;
        while (more) {
            std::vector<int> picked;
            picked.reserve(k);
            for (int i : comb) picked.push_back(merged[i]);
            if (picked == su) ++count;
            more = advance();
        }
    }
    ShuffleElt out;
    out[merged] = count;
    reduce_elt(out, ring);
    return out;
}

ShuffleElt shuffle_multiply(const ShuffleElt& a, const ShuffleElt& b, const Ring& ring) {
    ShuffleElt out;
    for (auto& [u, cu] : a)
        for (auto& [v, cv] : b) {
            ShuffleElt term = shuffle_product(u, v, Ring::integers());
            for (auto& [w, c] : term) out[w] += c * cu * cv;
        }
    reduce_elt(out, ring);
    return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> symm_shuffle_iso(int d, int k) {
    auto sym = graded_basis_words(AlgebraKind::Symmetric, d, k);
    auto shuf = graded_basis_words(AlgebraKind::Shuffle, d, k);
    require(sym.size() == shuf.size(), Errc::BadInput, "component sizes disagree");
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    out.reserve(sym.size());
    for (size_t i = 0; i < sym.size(); ++i) out.push_back({sym[i], shuf[i]});
    return out;
}

PowerSeries cartan_expected_dims(int64_t p, int d, int truncation) {
    if (p == 0) return hilbert_series(AlgebraKind::Exterior, d, truncation, 1);
    require(is_prime(p), Errc::BadInput, "p must be prime (or 0 for Q)");
    if (p == 2) return hilbert_series(AlgebraKind::Symmetric, d, truncation, 1);
    return series_product(hilbert_series(AlgebraKind::Exterior, d, truncation, 1),
                          hilbert_series(AlgebraKind::Symmetric, d, truncation, 2), truncation);
}

CartanVerifyReport cartan_verify(int64_t p, int d, int max_degree, int64_t cap) {
    require(is_prime(p), Errc::BadInput, "p must be prime");
    require(d >= 1, Errc::BadInput, "dimension must be positive");
    CartanVerifyReport rep;
    rep.p = p;
    rep.d = d;
    PowerSeries expected = cartan_expected_dims(p, d, max_degree);
    for (int n = 0; n <= max_degree; ++n) rep.expected.push_back(int(expected.at(n)));
    GroupPtr g = cyclic_group(int(p));
    for (int i = 1; i < d; ++i) g = product_group(g, cyclic_group(int(p)));
    HomologyResult h = group_homology(g, trivial_module(g, Ring::mod(p)), max_degree, cap);
    rep.computed = h.dims();
    rep.pass = rep.expected == rep.computed;
    return rep;
}

}  // namespace ghom
