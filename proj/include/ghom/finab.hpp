#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghom/errors.hpp"
#include "ghom/ring.hpp"

namespace ghom {

/// Finitely generated abelian group in canonical form: free rank plus
/// invariant factors t_1 | t_2 | ... with every t_i >= 2.
struct FinAbGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    FinAbGroup() = default;
    FinAbGroup(int free, std::vector<Int> tors) : free_rank(free), torsion(std::move(tors)) {}

    static FinAbGroup trivial() { return FinAbGroup(0, {}); }
    static FinAbGroup free_of_rank(int r) { return FinAbGroup(r, {}); }
    static FinAbGroup cyclic(const Int& n) {
        if (n == 1) return trivial();
        return FinAbGroup(0, {n});
    }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    bool operator==(const FinAbGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

    Int torsion_order() const {
        Int n = 1;
        for (const Int& t : torsion) n *= t;
        return n;
    }

    /// Count of invariant factors divisible by p (the p-torsion corank).
    int torsion_count_divisible_by(int64_t p) const {
        int c = 0;
        for (const Int& t : torsion)
            if (t % p == 0) ++c;
        return c;
    }

    std::string str() const {
        if (is_trivial()) return "0";
        std::string s;
        auto app = [&s](const std::string& part) {
            if (!s.empty()) s += " + ";
            s += part;
        };
        if (free_rank == 1) app("Z");
        else if (free_rank > 1) app("Z^" + std::to_string(free_rank));
        for (const Int& t : torsion) app("Z/" + t.str());
        return s;
    }
};

/// Rebuilds the ascending invariant-factor chain from an arbitrary multiset
/// of cyclic orders (drops 1s, merges prime powers).
inline std::vector<Int> canonical_invariant_factors(std::vector<Int> orders) {
    std::map<Int, std::vector<int>> powers;  // prime -> exponents, one per cyclic summand
    for (Int n : orders) {
        require(n >= 1, Errc::BadInput, "cyclic order must be positive");
        for (Int d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                int e = 0;
                while (n % d == 0) {
                    n /= d;
                    ++e;
                }
                powers[d].push_back(e);
            }
        }
        if (n > 1) powers[n].push_back(1);
    }
    size_t slots = 0;
    for (auto& [p, es] : powers) {
        std::sort(es.rbegin(), es.rend());
        slots = std::max(slots, es.size());
    }
    // invariant factor j (from the largest down) collects the j-th largest
    // power of every prime
    std::vector<Int> chain(slots, Int(1));
    for (auto& [p, es] : powers)
        for (size_t j = 0; j < es.size(); ++j) {
            Int pe = 1;
            for (int k = 0; k < es[j]; ++k) pe *= p;
            chain[j] *= pe;
        }
    std::sort(chain.begin(), chain.end());
    return chain;
}

inline FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Int> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return FinAbGroup(a.free_rank + b.free_rank, canonical_invariant_factors(std::move(orders)));
}

/// Tor(A,B): vanishes on free parts, Tor(Z/a, Z/b) = Z/gcd(a,b).
inline FinAbGroup tor_pair(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Int> orders;
    for (const Int& x : a.torsion)
        for (const Int& y : b.torsion) orders.push_back(boost::multiprecision::gcd(x, y));
    return FinAbGroup(0, canonical_invariant_factors(std::move(orders)));
}

/// Ext(A,B): Ext(Z,-) = 0, Ext(Z/a, Z) = Z/a, Ext(Z/a, Z/b) = Z/gcd(a,b).
inline FinAbGroup ext_pair(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Int> orders;
    for (const Int& x : a.torsion) {
        for (int i = 0; i < b.free_rank; ++i) orders.push_back(x);
        for (const Int& y : b.torsion) orders.push_back(boost::multiprecision::gcd(x, y));
    }
    return FinAbGroup(0, canonical_invariant_factors(std::move(orders)));
}

}  // namespace ghom
