#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "ghom/errors.hpp"

namespace ghom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { Z, Fp, Q };

/// Coefficient ring descriptor. All matrices store integer entries; an Fp
/// matrix stores canonical residues 0..p-1.
struct Ring {
    RingKind kind = RingKind::Z;
    int64_t p = 0;  // modulus when kind == Fp

    static Ring integers() { return {RingKind::Z, 0}; }
    static Ring rationals() { return {RingKind::Q, 0}; }
    static Ring mod(int64_t p) {
        require(p >= 2, Errc::BadInput, "modulus must be >= 2");
        return {RingKind::Fp, p};
    }

    bool is_field() const { return kind != RingKind::Z; }
    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
            case RingKind::Z: return "Z";
            case RingKind::Q: return "Q";
            case RingKind::Fp: return "F" + std::to_string(p);
        }
        return "?";
    }
};

/// Parses "Z", "Q", "F2", "Fp:2".
inline Ring parse_ring(const std::string& s) {
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    if (s.size() >= 2 && s[0] == 'F') {
        std::string num = s.substr(1);
        if (num.rfind("p:", 0) == 0) num = num.substr(2);
        try {
            return Ring::mod(std::stoll(num));
        } catch (const std::exception&) {
            fail(Errc::BadInput, "bad ring spec: " + s);
        }
    }
    fail(Errc::BadInput, "bad ring spec: " + s);
}

inline int64_t mod_reduce(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

inline int64_t mod_reduce(const Int& a, int64_t p) {
    Int r = a % p;
    if (r < 0) r += p;
    return static_cast<int64_t>(r);
}

/// Inverse of a mod p (p prime, a not divisible by p).
inline int64_t mod_inverse(int64_t a, int64_t p) {
    a = mod_reduce(a, p);
    require(a != 0, Errc::BadInput, "inverse of zero residue");
    int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    require(r == 1, Errc::BadInput, "modulus not prime or not coprime");
    return mod_reduce(t, p);
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace ghom
