#pragma once

#include "weyl/common.hpp"
#include "weyl/ring.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace weyl {

// x = r1 mod m1, x = r2 mod m2 for coprime moduli; result in [0, m1*m2).
inline std::pair<Integer, Integer> crt_pair(const Integer& r1, const Integer& m1, const Integer& r2,
                                            const Integer& m2) {
    auto inv = inv_mod(m1, m2);
    if (!inv) raise(Errc::invalid_argument, "crt: moduli not coprime");
    Integer k = mod_reduce((r2 - r1) * (*inv), m2);
    return {r1 + m1 * k, m1 * m2};
}

// floor(sqrt(x)) for x >= 0
inline Integer isqrt(const Integer& x) { return boost::multiprecision::sqrt(x); }

// Wang-style rational reconstruction from a single residue X mod M with the
// symmetric bound B = floor(sqrt(M/2)): half-extended Euclid on (M, X), stop
// at the first remainder <= B, accept when the matching cofactor also fits.
inline std::optional<Rational> rational_from_residue(const Integer& X, const Integer& M) {
    const Integer B = isqrt(M / 2);
    Integer r0 = M, r1 = mod_reduce(X, M);
    Integer t0 = 0, t1 = 1;
    while (r1 > B) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    Integer num = t1 < 0 ? Integer(-r1) : r1;
    Integer den = abs(t1);
    if (den > B) return std::nullopt;
    if (gcd(num, den) != 1) return std::nullopt;
    if (gcd(den, M) != 1) return std::nullopt;
    return Rational(num, den);
}

struct ResiduePoint {
    Integer p;
    Integer residue;
};

// Reconstruct a rational from residues at distinct odd-size prime set.
// Primes are sorted ascending; the candidate comes from the full CRT value,
// must re-reduce correctly at every prime, and (when more than two points
// are given) must agree with the candidate obtained without the final two
// primes whenever that smaller reconstruction already succeeds. The last
// two primes therefore act purely as checks.
inline Rational rational_reconstruct(std::vector<ResiduePoint> points) {
    if (points.size() < 2)
        raise(Errc::invalid_argument, "rational_reconstruct needs at least two (prime, residue) points");
    std::sort(points.begin(), points.end(),
              [](const ResiduePoint& a, const ResiduePoint& b) { return a.p < b.p; });
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& [p, r] = points[i];
        if (!is_prime(p)) raise(Errc::invalid_argument, "modulus " + p.str() + " is not prime");
        if (i && points[i - 1].p == p) raise(Errc::invalid_argument, "duplicate prime " + p.str());
        if (r < 0 || r >= p)
            raise(Errc::invalid_argument, "residue " + r.str() + " out of range mod " + p.str());
    }

    auto combine = [](const std::vector<ResiduePoint>& pts, std::size_t count) {
        Integer X = pts[0].residue, M = pts[0].p;
        for (std::size_t i = 1; i < count; ++i)
            std::tie(X, M) = crt_pair(X, M, pts[i].residue, pts[i].p);
        return std::pair<Integer, Integer>(X, M);
    };

    auto [X, M] = combine(points, points.size());
    auto candidate = rational_from_residue(X, M);
    if (!candidate)
        raise(Errc::no_reconstruction,
              "no rational within the bound sqrt(M/2) matches the combined residue mod " + M.str());

    for (const auto& [p, r] : points) {
        auto inv = inv_mod(denominator(*candidate), p);
        if (!inv || mod_reduce(numerator(*candidate) * (*inv), p) != r)
            raise(Errc::no_reconstruction,
                  "candidate " + Ring::to_decimal(*candidate) + " fails re-reduction mod " + p.str());
    }

    if (points.size() >= 3) {
        auto [Xs, Ms] = combine(points, points.size() - 2);
        auto smaller = rational_from_residue(Xs, Ms);
        if (smaller && *smaller != *candidate)
            raise(Errc::no_reconstruction, "check primes disagree: " + Ring::to_decimal(*smaller) +
                                               " vs " + Ring::to_decimal(*candidate));
    }
    return *candidate;
}

} // namespace weyl
