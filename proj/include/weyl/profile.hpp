#pragma once

#include "weyl/center.hpp"
#include "weyl/reconstruct.hpp"
#include "weyl/reduce.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weyl {

// One prime's slice of a profile. `error` is empty when the reduction,
// center map and untwist all went through; otherwise the maps are absent
// and `error` holds what failed, so a bad prime never aborts the others.
struct ProfilePrime {
    Integer p;
    std::optional<CenterMap> map;
    std::optional<CenterMap> untwisted;
    bool degree_ok = false;
    std::string error;
};

// Multi-prime reconstruction verdict. `map` is present only when every
// coefficient of every image reconstructed; `agrees` additionally demands
// that the candidate re-reduces to the untwisted map at each check prime.
struct ProfileReconstruction {
    std::optional<PolyMap> map;
    std::vector<Integer> check_primes;
    bool agrees = false;
    std::string error;
};

struct PrimeProfile {
    WeylEndo source;
    std::uint32_t n = 0;
    std::vector<ProfilePrime> primes;
    std::optional<ProfileReconstruction> reconstruction;
};

namespace detail {

// residue of an F_p coefficient at a monomial, absent terms read as 0
inline Integer residue_at(const PolyMap& m, std::size_t image, const MultiIndex& e) {
    return std::get<Integer>(m.images[image].coefficient(e));
}

inline std::optional<ProfileReconstruction> reconstruct_profile(
    const std::vector<const ProfilePrime*>& usable, std::uint32_t n, const Ring& q) {
    if (usable.size() < 2) return std::nullopt;
    ProfileReconstruction rec;
    for (std::size_t i = usable.size() - 2; i < usable.size(); ++i)
        rec.check_primes.push_back(usable[i]->p);

    PolyMap candidate{q, n, {}, std::nullopt};
    for (std::size_t i = 0; i < 2 * n; ++i) {
        // support union across primes: a coefficient that reduces to zero at
        // some prime simply contributes a zero residue there
        std::map<MultiIndex, bool> support;
        for (const ProfilePrime* e : usable)
            for (const auto& [mono, c] : e->untwisted->map.images[i].terms()) support[mono] = true;

        PolyElement im(q, 2 * n);
        for (const auto& [mono, unused] : support) {
            std::vector<ResiduePoint> points;
            for (const ProfilePrime* e : usable)
                points.push_back({e->p, residue_at(e->untwisted->map, i, mono)});
            try {
                im.add_term(mono, q.from_rational(rational_reconstruct(std::move(points))));
            } catch (const Error& err) {
                rec.error = err.what();
                return rec;
            }
        }
        candidate.images.push_back(std::move(im));
    }

    rec.agrees = true;
    for (const Integer& cp : rec.check_primes) {
        Ring fq = Ring::prime_field(cp);
        const auto it = std::find_if(usable.begin(), usable.end(),
                                     [&](const ProfilePrime* e) { return e->p == cp; });
        if (reduce_map(candidate, fq) != (*it)->untwisted->map) rec.agrees = false;
    }
    rec.map = std::move(candidate);
    return rec;
}

} // namespace detail

// Reduce a characteristic-zero automorphism at each listed prime, take the
// center map, untwist, and lift the untwisted coefficients back to Q by
// rational reconstruction with the last two primes as checks. Per-prime
// failures are recorded in the profile, not thrown; the report only ever
// speaks about the listed primes. Claimed inverses are dropped before the
// per-prime work: the center-map images alone are compared, and powering
// the inverse images would roughly double the cost.
inline PrimeProfile psi_profile(const WeylEndo& f, std::vector<Integer> primes) {
    const Ring& src = f.ring();
    if (src.kind() != RingKind::integers && src.kind() != RingKind::rationals)
        raise(Errc::ring_mismatch, "psi_profile needs a source over Z or Q, got " + src.name());
    if (!f.verified())
        raise(Errc::relation_check_failed, "psi_profile needs a verified endomorphism");
    if (primes.empty()) raise(Errc::invalid_argument, "psi_profile needs at least one prime");
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            raise(Errc::invalid_argument, "modulus " + primes[i].str() + " is not prime");
        if (primes[i] == 2) raise(Errc::invalid_argument, "psi_profile needs odd primes");
        if (i && primes[i - 1] == primes[i])
            raise(Errc::invalid_argument, "duplicate prime " + primes[i].str());
    }

    PrimeProfile prof{f, f.n(), {}, std::nullopt};
    for (const Integer& p : primes) {
        ProfilePrime entry;
        entry.p = p;
        try {
            Ring fp = Ring::prime_field(p);
            std::vector<WeylElement> images;
            for (const auto& im : f.images()) images.push_back(reduce_weyl(im, fp));
            WeylEndo fp_endo = WeylEndo::make(fp, f.n(), std::move(images));
            if (!fp_endo.verified())
                raise(Errc::relation_check_failed, "reduction mod " + p.str() + " breaks the relations");
            CenterMap m = center_map(fp_endo);
            CenterMap u = untwist_frobenius_map(m);
            entry.degree_ok = degree_check(m).pass && degree_check(u).pass;
            entry.map = std::move(m);
            entry.untwisted = std::move(u);
        } catch (const Error& e) {
            entry.error = e.what();
        }
        prof.primes.push_back(std::move(entry));
    }

    std::vector<const ProfilePrime*> usable;
    for (const auto& e : prof.primes)
        if (e.untwisted) usable.push_back(&e);
    prof.reconstruction = detail::reconstruct_profile(usable, prof.n, Ring::rationals());
    return prof;
}

} // namespace weyl
