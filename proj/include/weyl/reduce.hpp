#pragma once

#include "weyl/center.hpp"
#include "weyl/poisson.hpp"
#include "weyl/weyl_endo.hpp"

namespace weyl {

// Reduction of Z- or Q-coefficients mod p. Rational coefficients need p
// coprime to the denominator.
inline RingValue reduce_value(const Ring& from, const RingValue& v, const Ring& fp) {
    switch (from.kind()) {
        case RingKind::integers: return fp.from_integer(std::get<Integer>(v));
        case RingKind::rationals: return fp.from_rational(std::get<Rational>(v));
        default:
            raise(Errc::invalid_argument,
                  "reduction mod p expects coefficients over Z or Q, got " + from.name());
    }
    return fp.zero();
}

inline PolyElement reduce_poly(const PolyElement& a, const Ring& fp) {
    PolyElement r(fp, a.nvars());
    for (const auto& [e, c] : a.terms()) r.add_term(e, reduce_value(a.ring(), c, fp));
    return r;
}

inline WeylElement reduce_weyl(const WeylElement& a, const Ring& fp) {
    WeylElement r(fp, a.n());
    for (const auto& [e, c] : a.terms()) r.add_term(e, reduce_value(a.ring(), c, fp));
    return r;
}

// Relation defects reduce along with the images, so the result is
// re-verified from scratch (cheap relative to downstream work).
inline WeylEndo reduce_endo(const WeylEndo& f, const Ring& fp) {
    std::vector<WeylElement> images;
    for (const auto& im : f.images()) images.push_back(reduce_weyl(im, fp));
    std::optional<std::vector<WeylElement>> inverse;
    if (f.claimed_inverse()) {
        std::vector<WeylElement> inv;
        for (const auto& im : *f.claimed_inverse()) inv.push_back(reduce_weyl(im, fp));
        inverse = std::move(inv);
    }
    return WeylEndo::make(fp, f.n(), std::move(images), std::move(inverse));
}

inline PolyMap reduce_map(const PolyMap& g, const Ring& fp) {
    PolyMap r{fp, g.n, {}, std::nullopt};
    for (const auto& im : g.images) r.images.push_back(reduce_poly(im, fp));
    if (g.claimed_inverse) {
        std::vector<PolyElement> inv;
        for (const auto& im : *g.claimed_inverse) inv.push_back(reduce_poly(im, fp));
        r.claimed_inverse = std::move(inv);
    }
    return r;
}

} // namespace weyl
