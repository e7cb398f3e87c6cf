#pragma once

#include "weyl/poisson.hpp"
#include "weyl/weyl_endo.hpp"

#include <cstdint>
#include <vector>

namespace weyl {

// In characteristic p the center of A_n is the polynomial ring on
// y_i = xh_i^p. Since those generators commute and PBW powers of single
// generators stack without correction terms, an element lies in the center
// exactly when every PBW exponent is divisible by p, and its y-coordinates
// are the exponents divided by p with coefficients unchanged.
inline PolyElement center_coords(const WeylElement& a) {
    const Ring& ring = a.ring();
    if (!ring.has_prime_characteristic())
        raise(Errc::ring_not_char_p, "center_coords needs a coefficient ring of characteristic p");
    const Integer& p = ring.characteristic();
    const std::uint32_t pu = static_cast<std::uint32_t>(p);
    PolyElement r(ring, 2 * a.n());
    for (const auto& [e, c] : a.terms()) {
        MultiIndex y(e.size(), 0u);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] % pu != 0)
                raise(Errc::not_central, "term with exponent " + exp_to_string(e) +
                                             " is not a polynomial in the p-th powers (p=" + p.str() + ")");
            y[j] = e[j] / pu;
        }
        r.add_term(y, c);
    }
    return r;
}

// Inverse of center_coords: y^gamma -> xh^{p gamma}.
inline WeylElement center_element_to_weyl(const PolyElement& c, std::uint32_t n) {
    const Ring& ring = c.ring();
    if (!ring.has_prime_characteristic())
        raise(Errc::ring_not_char_p, "center elements need characteristic p");
    if (c.nvars() != 2 * n) raise(Errc::index_mismatch, "center element needs 2n variables");
    const std::uint32_t pu = static_cast<std::uint32_t>(ring.characteristic());
    WeylElement r(ring, n);
    for (const auto& [e, v] : c.terms()) {
        MultiIndex w(e.size(), 0u);
        for (std::size_t j = 0; j < e.size(); ++j) w[j] = e[j] * pu;
        r.add_term(w, v);
    }
    return r;
}

// Map of Spec of the center induced by an endomorphism, y_i -> coords of
// f(xh_i)^p, tagged with the Bernstein degree bound of its source.
struct CenterMap {
    PolyMap map;
    std::int64_t source_degree_bound = 1;

    bool operator==(const CenterMap& o) const { return map == o.map; }
};

inline CenterMap center_map(const WeylEndo& f) {
    const Ring& ring = f.ring();
    if (!ring.has_prime_characteristic())
        raise(Errc::ring_not_char_p, "center_map needs a coefficient ring of characteristic p");
    if (!f.verified())
        raise(Errc::relation_check_failed, "center_map needs a verified endomorphism");
    const std::uint64_t p = static_cast<std::uint64_t>(ring.characteristic());
    PolyMap m{ring, f.n(), {}, std::nullopt};
    for (const auto& im : f.images()) m.images.push_back(center_coords(weyl_pow(im, p)));
    if (f.claimed_inverse()) {
        std::vector<PolyElement> inv;
        for (const auto& im : *f.claimed_inverse()) inv.push_back(center_coords(weyl_pow(im, p)));
        m.claimed_inverse = std::move(inv);
    }
    return CenterMap{std::move(m), f.degree_bound()};
}

inline CenterMap compose_center_maps(const CenterMap& a, const CenterMap& b) {
    return CenterMap{compose_maps(a.map, b.map), a.source_degree_bound * b.source_degree_bound};
}

// Canonical lift of a center element to A_n over Z/p^2: exponents times p,
// representatives kept.
inline WeylElement canonical_center_lift(const PolyElement& a, std::uint32_t n, const Integer& p,
                                         const Ring& mod_p2) {
    if (a.ring().kind() != RingKind::prime_field || a.ring().characteristic() != p)
        raise(Errc::ring_not_char_p, "canonical_center_lift expects a center element over F_p");
    if (a.nvars() != 2 * n) raise(Errc::index_mismatch, "center element needs 2n variables");
    const std::uint32_t pu = static_cast<std::uint32_t>(p);
    WeylElement r(mod_p2, n);
    for (const auto& [e, v] : a.terms()) {
        MultiIndex w(e.size(), 0u);
        for (std::size_t j = 0; j < e.size(); ++j) w[j] = e[j] * pu;
        r.add_term(w, mod_p2.from_integer(std::get<Integer>(v)));
    }
    return r;
}

// {a, b} := ([atil, btil] / p) mod p for lifts of a, b to A_n over Z/p^2.
// Independent of the choice of lifts: changing a lift by p*u changes the
// commutator by p*[u, btil] + ..., and [u, btil] is 0 mod p because btil is
// central mod p.
inline PolyElement center_bracket_from_lifts(const WeylElement& atil, const WeylElement& btil,
                                             std::uint32_t n, const Integer& p) {
    check_compatible(atil, btil, "center_bracket_from_lifts");
    const Ring& mod_p2 = atil.ring();
    if (mod_p2.kind() != RingKind::mod_m || mod_p2.modulus() != p * p)
        raise(Errc::invalid_argument, "lifts must live over Z/p^2");
    const std::uint32_t pu = static_cast<std::uint32_t>(p);
    Ring fp = Ring::prime_field(p);
    WeylElement c = commutator(atil, btil);
    PolyElement r(fp, 2 * n);
    for (const auto& [e, v] : c.terms()) {
        const Integer& rep = std::get<Integer>(v); // in [0, p^2)
        if (rep % p != 0)
            raise(Errc::not_divisible_by_p, "commutator of lifts has coefficient " + rep.str() +
                                                " not divisible by p=" + p.str());
        MultiIndex y(e.size(), 0u);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] % pu != 0)
                raise(Errc::not_central, "commutator of lifts leaves the center mod p");
            y[j] = e[j] / pu;
        }
        r.add_term(y, fp.from_integer(rep / p));
    }
    return r;
}

// Intrinsic Poisson bracket on the center, via canonical lifts.
inline PolyElement center_poisson_bracket(const PolyElement& a, const PolyElement& b, std::uint32_t n,
                                          const Integer& p) {
    Ring mod_p2 = Ring::mod_m(p * p);
    return center_bracket_from_lifts(canonical_center_lift(a, n, p, mod_p2),
                                     canonical_center_lift(b, n, p, mod_p2), n, p);
}

// Coefficientwise inverse Frobenius on a center map. Center maps induced
// by tame endomorphisms have p-th-power coefficients, so for those the
// untwist is exact.
inline CenterMap untwist_frobenius_map(const CenterMap& m) {
    const Ring& ring = m.map.ring;
    auto untwist_poly = [&](const PolyElement& im, std::uint32_t idx) {
        PolyElement out(ring, im.nvars());
        for (const auto& [e, c] : im.terms()) {
            auto root = ring.inverse_frobenius(c);
            if (!root)
                raise(Errc::not_a_pth_power, "coefficient " + ring.to_string(c) + " of image " +
                                                 std::to_string(idx + 1) + " at exponent " +
                                                 exp_to_string(e) + " is not a p-th power");
            out.add_term(e, *root);
        }
        return out;
    };
    PolyMap out{ring, m.map.n, {}, std::nullopt};
    for (std::uint32_t i = 0; i < m.map.images.size(); ++i)
        out.images.push_back(untwist_poly(m.map.images[i], i));
    if (m.map.claimed_inverse) {
        std::vector<PolyElement> inv;
        for (std::uint32_t i = 0; i < m.map.claimed_inverse->size(); ++i)
            inv.push_back(untwist_poly((*m.map.claimed_inverse)[i], i));
        out.claimed_inverse = std::move(inv);
    }
    return CenterMap{std::move(out), m.source_degree_bound};
}

// Coefficientwise Frobenius push-forward of a polynomial map.
inline PolyMap frobenius_twist_map(const PolyMap& g) {
    auto twist_poly = [&](const PolyElement& im) {
        PolyElement out(g.ring, im.nvars());
        for (const auto& [e, c] : im.terms()) out.add_term(e, g.ring.frobenius(c));
        return out;
    };
    PolyMap out{g.ring, g.n, {}, std::nullopt};
    for (const auto& im : g.images) out.images.push_back(twist_poly(im));
    if (g.claimed_inverse) {
        std::vector<PolyElement> inv;
        for (const auto& im : *g.claimed_inverse) inv.push_back(twist_poly(im));
        out.claimed_inverse = std::move(inv);
    }
    return out;
}

struct DegreeReport {
    bool pass = true;
    std::int64_t bound = 0;
    std::vector<std::int64_t> image_degrees;
};

// deg_y of every image of the center map is bounded by the Bernstein degree
// bound of the source endomorphism.
inline DegreeReport degree_check(const CenterMap& m) {
    DegreeReport r;
    r.bound = m.source_degree_bound;
    for (const auto& im : m.map.images) {
        std::int64_t deg = im.degree();
        r.image_degrees.push_back(deg);
        if (deg > r.bound) r.pass = false;
    }
    return r;
}

} // namespace weyl
