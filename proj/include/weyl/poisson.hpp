#pragma once

#include "weyl/poly.hpp"
#include "weyl/weyl_endo.hpp" // omega_entry

#include <cstdint>
#include <optional>
#include <vector>

namespace weyl {

// Polynomial map of affine 2n-space, stored by generator images. Used both
// for Poisson automorphisms of P_n and for maps of the center (y-variables);
// the bracket structure is the same omega as on the Weyl side.
struct PolyMap {
    Ring ring;
    std::uint32_t n = 0;
    std::vector<PolyElement> images; // 2n entries, each in 2n variables
    std::optional<std::vector<PolyElement>> claimed_inverse;

    static PolyMap identity(const Ring& ring, std::uint32_t n) {
        PolyMap g{ring, n, {}, std::nullopt};
        for (std::uint32_t i = 0; i < 2 * n; ++i)
            g.images.push_back(PolyElement::variable(ring, 2 * n, i));
        return g;
    }

    void validate() const {
        if (images.size() != 2 * n)
            raise(Errc::index_mismatch, "polynomial map needs 2n = " + std::to_string(2 * n) +
                                            " images, got " + std::to_string(images.size()));
        for (const auto& im : images) {
            check_same_ring(ring, im.ring(), "poly map image");
            if (im.nvars() != 2 * n) raise(Errc::index_mismatch, "poly map image has wrong arity");
        }
        if (claimed_inverse) {
            if (claimed_inverse->size() != 2 * n)
                raise(Errc::index_mismatch, "claimed inverse needs 2n images");
            for (const auto& im : *claimed_inverse) {
                check_same_ring(ring, im.ring(), "poly map inverse image");
                if (im.nvars() != 2 * n) raise(Errc::index_mismatch, "poly map inverse has wrong arity");
            }
        }
    }

    std::int64_t degree_bound() const {
        std::int64_t d = 0;
        for (const auto& im : images) d = std::max(d, im.degree());
        if (claimed_inverse)
            for (const auto& im : *claimed_inverse) d = std::max(d, im.degree());
        return d;
    }

    bool operator==(const PolyMap& o) const {
        return ring == o.ring && n == o.n && images == o.images;
    }
};

// {a, b} with {x_i, x_j} = omega_{ij}: sum over conjugate pairs of
// da/dx_{n+i} db/dx_i - da/dx_i db/dx_{n+i}.
inline PolyElement poisson_bracket(const PolyElement& a, const PolyElement& b, std::uint32_t n) {
    check_compatible(a, b, "poisson_bracket");
    if (a.nvars() != 2 * n) raise(Errc::index_mismatch, "poisson_bracket: expected 2n variables");
    PolyElement r(a.ring(), a.nvars());
    for (std::uint32_t i = 0; i < n; ++i) {
        r = r + derivative(a, n + i) * derivative(b, i);
        r = r - derivative(a, i) * derivative(b, n + i);
    }
    return r;
}

inline PolyElement apply_map(const PolyMap& g, const PolyElement& a) {
    if (a.nvars() != 2 * g.n) raise(Errc::index_mismatch, "apply_map: arity mismatch");
    return substitute(a, g.images);
}

// compose(g, h): h's images substituted into g's; on points the composite
// evaluates h first, i.e. T_{compose(g,h)} = T_g after T_h.
inline PolyMap compose_maps(const PolyMap& g, const PolyMap& h) {
    check_same_ring(g.ring, h.ring, "compose_maps");
    if (g.n != h.n) raise(Errc::index_mismatch, "compose_maps: n differs");
    PolyMap r{g.ring, g.n, {}, std::nullopt};
    for (const auto& im : g.images) r.images.push_back(substitute(im, h.images));
    if (g.claimed_inverse && h.claimed_inverse) {
        std::vector<PolyElement> inv;
        for (const auto& im : *h.claimed_inverse) inv.push_back(substitute(im, *g.claimed_inverse));
        r.claimed_inverse = std::move(inv);
    }
    return r;
}

struct SymplectoDefect {
    std::uint32_t i, j;
    PolyElement defect; // {g_i, g_j} - omega_{ij}
};

struct SymplectoReport {
    bool brackets_ok = true;
    bool inverse_checked = false;
    bool inverse_ok = true;
    std::vector<SymplectoDefect> defects;
    std::vector<std::uint32_t> inverse_defects; // generator indices that fail

    bool pass() const { return brackets_ok && inverse_ok; }
};

inline SymplectoReport check_symplecto(const PolyMap& g) {
    g.validate();
    SymplectoReport report;
    for (std::uint32_t i = 0; i < 2 * g.n; ++i) {
        for (std::uint32_t j = i + 1; j < 2 * g.n; ++j) {
            PolyElement defect =
                poisson_bracket(g.images[i], g.images[j], g.n) -
                PolyElement::constant(g.ring, 2 * g.n, g.ring.from_integer(omega_entry(g.n, i, j)));
            if (!defect.is_zero()) {
                report.brackets_ok = false;
                report.defects.push_back({i, j, std::move(defect)});
            }
        }
    }
    if (g.claimed_inverse) {
        report.inverse_checked = true;
        PolyMap inv{g.ring, g.n, *g.claimed_inverse, std::nullopt};
        for (std::uint32_t i = 0; i < 2 * g.n; ++i) {
            PolyElement var = PolyElement::variable(g.ring, 2 * g.n, i);
            if (substitute(g.images[i], inv.images) != var ||
                substitute(inv.images[i], g.images) != var) {
                report.inverse_ok = false;
                report.inverse_defects.push_back(i);
            }
        }
    }
    return report;
}

} // namespace weyl
