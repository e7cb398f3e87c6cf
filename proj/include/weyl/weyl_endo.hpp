#pragma once

#include "weyl/weyl_element.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

namespace weyl {

// omega_{ij} for the defining relations [xh_i, xh_j] = omega_{ij},
// 0-based indices in [0, 2n).
inline int omega_entry(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    if (i < n && j == n + i) return -1;
    if (j < n && i == n + j) return 1;
    return 0;
}

struct EndoDefect {
    std::uint32_t i, j;     // generator pair, 0-based
    WeylElement defect;     // [f_i, f_j] - omega_{ij}
};

struct InverseDefect {
    std::uint32_t i;
    bool left;              // true: (inv after f) missed, false: (f after inv)
    WeylElement got;
};

struct EndoReport {
    bool relations_ok = true;
    bool inverse_checked = false;
    bool inverse_ok = true;
    std::vector<EndoDefect> defects;
    std::vector<InverseDefect> inverse_defects;

    bool pass() const { return relations_ok && inverse_ok; }
};

// Endomorphism of A_n given by generator images. Instances hold the result
// of the relation check made at construction; substitution refuses to run
// on images that failed it.
class WeylEndo {
  public:
    static WeylEndo identity(const Ring& ring, std::uint32_t n) {
        std::vector<WeylElement> im;
        for (std::uint32_t i = 0; i < 2 * n; ++i) im.push_back(WeylElement::generator(ring, n, i));
        WeylEndo f(ring, n, std::move(im), std::nullopt);
        f.verified_ = true;
        return f;
    }

    // Checks the defining relations (and the claimed inverse, when given)
    // before handing the endomorphism out; `verified()` records the verdict.
    static WeylEndo make(const Ring& ring, std::uint32_t n, std::vector<WeylElement> images,
                         std::optional<std::vector<WeylElement>> claimed_inverse = std::nullopt);

    const Ring& ring() const { return ring_; }
    std::uint32_t n() const { return n_; }
    const std::vector<WeylElement>& images() const { return images_; }
    const std::optional<std::vector<WeylElement>>& claimed_inverse() const { return inverse_; }
    bool verified() const { return verified_; }

    // max Bernstein degree over the images (and claimed inverse images)
    std::int64_t degree_bound() const {
        std::int64_t d = 0;
        for (const auto& im : images_) d = std::max(d, bernstein_degree(im));
        if (inverse_)
            for (const auto& im : *inverse_) d = std::max(d, bernstein_degree(im));
        return d;
    }

    bool operator==(const WeylEndo& o) const {
        return ring_ == o.ring_ && n_ == o.n_ && images_ == o.images_;
    }

  private:
    friend EndoReport verify_endo(const WeylEndo&);
    friend WeylEndo compose_endo(const WeylEndo&, const WeylEndo&);

    // for composites of verified maps, whose relations hold by functoriality
    static WeylEndo trusted(const Ring& ring, std::uint32_t n, std::vector<WeylElement> images,
                            std::optional<std::vector<WeylElement>> inverse) {
        WeylEndo f(ring, n, std::move(images), std::move(inverse));
        f.verified_ = true;
        return f;
    }

    WeylEndo(Ring ring, std::uint32_t n, std::vector<WeylElement> images,
             std::optional<std::vector<WeylElement>> inverse)
        : ring_(std::move(ring)), n_(n), images_(std::move(images)), inverse_(std::move(inverse)) {
        if (images_.size() != 2 * n_)
            raise(Errc::index_mismatch, "endomorphism needs 2n = " + std::to_string(2 * n_) +
                                            " images, got " + std::to_string(images_.size()));
        for (const auto& im : images_) {
            check_same_ring(ring_, im.ring(), "endo image");
            if (im.n() != n_) raise(Errc::index_mismatch, "endo image has wrong n");
        }
        if (inverse_) {
            if (inverse_->size() != 2 * n_)
                raise(Errc::index_mismatch, "claimed inverse needs 2n images");
            for (const auto& im : *inverse_) {
                check_same_ring(ring_, im.ring(), "endo inverse image");
                if (im.n() != n_) raise(Errc::index_mismatch, "endo inverse image has wrong n");
            }
        }
    }

    Ring ring_;
    std::uint32_t n_;
    std::vector<WeylElement> images_;
    std::optional<std::vector<WeylElement>> inverse_;
    bool verified_ = false;
};

// Substitute xh_j -> f_j through the PBW normal form of a. The factors of
// each monomial are applied left to right in generator order; powers of
// each image are cached.
inline WeylElement apply_endo_unchecked(const WeylEndo& f, const WeylElement& a) {
    check_same_ring(f.ring(), a.ring(), "apply_endo");
    if (f.n() != a.n()) raise(Errc::index_mismatch, "apply_endo: n differs");
    const Ring& ring = f.ring();
    const std::uint32_t n2 = 2 * f.n();
    const WeylElement one = WeylElement::one(ring, f.n());
    std::vector<std::vector<WeylElement>> powers(n2, {one});
    auto power_of = [&](std::uint32_t j, std::uint32_t k) -> const WeylElement& {
        auto& cache = powers[j];
        while (cache.size() <= k) cache.push_back(cache.back() * f.images()[j]);
        return cache[k];
    };
    WeylElement r = WeylElement::zero(ring, f.n());
    for (const auto& [e, c] : a.terms()) {
        WeylElement t = WeylElement::constant(ring, f.n(), c);
        for (std::uint32_t j = 0; j < n2; ++j)
            if (e[j]) t = t * power_of(j, e[j]);
        r = r + t;
    }
    return r;
}

inline WeylElement apply_endo(const WeylEndo& f, const WeylElement& a) {
    if (!f.verified())
        raise(Errc::relation_check_failed,
              "endomorphism failed its relation check; refusing to substitute");
    return apply_endo_unchecked(f, a);
}

inline EndoReport verify_endo(const WeylEndo& f) {
    EndoReport report;
    const Ring& ring = f.ring();
    const std::uint32_t n = f.n();
    for (std::uint32_t i = 0; i < 2 * n; ++i) {
        for (std::uint32_t j = i + 1; j < 2 * n; ++j) {
            WeylElement defect =
                commutator(f.images()[i], f.images()[j]) -
                WeylElement::constant(ring, n, ring.from_integer(omega_entry(n, i, j)));
            if (!defect.is_zero()) {
                report.relations_ok = false;
                report.defects.push_back({i, j, std::move(defect)});
            }
        }
    }
    if (f.claimed_inverse()) {
        report.inverse_checked = true;
        WeylEndo inv(ring, n, *f.claimed_inverse(), std::nullopt);
        for (std::uint32_t i = 0; i < 2 * n; ++i) {
            WeylElement gen = WeylElement::generator(ring, n, i);
            // f then inv: substitute inv through f's image
            WeylElement left = apply_endo_unchecked(inv, f.images()[i]);
            if (left != gen) {
                report.inverse_ok = false;
                report.inverse_defects.push_back({i, true, std::move(left)});
            }
            WeylElement right = apply_endo_unchecked(WeylEndo(ring, n, f.images(), std::nullopt),
                                                     inv.images()[i]);
            if (right != gen) {
                report.inverse_ok = false;
                report.inverse_defects.push_back({i, false, std::move(right)});
            }
        }
    }
    return report;
}

inline WeylEndo WeylEndo::make(const Ring& ring, std::uint32_t n, std::vector<WeylElement> images,
                               std::optional<std::vector<WeylElement>> claimed_inverse) {
    WeylEndo f(ring, n, std::move(images), std::move(claimed_inverse));
    f.verified_ = verify_endo(f).pass();
    return f;
}

// compose(f, g): images of the result are f's images with g's substituted
// in, so apply(compose(f, g), a) = apply(g, apply(f, a)). Relations of the
// composite hold because both factors are verified homs, so no re-check
// runs here.
inline WeylEndo compose_endo(const WeylEndo& f, const WeylEndo& g) {
    check_same_ring(f.ring(), g.ring(), "compose_endo");
    if (f.n() != g.n()) raise(Errc::index_mismatch, "compose_endo: n differs");
    if (!f.verified() || !g.verified())
        raise(Errc::relation_check_failed, "compose_endo requires verified endomorphisms");
    std::vector<WeylElement> images;
    images.reserve(2 * f.n());
    for (const auto& im : f.images()) images.push_back(apply_endo(g, im));
    std::optional<std::vector<WeylElement>> inverse;
    if (f.claimed_inverse() && g.claimed_inverse()) {
        WeylEndo finv = WeylEndo::trusted(f.ring(), f.n(), *f.claimed_inverse(), std::nullopt);
        std::vector<WeylElement> inv;
        inv.reserve(2 * f.n());
        for (const auto& im : *g.claimed_inverse()) inv.push_back(apply_endo(finv, im));
        inverse = std::move(inv);
    }
    return WeylEndo::trusted(f.ring(), f.n(), std::move(images), std::move(inverse));
}

} // namespace weyl
