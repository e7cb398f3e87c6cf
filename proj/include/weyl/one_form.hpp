#pragma once

#include "weyl/poisson.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace weyl {

// Polynomial differential one-form sum_i c_i dx_i on affine 2n-space.
struct PolyOneForm {
    Ring ring;
    std::uint32_t n = 0;
    std::vector<PolyElement> components; // 2n entries, each in 2n variables

    static PolyOneForm zero(const Ring& ring, std::uint32_t n) {
        PolyOneForm f{ring, n, {}};
        for (std::uint32_t i = 0; i < 2 * n; ++i)
            f.components.push_back(PolyElement::zero(ring, 2 * n));
        return f;
    }

    void validate() const {
        if (components.size() != 2 * n)
            raise(Errc::index_mismatch, "one-form needs 2n components");
        for (const auto& c : components) {
            check_same_ring(ring, c.ring(), "one-form component");
            if (c.nvars() != 2 * n) raise(Errc::index_mismatch, "one-form component has wrong arity");
        }
    }

    bool operator==(const PolyOneForm&) const = default;
};

inline PolyOneForm operator+(const PolyOneForm& a, const PolyOneForm& b) {
    check_same_ring(a.ring, b.ring, "one-form add");
    if (a.n != b.n) raise(Errc::index_mismatch, "one-form add: n differs");
    PolyOneForm r = a;
    for (std::uint32_t i = 0; i < 2 * a.n; ++i) r.components[i] = r.components[i] + b.components[i];
    return r;
}

inline PolyOneForm operator-(const PolyOneForm& a, const PolyOneForm& b) {
    check_same_ring(a.ring, b.ring, "one-form sub");
    if (a.n != b.n) raise(Errc::index_mismatch, "one-form sub: n differs");
    PolyOneForm r = a;
    for (std::uint32_t i = 0; i < 2 * a.n; ++i) r.components[i] = r.components[i] - b.components[i];
    return r;
}

// exterior differential of a function
inline PolyOneForm d(const PolyElement& f, std::uint32_t n) {
    if (f.nvars() != 2 * n) raise(Errc::index_mismatch, "d: expected 2n variables");
    PolyOneForm r{f.ring(), n, {}};
    for (std::uint32_t i = 0; i < 2 * n; ++i) r.components.push_back(derivative(f, i));
    return r;
}

// g^* theta: component j picks up sum_i (theta_i o g) dg_i/dx_j.
inline PolyOneForm pullback(const PolyMap& g, const PolyOneForm& theta) {
    check_same_ring(g.ring, theta.ring, "pullback");
    if (g.n != theta.n) raise(Errc::index_mismatch, "pullback: n differs");
    g.validate();
    theta.validate();
    PolyOneForm r = PolyOneForm::zero(g.ring, g.n);
    for (std::uint32_t i = 0; i < 2 * g.n; ++i) {
        PolyElement pulled = substitute(theta.components[i], g.images);
        if (pulled.is_zero()) continue;
        for (std::uint32_t j = 0; j < 2 * g.n; ++j) {
            PolyElement dgi = derivative(g.images[i], j);
            if (!dgi.is_zero()) r.components[j] = r.components[j] + pulled * dgi;
        }
    }
    return r;
}

// the tautological form sum_i y_i dy_{n+i}
inline PolyOneForm tautological_form(const Ring& ring, std::uint32_t n) {
    PolyOneForm r = PolyOneForm::zero(ring, n);
    for (std::uint32_t i = 0; i < n; ++i)
        r.components[n + i] = PolyElement::variable(ring, 2 * n, i);
    return r;
}

inline bool is_closed(const PolyOneForm& theta) {
    theta.validate();
    for (std::uint32_t i = 0; i < 2 * theta.n; ++i)
        for (std::uint32_t j = i + 1; j < 2 * theta.n; ++j)
            if (derivative(theta.components[i], j) != derivative(theta.components[j], i)) return false;
    return true;
}

// Primitive P with dP = theta and P(0) = 0, via the Euler identity: for the
// homogeneous piece of degree d of E = sum_i x_i theta_i, P_d = E_d / d.
// Exactness can fail beyond closedness only through those divisions, so a
// residual mismatch after assembling P is reported as a denominator problem.
inline PolyElement primitive_of_exact(const PolyOneForm& theta) {
    theta.validate();
    if (!is_closed(theta)) {
        for (std::uint32_t i = 0; i < 2 * theta.n; ++i)
            for (std::uint32_t j = i + 1; j < 2 * theta.n; ++j)
                if (derivative(theta.components[i], j) != derivative(theta.components[j], i))
                    raise(Errc::not_closed, "d(theta) has a nonzero (" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ") component");
    }
    const Ring& ring = theta.ring;
    const std::uint32_t nv = 2 * theta.n;
    PolyElement euler(ring, nv);
    for (std::uint32_t i = 0; i < nv; ++i)
        euler = euler + theta.components[i] * PolyElement::variable(ring, nv, i);

    PolyElement p(ring, nv);
    for (const auto& [e, c] : euler.terms()) {
        Integer deg = total_degree(e);
        auto q = ring.divide_by_integer(c, deg);
        if (!q)
            raise(Errc::non_invertible_denominator,
                  "homogeneous degree " + deg.str() + " is not invertible in " + ring.name());
        p.add_term(e, *q);
    }
    if (!(d(p, theta.n) == theta))
        raise(Errc::non_invertible_denominator,
              "theta has exact content killed by the Euler operator in " + ring.name() +
                  " (degree divisible by the characteristic)");
    return p;
}

} // namespace weyl
