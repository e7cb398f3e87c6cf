#pragma once

#include "weyl/multiindex.hpp"
#include "weyl/ring.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace weyl {

// Commutative polynomial in nvars variables, sparse normal form: term map
// keyed by exponent, no zero coefficients stored.
class PolyElement {
  public:
    using TermMap = std::map<MultiIndex, RingValue>;

    PolyElement(Ring ring, std::uint32_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

    static PolyElement zero(const Ring& ring, std::uint32_t nvars) { return PolyElement(ring, nvars); }

    static PolyElement constant(const Ring& ring, std::uint32_t nvars, const RingValue& c) {
        PolyElement r(ring, nvars);
        r.add_term(MultiIndex(nvars, 0u), c);
        return r;
    }

    static PolyElement variable(const Ring& ring, std::uint32_t nvars, std::uint32_t i) {
        if (i >= nvars)
            raise(Errc::index_mismatch,
                  "variable index " + std::to_string(i) + " out of range for nvars=" + std::to_string(nvars));
        MultiIndex e(nvars, 0u);
        e[i] = 1;
        PolyElement r(ring, nvars);
        r.add_term(e, ring.one());
        return r;
    }

    const Ring& ring() const { return ring_; }
    std::uint32_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& e, const RingValue& c) {
        if (e.size() != nvars_)
            raise(Errc::index_mismatch, "exponent length " + std::to_string(e.size()) +
                                            " does not match nvars=" + std::to_string(nvars_));
        if (ring_.is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    RingValue coefficient(const MultiIndex& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    std::int64_t degree() const {
        if (terms_.empty()) return kDegNegInf;
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_) {
            std::uint64_t td = total_degree(e);
            if (td > d) d = td;
        }
        return static_cast<std::int64_t>(d);
    }

    bool operator==(const PolyElement&) const = default;

  private:
    Ring ring_;
    std::uint32_t nvars_;
    TermMap terms_;
};

inline void check_compatible(const PolyElement& a, const PolyElement& b, const char* where) {
    check_same_ring(a.ring(), b.ring(), where);
    if (a.nvars() != b.nvars())
        raise(Errc::index_mismatch, std::string(where) + ": variable counts differ (" +
                                        std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
}

inline PolyElement operator+(const PolyElement& a, const PolyElement& b) {
    check_compatible(a, b, "poly add");
    PolyElement r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

inline PolyElement operator-(const PolyElement& a) {
    PolyElement r(a.ring(), a.nvars());
    for (const auto& [e, c] : a.terms()) r.add_term(e, a.ring().neg(c));
    return r;
}

inline PolyElement operator-(const PolyElement& a, const PolyElement& b) { return a + (-b); }

inline PolyElement operator*(const PolyElement& a, const PolyElement& b) {
    check_compatible(a, b, "poly mul");
    PolyElement r(a.ring(), a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term(exp_add(ea, eb), a.ring().mul(ca, cb));
    return r;
}

inline PolyElement scale(const PolyElement& a, const RingValue& c) {
    PolyElement r(a.ring(), a.nvars());
    for (const auto& [e, v] : a.terms()) r.add_term(e, a.ring().mul(v, c));
    return r;
}

// Repeated multiplication, same rationale as weyl_pow: the bases raised to
// large powers here are sparse, and squaring the intermediates costs more
// than k small products.
inline PolyElement poly_pow(const PolyElement& a, std::uint64_t k) {
    PolyElement acc = PolyElement::constant(a.ring(), a.nvars(), a.ring().one());
    for (std::uint64_t i = 0; i < k; ++i) acc = acc * a;
    return acc;
}

// d/dx_i
inline PolyElement derivative(const PolyElement& a, std::uint32_t i) {
    if (i >= a.nvars())
        raise(Errc::index_mismatch, "derivative index out of range");
    PolyElement r(a.ring(), a.nvars());
    for (const auto& [e, c] : a.terms()) {
        if (e[i] == 0) continue;
        MultiIndex e2 = e;
        e2[i] -= 1;
        r.add_term(e2, a.ring().mul_integer(c, Integer(e[i])));
    }
    return r;
}

// Simultaneous substitution x_i -> images[i]. Images live in their own
// (shared) variable count; powers are cached per variable.
inline PolyElement substitute(const PolyElement& a, const std::vector<PolyElement>& images) {
    if (images.size() != a.nvars())
        raise(Errc::index_mismatch, "substitute: expected " + std::to_string(a.nvars()) + " images, got " +
                                        std::to_string(images.size()));
    const Ring& ring = a.ring();
    if (images.empty()) return a;
    std::uint32_t out_vars = images[0].nvars();
    for (const auto& im : images) {
        check_same_ring(ring, im.ring(), "substitute");
        if (im.nvars() != out_vars)
            raise(Errc::index_mismatch, "substitute: image variable counts differ");
    }
    const PolyElement one = PolyElement::constant(ring, out_vars, ring.one());
    std::vector<std::vector<PolyElement>> powers(images.size(), {one});
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const PolyElement& {
        auto& cache = powers[i];
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    PolyElement r(ring, out_vars);
    for (const auto& [e, c] : a.terms()) {
        PolyElement t = PolyElement::constant(ring, out_vars, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (e[i]) t = t * power_of(i, e[i]);
        r = r + t;
    }
    return r;
}

} // namespace weyl
