#pragma once

#include "weyl/multiindex.hpp"
#include "weyl/poly.hpp"
#include "weyl/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace weyl {

// Element of the Weyl algebra A_n over a commutative ring, kept in PBW
// normal form: sum of terms c * xh_1^{a_1} ... xh_{2n}^{a_{2n}} with the
// generators ordered by index. Generators satisfy [xh_i, xh_j] = omega_{ij}
// with omega(i, n+i) = -1 and omega(n+i, i) = +1 (0-based i < n), i.e. the
// first n generators are positions and the last n are derivations.
class WeylElement {
  public:
    using TermMap = std::map<MultiIndex, RingValue>;

    WeylElement(Ring ring, std::uint32_t n) : ring_(std::move(ring)), n_(n) {}

    static WeylElement zero(const Ring& ring, std::uint32_t n) { return WeylElement(ring, n); }

    static WeylElement constant(const Ring& ring, std::uint32_t n, const RingValue& c) {
        WeylElement r(ring, n);
        r.add_term(MultiIndex(2 * n, 0u), c);
        return r;
    }

    static WeylElement one(const Ring& ring, std::uint32_t n) { return constant(ring, n, ring.one()); }

    // i-th generator xh_i, 0 <= i < 2n
    static WeylElement generator(const Ring& ring, std::uint32_t n, std::uint32_t i) {
        if (i >= 2 * n)
            raise(Errc::index_mismatch,
                  "generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
        MultiIndex e(2 * n, 0u);
        e[i] = 1;
        WeylElement r(ring, n);
        r.add_term(e, ring.one());
        return r;
    }

    const Ring& ring() const { return ring_; }
    std::uint32_t n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& e, const RingValue& c) {
        if (e.size() != 2 * n_)
            raise(Errc::index_mismatch, "exponent length " + std::to_string(e.size()) +
                                            " does not match 2n=" + std::to_string(2 * n_));
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

    bool operator==(const WeylElement&) const = default;

  private:
    Ring ring_;
    std::uint32_t n_;
    TermMap terms_;
};

inline void check_compatible(const WeylElement& a, const WeylElement& b, const char* where) {
    check_same_ring(a.ring(), b.ring(), where);
    if (a.n() != b.n())
        raise(Errc::index_mismatch, std::string(where) + ": n differs (" + std::to_string(a.n()) +
                                        " vs " + std::to_string(b.n()) + ")");
}

inline WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    check_compatible(a, b, "weyl add");
    WeylElement r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

inline WeylElement operator-(const WeylElement& a) {
    WeylElement r(a.ring(), a.n());
    for (const auto& [e, c] : a.terms()) r.add_term(e, a.ring().neg(c));
    return r;
}

inline WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + (-b); }

inline WeylElement scale(const WeylElement& a, const RingValue& c) {
    WeylElement r(a.ring(), a.n());
    for (const auto& [e, v] : a.terms()) r.add_term(e, a.ring().mul(v, c));
    return r;
}

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// factorials mod p up to min(p, maxexp + 1); enough for every factorial and
// base-p digit that the contraction factors can ask for
struct ModPTables {
    std::uint64_t p;
    std::vector<std::uint64_t> fact, ifact;

    ModPTables(std::uint64_t p_, std::uint64_t maxexp) : p(p_) {
        const std::uint64_t size = std::min<std::uint64_t>(p, maxexp + 1);
        fact.resize(size);
        ifact.resize(size);
        fact[0] = 1 % p;
        for (std::uint64_t i = 1; i < size; ++i) fact[i] = fact[i - 1] * (i % p) % p;
        ifact[size - 1] = pow_mod(fact[size - 1], p - 2, p);
        for (std::uint64_t i = size - 1; i > 0; --i) ifact[i - 1] = ifact[i] * (i % p) % p;
    }

    // C(a, k) mod p via the base-p digit product
    std::uint64_t binom(std::uint64_t a, std::uint64_t k) const {
        if (k > a) return 0;
        std::uint64_t r = 1 % p;
        while (a | k) {
            const std::uint64_t ad = a % p, kd = k % p;
            if (kd > ad) return 0;
            r = r * fact[ad] % p * ifact[kd] % p * ifact[ad - kd] % p;
            a /= p;
            k /= p;
        }
        return r;
    }
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& e) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t v : e) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Variant of the mod-p product for 2n <= 4 with all exponents below 2^16:
// exponent vectors pack into one uint64 with generator 0 in the high bits,
// so integer order on keys is lex order on exponents and accumulation runs
// on machine words end to end.
inline WeylElement mul_prime_field_packed(const WeylElement& a, const WeylElement& b,
                                          const ModPTables& tab) {
    const Ring& ring = a.ring();
    const std::uint64_t p = tab.p;
    const std::uint32_t n = a.n();
    const std::uint32_t width = 2 * n;
    const auto shift = [width](std::uint32_t j) { return 16 * (width - 1 - j); };

    std::unordered_map<std::uint64_t, std::uint64_t> acc;
    acc.reserve(std::min<std::size_t>(a.terms().size() * b.terms().size(), std::size_t(1) << 20));
    for (const auto& [alpha, ca] : a.terms()) {
        const std::uint64_t ua = static_cast<std::uint64_t>(std::get<Integer>(ca));
        for (const auto& [beta, cb] : b.terms()) {
            const std::uint64_t c = ua * static_cast<std::uint64_t>(std::get<Integer>(cb)) % p;
            if (!c) continue;

            boost::container::small_vector<std::uint32_t, 8> active, kmax;
            for (std::uint32_t i = 0; i < n; ++i)
                if (alpha[n + i] > 0 && beta[i] > 0) {
                    active.push_back(i);
                    std::uint64_t m = std::min(alpha[n + i], beta[i]);
                    kmax.push_back(static_cast<std::uint32_t>(std::min(m, p - 1)));
                }

            std::uint64_t gamma = 0;
            for (std::uint32_t j = 0; j < width; ++j)
                gamma |= static_cast<std::uint64_t>(alpha[j] + beta[j]) << shift(j);

            boost::container::small_vector<std::uint32_t, 8> k(active.size(), 0u);
            for (;;) {
                std::uint64_t factor = 1 % p;
                std::uint64_t g = gamma;
                for (std::size_t j = 0; j < active.size() && factor; ++j) {
                    const std::uint32_t i = active[j];
                    const std::uint32_t kj = k[j];
                    if (kj) {
                        factor = factor * tab.binom(alpha[n + i], kj) % p;
                        factor = factor * tab.binom(beta[i], kj) % p * tab.fact[kj] % p;
                        g -= static_cast<std::uint64_t>(kj) << shift(i);
                        g -= static_cast<std::uint64_t>(kj) << shift(n + i);
                    }
                }
                if (factor) {
                    std::uint64_t& slot = acc[g];
                    slot = (slot + c * factor) % p;
                }

                std::size_t j = 0;
                for (; j < active.size(); ++j) {
                    if (k[j] < kmax[j]) {
                        ++k[j];
                        break;
                    }
                    k[j] = 0;
                }
                if (j == active.size()) break;
            }
        }
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
    entries.reserve(acc.size());
    for (const auto& [e, v] : acc)
        if (v) entries.emplace_back(e, v);
    std::sort(entries.begin(), entries.end());
    WeylElement r(ring, n);
    MultiIndex e(width, 0u);
    for (const auto& [key, v] : entries) {
        for (std::uint32_t j = 0; j < width; ++j)
            e[j] = static_cast<std::uint32_t>((key >> shift(j)) & 0xffffu);
        r.add_term(e, Integer(v));
    }
    return r;
}

// PBW product over F_p in machine words. Exact: residues stay below 2^32,
// so every intermediate product fits in 64 bits, and contraction states
// with k >= p are skipped because k! vanishes mod p. Terms accumulate in a
// hash map and are sorted once at the end; ordered insertion dominates the
// cost on large supports otherwise.
inline WeylElement mul_prime_field(const WeylElement& a, const WeylElement& b) {
    const Ring& ring = a.ring();
    const std::uint64_t p = static_cast<std::uint64_t>(ring.characteristic());
    const std::uint32_t n = a.n();
    std::uint64_t maxexp = 0;
    for (const auto& [e, c] : a.terms())
        for (std::uint32_t v : e) maxexp = std::max<std::uint64_t>(maxexp, v);
    for (const auto& [e, c] : b.terms())
        for (std::uint32_t v : e) maxexp = std::max<std::uint64_t>(maxexp, v);
    const ModPTables tab(p, maxexp);
    if (2 * n <= 4 && 2 * maxexp < (1u << 16)) return mul_prime_field_packed(a, b, tab);

    std::unordered_map<MultiIndex, std::uint64_t, MultiIndexHash> acc;
    acc.reserve(std::min<std::size_t>(a.terms().size() * b.terms().size(), std::size_t(1) << 20));
    for (const auto& [alpha, ca] : a.terms()) {
        const std::uint64_t ua = static_cast<std::uint64_t>(std::get<Integer>(ca));
        for (const auto& [beta, cb] : b.terms()) {
            const std::uint64_t c  = ua * static_cast<std::uint64_t>(std::get<Integer>(cb)) % p;
            if (!c) continue;

            boost::container::small_vector<std::uint32_t, 8> active, kmax;
            for (std::uint32_t i = 0; i < n; ++i)
                if (alpha[n + i] > 0 && beta[i] > 0) {
                    active.push_back(i);
                    std::uint64_t m = std::min(alpha[n + i], beta[i]);
                    kmax.push_back(static_cast<std::uint32_t>(std::min(m, p - 1)));
                }

            MultiIndex gamma(2 * n, 0u);
            for (std::uint32_t j = 0; j < 2 * n; ++j) gamma[j] = alpha[j] + beta[j];

            boost::container::small_vector<std::uint32_t, 8> k(active.size(), 0u);
            for (;;) {
                std::uint64_t factor = 1 % p;
                MultiIndex g = gamma;
                for (std::size_t j = 0; j < active.size() && factor; ++j) {
                    const std::uint32_t i = active[j];
                    const std::uint32_t kj = k[j];
                    if (kj) {
                        factor = factor * tab.binom(alpha[n + i], kj) % p;
                        factor = factor * tab.binom(beta[i], kj) % p * tab.fact[kj] % p;
                        g[i] -= kj;
                        g[n + i] -= kj;
                    }
                }
                if (factor) {
                    std::uint64_t& slot = acc[g];
                    slot = (slot + c * factor) % p;
                }

                std::size_t j = 0;
                for (; j < active.size(); ++j) {
                    if (k[j] < kmax[j]) {
                        ++k[j];
                        break;
                    }
                    k[j] = 0;
                }
                if (j == active.size()) break;
            }
        }
    }

    std::vector<std::pair<MultiIndex, std::uint64_t>> entries;
    entries.reserve(acc.size());
    for (auto& [e, v] : acc)
        if (v) entries.emplace_back(e, v);
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    WeylElement r(ring, n);
    for (const auto& [e, v] : entries) r.add_term(e, Integer(v));
    return r;
}

} // namespace detail

// PBW product. For one conjugate pair the contraction rule is
//   d^a x^b = sum_k C(a,k) C(b,k) k! x^{b-k} d^{a-k},
// so multiplying normal monomials xh^alpha * xh^beta contracts each
// derivation power alpha_{n+i} against the position power beta_i
// independently:
//   xh^alpha xh^beta =
//     sum_{k} prod_i C(alpha_{n+i},k_i) C(beta_i,k_i) k_i!  xh^{gamma(k)},
//   gamma_i = alpha_i + beta_i - k_i,  gamma_{n+i} = alpha_{n+i} + beta_{n+i} - k_i.
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    check_compatible(a, b, "weyl mul");
    const Ring& ring = a.ring();
    if (ring.kind() == RingKind::prime_field && ring.modulus() < (Integer(1) << 32))
        return detail::mul_prime_field(a, b);
    const std::uint32_t n = a.n();
    WeylElement r(ring, n);
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            RingValue cd = ring.mul(ca, cb);
            if (ring.is_zero(cd)) continue;

            // pairs that actually contract
            boost::container::small_vector<std::uint32_t, 8> active;
            for (std::uint32_t i = 0; i < n; ++i)
                if (alpha[n + i] > 0 && beta[i] > 0) active.push_back(i);

            MultiIndex gamma(2 * n, 0u);
            for (std::uint32_t j = 0; j < 2 * n; ++j) gamma[j] = alpha[j] + beta[j];

            if (active.empty()) {
                r.add_term(gamma, cd);
                continue;
            }

            boost::container::small_vector<std::uint32_t, 8> k(active.size(), 0u);
            for (;;) {
                Integer factor = 1;
                MultiIndex g = gamma;
                for (std::size_t j = 0; j < active.size(); ++j) {
                    const std::uint32_t i = active[j];
                    const std::uint32_t kj = k[j];
                    if (kj) {
                        factor *= binomial(alpha[n + i], kj) * binomial(beta[i], kj) * factorial(kj);
                        g[i] -= kj;
                        g[n + i] -= kj;
                    }
                }
                r.add_term(g, ring.mul_integer(cd, factor));

                // odometer over 0 <= k_j <= min(alpha_{n+i}, beta_i)
                std::size_t j = 0;
                for (; j < active.size(); ++j) {
                    const std::uint32_t i = active[j];
                    if (k[j] < std::min(alpha[n + i], beta[i])) {
                        ++k[j];
                        break;
                    }
                    k[j] = 0;
                }
                if (j == active.size()) break;
            }
        }
    }
    return r;
}

inline WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

namespace detail {

// Monomials commute exactly when no derivation power of either meets a
// position power of the other on the same conjugate pair.
inline bool monomials_commute(const MultiIndex& s, const MultiIndex& t, std::uint32_t n) {
    for (std::uint32_t i = 0; i < n; ++i) {
        if (s[n + i] > 0 && t[i] > 0) return false;
        if (t[n + i] > 0 && s[i] > 0) return false;
    }
    return true;
}

// Partition the support into blocks that pairwise commute (union-find over
// the non-commuting relation).
inline std::vector<WeylElement> commuting_blocks(const WeylElement& a) {
    std::vector<const MultiIndex*> exps;
    std::vector<const RingValue*> coeffs;
    for (const auto& [e, c] : a.terms()) {
        exps.push_back(&e);
        coeffs.push_back(&c);
    }
    std::vector<std::size_t> parent(exps.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    const std::uint32_t n = a.n();
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = i + 1; j < exps.size(); ++j)
            if (!monomials_commute(*exps[i], *exps[j], n)) parent[find(i)] = find(j);
    std::map<std::size_t, WeylElement> blocks;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        auto [it, fresh] = blocks.try_emplace(find(i), WeylElement(a.ring(), n));
        it->second.add_term(*exps[i], *coeffs[i]);
    }
    std::vector<WeylElement> out;
    for (auto& [root, b] : blocks) out.push_back(std::move(b));
    return out;
}

} // namespace detail

// Repeated multiplication with the base kept on the right. For the p-th
// powers taken when computing center coordinates the base is sparse and of
// low degree, so this costs k small products; binary squaring would square
// the large intermediate elements instead, which is far more expensive.
//
// When k equals the (prime) characteristic, the support first splits into
// mutually commuting blocks: for commuting u, v the cross terms of
// (u + v)^p carry binomials C(p, j), 0 < j < p, which vanish in
// characteristic p, so a^p is the sum of the block p-th powers.
inline WeylElement weyl_pow(const WeylElement& a, std::uint64_t k) {
    if (k >= 2 && a.ring().has_prime_characteristic() &&
        a.ring().characteristic() == Integer(k)) {
        std::vector<WeylElement> blocks = detail::commuting_blocks(a);
        if (blocks.size() > 1) {
            WeylElement r = WeylElement::zero(a.ring(), a.n());
            for (const auto& b : blocks) r = r + weyl_pow(b, k);
            return r;
        }
    }
    WeylElement acc = WeylElement::one(a.ring(), a.n());
    for (std::uint64_t i = 0; i < k; ++i) acc = acc * a;
    return acc;
}

// ad(a)^k (u) = [a, [a, ... [a, u]]]
inline WeylElement ad_power(const WeylElement& a, const WeylElement& u, std::uint64_t k) {
    WeylElement r = u;
    for (std::uint64_t i = 0; i < k; ++i) r = commutator(a, r);
    return r;
}

// Bernstein filtration degree (total degree of the PBW normal form);
// kDegNegInf for the zero element.
inline std::int64_t bernstein_degree(const WeylElement& a) {
    if (a.is_zero()) return kDegNegInf;
    std::uint64_t d = 0;
    for (const auto& [e, c] : a.terms()) {
        std::uint64_t td = total_degree(e);
        if (td > d) d = td;
    }
    return static_cast<std::int64_t>(d);
}

// Inject a commutative polynomial monomial-by-monomial; exponents carry
// over unchanged. A hom on the position subalgebra (vars 0..n-1), and the
// exponent-wise inverse of taking central coordinates.
inline WeylElement weyl_from_poly(const PolyElement& p, std::uint32_t n) {
    if (p.nvars() != 2 * n)
        raise(Errc::index_mismatch, "weyl_from_poly: expected a polynomial in 2n variables");
    WeylElement r(p.ring(), n);
    for (const auto& [e, c] : p.terms()) r.add_term(e, c);
    return r;
}

// F(x_1..x_n) as an element of A_n (positions commute, so this is a hom).
inline WeylElement weyl_from_position_poly(const PolyElement& f, std::uint32_t n) {
    if (f.nvars() != n)
        raise(Errc::index_mismatch, "weyl_from_position_poly: expected a polynomial in n variables");
    WeylElement r(f.ring(), n);
    for (const auto& [e, c] : f.terms()) {
        MultiIndex e2(2 * n, 0u);
        for (std::uint32_t i = 0; i < n; ++i) e2[i] = e[i];
        r.add_term(e2, c);
    }
    return r;
}

} // namespace weyl
