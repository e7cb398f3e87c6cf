#pragma once

#include "weyl/common.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

namespace weyl {

// Sparse univariate polynomial over F_p, exponent -> residue in [0, p).
// Dumb container: all arithmetic goes through Ring, which knows p.
struct FpPoly {
    std::map<std::uint64_t, Integer> coeffs;

    bool operator==(const FpPoly&) const = default;
};

using RingValue = std::variant<Integer, Rational, FpPoly>;

enum class RingKind { integers, rationals, mod_m, prime_field, poly_over_fp };

inline Integer mod_reduce(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of a mod m, or nullopt when gcd(a, m) != 1.
inline std::optional<Integer> inv_mod(const Integer& a, const Integer& m) {
    Integer old_r = mod_reduce(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) return std::nullopt;
    return mod_reduce(old_s, m);
}

// Coefficient ring descriptor. Values are plain variants; every operation
// returns canonical form (residues in [0, m), no stored zero poly coeffs,
// rationals in lowest terms).
class Ring {
  public:
    static Ring integers() { return Ring(RingKind::integers, 0, ""); }
    static Ring rationals() { return Ring(RingKind::rationals, 0, ""); }

    static Ring mod_m(const Integer& m) {
        if (m < 2) raise(Errc::invalid_argument, "IntegersModM requires m >= 2, got m=" + m.str());
        return Ring(RingKind::mod_m, m, "");
    }

    static Ring prime_field(const Integer& p) {
        if (!is_prime(p)) raise(Errc::invalid_argument, "PrimeField requires a prime, got p=" + p.str());
        return Ring(RingKind::prime_field, p, "");
    }

    static Ring poly_over_fp(const Integer& p, const std::string& var) {
        if (!is_prime(p)) raise(Errc::invalid_argument, "PolyOverPrimeField requires a prime, got p=" + p.str());
        if (var.empty()) raise(Errc::invalid_argument, "PolyOverPrimeField requires a variable name");
        return Ring(RingKind::poly_over_fp, p, var);
    }

    RingKind kind() const { return kind_; }
    const Integer& modulus() const { return modulus_; }
    const std::string& variable() const { return var_; }

    // 0 for Z and Q, m for Z/m, p for F_p and F_p[t].
    Integer characteristic() const { return modulus_; }

    bool has_prime_characteristic() const {
        return kind_ == RingKind::prime_field || kind_ == RingKind::poly_over_fp;
    }

    bool operator==(const Ring&) const = default;

    std::string name() const {
        switch (kind_) {
            case RingKind::integers: return "Z";
            case RingKind::rationals: return "Q";
            case RingKind::mod_m: return "Z/" + modulus_.str();
            case RingKind::prime_field: return "F_" + modulus_.str();
            case RingKind::poly_over_fp: return "F_" + modulus_.str() + "[" + var_ + "]";
        }
        return "?";
    }

    RingValue zero() const { return from_integer(0); }
    RingValue one() const { return from_integer(1); }

    RingValue from_integer(const Integer& x) const {
        switch (kind_) {
            case RingKind::integers: return x;
            case RingKind::rationals: return Rational(x);
            case RingKind::mod_m:
            case RingKind::prime_field: return mod_reduce(x, modulus_);
            case RingKind::poly_over_fp: {
                FpPoly f;
                Integer r = mod_reduce(x, modulus_);
                if (r != 0) f.coeffs.emplace(0, r);
                return f;
            }
        }
        return Integer(0);
    }

    RingValue from_rational(const Rational& q) const {
        if (kind_ == RingKind::rationals) return q;
        const Integer num = numerator(q), den = denominator(q);
        if (den == 1) return from_integer(num);
        if (kind_ == RingKind::integers)
            raise(Errc::invalid_argument, "non-integer value " + to_decimal(q) + " in ring Z");
        auto inv = inv_mod(den, modulus_);
        if (!inv)
            raise(Errc::non_invertible_denominator,
                  "denominator " + den.str() + " not invertible mod " + modulus_.str());
        return mul(from_integer(num), from_integer(*inv));
    }

    // t^e over F_p[t]; rejects other rings.
    RingValue monomial(std::uint64_t e, const Integer& c) const {
        if (kind_ != RingKind::poly_over_fp)
            raise(Errc::invalid_argument, "monomial coefficient in non-polynomial ring " + name());
        FpPoly f;
        Integer r = mod_reduce(c, modulus_);
        if (r != 0) f.coeffs.emplace(e, r);
        return f;
    }

    bool is_zero(const RingValue& v) const {
        switch (kind_) {
            case RingKind::integers:
            case RingKind::mod_m:
            case RingKind::prime_field: return std::get<Integer>(v) == 0;
            case RingKind::rationals: return std::get<Rational>(v) == 0;
            case RingKind::poly_over_fp: return std::get<FpPoly>(v).coeffs.empty();
        }
        return false;
    }

    bool equal(const RingValue& a, const RingValue& b) const { return a == b; }

    RingValue add(const RingValue& a, const RingValue& b) const {
        switch (kind_) {
            case RingKind::integers: return std::get<Integer>(a) + std::get<Integer>(b);
            case RingKind::rationals: return std::get<Rational>(a) + std::get<Rational>(b);
            case RingKind::mod_m:
            case RingKind::prime_field:
                return mod_reduce(std::get<Integer>(a) + std::get<Integer>(b), modulus_);
            case RingKind::poly_over_fp: {
                FpPoly r = std::get<FpPoly>(a);
                for (const auto& [e, c] : std::get<FpPoly>(b).coeffs) {
                    Integer s = mod_reduce(r.coeffs[e] + c, modulus_);
                    if (s == 0)
                        r.coeffs.erase(e);
                    else
                        r.coeffs[e] = s;
                }
                return r;
            }
        }
        return a;
    }

    RingValue neg(const RingValue& v) const {
        switch (kind_) {
            case RingKind::integers: return -std::get<Integer>(v);
            case RingKind::rationals: return -std::get<Rational>(v);
            case RingKind::mod_m:
            case RingKind::prime_field: return mod_reduce(-std::get<Integer>(v), modulus_);
            case RingKind::poly_over_fp: {
                FpPoly r;
                for (const auto& [e, c] : std::get<FpPoly>(v).coeffs)
                    r.coeffs.emplace(e, modulus_ - c);
                return r;
            }
        }
        return v;
    }

    RingValue sub(const RingValue& a, const RingValue& b) const { return add(a, neg(b)); }

    RingValue mul(const RingValue& a, const RingValue& b) const {
        switch (kind_) {
            case RingKind::integers: return std::get<Integer>(a) * std::get<Integer>(b);
            case RingKind::rationals: return std::get<Rational>(a) * std::get<Rational>(b);
            case RingKind::mod_m:
            case RingKind::prime_field:
                return mod_reduce(std::get<Integer>(a) * std::get<Integer>(b), modulus_);
            case RingKind::poly_over_fp: {
                FpPoly r;
                for (const auto& [ea, ca] : std::get<FpPoly>(a).coeffs)
                    for (const auto& [eb, cb] : std::get<FpPoly>(b).coeffs) {
                        Integer s = mod_reduce(r.coeffs[ea + eb] + ca * cb, modulus_);
                        if (s == 0)
                            r.coeffs.erase(ea + eb);
                        else
                            r.coeffs[ea + eb] = s;
                    }
                return r;
            }
        }
        return a;
    }

    RingValue mul_integer(const RingValue& v, const Integer& k) const {
        return mul(v, from_integer(k));
    }

    RingValue pow(const RingValue& v, std::uint64_t e) const {
        RingValue acc = one();
        RingValue base = v;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    std::optional<RingValue> inverse(const RingValue& v) const {
        switch (kind_) {
            case RingKind::integers: {
                const Integer& x = std::get<Integer>(v);
                if (x == 1 || x == -1) return v;
                return std::nullopt;
            }
            case RingKind::rationals: {
                const Rational& q = std::get<Rational>(v);
                if (q == 0) return std::nullopt;
                return Rational(denominator(q), numerator(q));
            }
            case RingKind::mod_m:
            case RingKind::prime_field: {
                auto inv = inv_mod(std::get<Integer>(v), modulus_);
                if (!inv) return std::nullopt;
                return RingValue(*inv);
            }
            case RingKind::poly_over_fp: {
                const FpPoly& f = std::get<FpPoly>(v);
                if (f.coeffs.size() != 1 || f.coeffs.begin()->first != 0) return std::nullopt;
                return monomial(0, *inv_mod(f.coeffs.begin()->second, modulus_));
            }
        }
        return std::nullopt;
    }

    // v / d for an integer d; nullopt when the division is not exact / d is
    // not invertible. Used when integrating homogeneous components.
    std::optional<RingValue> divide_by_integer(const RingValue& v, const Integer& d) const {
        if (d == 0) return std::nullopt;
        switch (kind_) {
            case RingKind::integers: {
                const Integer& x = std::get<Integer>(v);
                if (x % d != 0) return std::nullopt;
                return RingValue(Integer(x / d));
            }
            case RingKind::rationals: return std::get<Rational>(v) / Rational(d);
            case RingKind::mod_m:
            case RingKind::prime_field: {
                auto inv = inv_mod(d, modulus_);
                if (!inv) return std::nullopt;
                return mul(v, RingValue(*inv));
            }
            case RingKind::poly_over_fp: {
                auto inv = inv_mod(d, modulus_);
                if (!inv) return std::nullopt;
                return mul(v, monomial(0, *inv));
            }
        }
        return std::nullopt;
    }

    // c -> c^p in characteristic p. Over F_p this is the identity; over
    // F_p[t] it sends t^e to t^(pe) and fixes the residues.
    RingValue frobenius(const RingValue& v) const {
        require_prime_characteristic("frobenius");
        if (kind_ == RingKind::prime_field) return v;
        FpPoly r;
        std::uint64_t p64 = static_cast<std::uint64_t>(modulus_);
        for (const auto& [e, c] : std::get<FpPoly>(v).coeffs) r.coeffs.emplace(e * p64, c);
        return r;
    }

    // Exact preimage under frobenius, nullopt when v is not a p-th power.
    std::optional<RingValue> inverse_frobenius(const RingValue& v) const {
        require_prime_characteristic("inverse_frobenius");
        if (kind_ == RingKind::prime_field) return v;
        FpPoly r;
        std::uint64_t p64 = static_cast<std::uint64_t>(modulus_);
        for (const auto& [e, c] : std::get<FpPoly>(v).coeffs) {
            if (e % p64 != 0) return std::nullopt;
            r.coeffs.emplace(e / p64, c);
        }
        return RingValue(r);
    }

    std::string to_string(const RingValue& v) const {
        switch (kind_) {
            case RingKind::integers:
            case RingKind::mod_m:
            case RingKind::prime_field: return std::get<Integer>(v).str();
            case RingKind::rationals: return to_decimal(std::get<Rational>(v));
            case RingKind::poly_over_fp: {
                const FpPoly& f = std::get<FpPoly>(v);
                if (f.coeffs.empty()) return "0";
                std::ostringstream out;
                bool first = true;
                for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
                    if (!first) out << " + ";
                    first = false;
                    if (it->first == 0) {
                        out << it->second.str();
                    } else {
                        if (it->second != 1) out << it->second.str() << "*";
                        out << var_;
                        if (it->first > 1) out << "^" << it->first;
                    }
                }
                return out.str();
            }
        }
        return "?";
    }

    static std::string to_decimal(const Rational& q) {
        if (denominator(q) == 1) return numerator(q).str();
        return numerator(q).str() + "/" + denominator(q).str();
    }

  private:
    Ring(RingKind kind, Integer modulus, std::string var)
        : kind_(kind), modulus_(std::move(modulus)), var_(std::move(var)) {}

    void require_prime_characteristic(const char* op) const {
        if (!has_prime_characteristic())
            raise(Errc::ring_not_char_p, std::string(op) + " needs characteristic p, ring is " + name());
    }

    RingKind kind_;
    Integer modulus_;
    std::string var_;
};

inline void check_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (!(a == b))
        raise(Errc::ring_mismatch,
              std::string(where) + ": rings differ (" + a.name() + " vs " + b.name() + ")");
}

// Canonical lift F_p -> Z/p^2 (the representative in [0, p) kept as is).
// Only meaningful coefficientwise over F_p.
inline RingValue lift_to_mod_p2(const Ring& fp, const RingValue& v, const Ring& mod_p2) {
    if (fp.kind() != RingKind::prime_field)
        raise(Errc::ring_not_char_p, "lift_to_mod_p2 expects an F_p coefficient");
    return mod_p2.from_integer(std::get<Integer>(v));
}

} // namespace weyl
