#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace weyl {

// et_off so every operation yields a plain value (they sit inside variants)
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Degree of the zero element (all degree statements stay unconditional).
inline constexpr std::int64_t kDegNegInf = std::numeric_limits<std::int64_t>::min();

enum class Errc {
    invalid_argument,
    parse_error,
    usage_error,
    ring_mismatch,
    index_mismatch,
    not_a_pth_power,
    no_reconstruction,
    not_central,
    not_divisible_by_p,
    not_closed,
    non_invertible_denominator,
    relation_check_failed,
    ring_not_char_p,
    unsupported_prime,
    normalization_failure,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

    // Structural errors are the caller's fault (bad input); the rest are
    // failed mathematical checks.
    bool is_input_error() const {
        switch (code_) {
            case Errc::invalid_argument:
            case Errc::parse_error:
            case Errc::usage_error:
            case Errc::ring_mismatch:
            case Errc::index_mismatch: return true;
            default: return false;
        }
    }

  private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::parse_error: return "ParseError";
        case Errc::usage_error: return "UsageError";
        case Errc::ring_mismatch: return "RingMismatch";
        case Errc::index_mismatch: return "IndexMismatch";
        case Errc::not_a_pth_power: return "NotAPthPower";
        case Errc::no_reconstruction: return "NoReconstruction";
        case Errc::not_central: return "NotCentral";
        case Errc::not_divisible_by_p: return "NotDivisibleByP";
        case Errc::not_closed: return "NotClosed";
        case Errc::non_invertible_denominator: return "NonInvertibleDenominator";
        case Errc::relation_check_failed: return "RelationCheckFailed";
        case Errc::ring_not_char_p: return "RingNotCharP";
        case Errc::unsupported_prime: return "UnsupportedPrime";
        case Errc::normalization_failure: return "NormalizationFailure";
    }
    return "Error";
}

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    return boost::multiprecision::miller_rabin_test(n, 32);
}

inline Integer factorial(std::uint64_t k) {
    Integer r = 1;
    for (std::uint64_t i = 2; i <= k; ++i) r *= i;
    return r;
}

inline Integer binomial(std::uint64_t a, std::uint64_t k) {
    if (k > a) return 0;
    if (k > a - k) k = a - k;
    Integer r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= Integer(a - i);
        r /= Integer(i + 1); // always exact at this point
    }
    return r;
}

// splitmix64: tiny, portable, identical sequences on every platform.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    // deterministic derived stream, independent of call order at the call site
    Rng fork(std::uint64_t salt) const {
        Rng r(state ^ (0x632be59bd9b4e019ull * (salt + 1)));
        r.next();
        return r;
    }
};

} // namespace weyl
