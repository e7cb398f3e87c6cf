#pragma once

#include "weyl/center.hpp"
#include "weyl/one_form.hpp"
#include "weyl/reduce.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace weyl {

// --- dense square matrices over a coefficient ring (dim = 2n) ---

struct RingMatrix {
    Ring ring;
    std::uint32_t dim = 0;
    std::vector<RingValue> entries; // row major

    static RingMatrix zero(const Ring& ring, std::uint32_t dim) {
        return RingMatrix{ring, dim, std::vector<RingValue>(dim * dim, ring.zero())};
    }

    static RingMatrix identity(const Ring& ring, std::uint32_t dim) {
        RingMatrix m = zero(ring, dim);
        for (std::uint32_t i = 0; i < dim; ++i) m.at(i, i) = ring.one();
        return m;
    }

    const RingValue& at(std::uint32_t i, std::uint32_t j) const { return entries[i * dim + j]; }
    RingValue& at(std::uint32_t i, std::uint32_t j) { return entries[i * dim + j]; }

    bool operator==(const RingMatrix&) const = default;
};

inline RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
    check_same_ring(a.ring, b.ring, "mat_mul");
    if (a.dim != b.dim) raise(Errc::index_mismatch, "mat_mul: dimension mismatch");
    RingMatrix r = RingMatrix::zero(a.ring, a.dim);
    for (std::uint32_t i = 0; i < a.dim; ++i)
        for (std::uint32_t k = 0; k < a.dim; ++k) {
            if (a.ring.is_zero(a.at(i, k))) continue;
            for (std::uint32_t j = 0; j < a.dim; ++j)
                r.at(i, j) = a.ring.add(r.at(i, j), a.ring.mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

inline RingMatrix mat_transpose(const RingMatrix& a) {
    RingMatrix r = RingMatrix::zero(a.ring, a.dim);
    for (std::uint32_t i = 0; i < a.dim; ++i)
        for (std::uint32_t j = 0; j < a.dim; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

inline RingMatrix mat_neg(const RingMatrix& a) {
    RingMatrix r = a;
    for (auto& e : r.entries) e = a.ring.neg(e);
    return r;
}

// the form matrix: omega(i, n+i) = -1, omega(n+i, i) = +1
inline RingMatrix omega_matrix(const Ring& ring, std::uint32_t n) {
    RingMatrix m = RingMatrix::zero(ring, 2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        m.at(i, n + i) = ring.from_integer(-1);
        m.at(n + i, i) = ring.one();
    }
    return m;
}

// Linear symplectic generator; construction enforces M^T omega M = omega.
class SymplecticMatrix {
  public:
    static SymplecticMatrix make(RingMatrix m) {
        if (m.dim == 0 || m.dim % 2 != 0)
            raise(Errc::index_mismatch, "symplectic matrix must have even dimension 2n");
        RingMatrix om = omega_matrix(m.ring, m.dim / 2);
        if (!(mat_mul(mat_transpose(m), mat_mul(om, m)) == om))
            raise(Errc::invalid_argument, "matrix does not satisfy M^T omega M = omega");
        return SymplecticMatrix(std::move(m));
    }

    const RingMatrix& matrix() const { return m_; }
    std::uint32_t n() const { return m_.dim / 2; }

    // M^{-1} = -omega M^T omega (omega^{-1} = -omega)
    SymplecticMatrix inverse() const {
        RingMatrix om = omega_matrix(m_.ring, n());
        return SymplecticMatrix(mat_neg(mat_mul(om, mat_mul(mat_transpose(m_), om))));
    }

    bool operator==(const SymplecticMatrix&) const = default;

  private:
    explicit SymplecticMatrix(RingMatrix m) : m_(std::move(m)) {}
    RingMatrix m_;
};

// Transvection T_F: xh_{n+i} -> xh_{n+i} + dF/dx_i for F = F(x_1..x_n).
// F lives in the group C[x]/constants; the representative stored here has
// its constant term dropped.
class Transvection {
  public:
    static Transvection make(PolyElement f) {
        PolyElement g = f - PolyElement::constant(f.ring(), f.nvars(),
                                                  f.coefficient(MultiIndex(f.nvars(), 0u)));
        return Transvection(std::move(g));
    }

    const PolyElement& f() const { return f_; }
    std::uint32_t n() const { return f_.nvars(); }

    Transvection inverse() const { return Transvection(-f_); }

    bool operator==(const Transvection&) const = default;

  private:
    explicit Transvection(PolyElement f) : f_(std::move(f)) {}
    PolyElement f_;
};

using TameLetter = std::variant<SymplecticMatrix, Transvection>;

struct TameWord {
    Ring ring;
    std::uint32_t n = 0;
    std::vector<TameLetter> letters;

    void validate() const {
        for (const auto& letter : letters) {
            if (const auto* m = std::get_if<SymplecticMatrix>(&letter)) {
                check_same_ring(ring, m->matrix().ring, "tame word letter");
                if (m->n() != n) raise(Errc::index_mismatch, "matrix letter has wrong n");
            } else {
                const auto& t = std::get<Transvection>(letter);
                check_same_ring(ring, t.f().ring(), "tame word letter");
                if (t.n() != n) raise(Errc::index_mismatch, "transvection letter has wrong n");
            }
        }
    }
};

// --- letters acting on A_n, P_n and (in char p) the center ---

inline WeylEndo letter_endo(const TameLetter& letter, const Ring& ring, std::uint32_t n) {
    std::vector<WeylElement> images, inverse;
    if (const auto* sm = std::get_if<SymplecticMatrix>(&letter)) {
        const RingMatrix& m = sm->matrix();
        const RingMatrix mi = sm->inverse().matrix();
        for (std::uint32_t i = 0; i < 2 * n; ++i) {
            WeylElement im(ring, n), iv(ring, n);
            for (std::uint32_t j = 0; j < 2 * n; ++j) {
                MultiIndex e(2 * n, 0u);
                e[j] = 1;
                im.add_term(e, m.at(i, j));
                iv.add_term(e, mi.at(i, j));
            }
            images.push_back(std::move(im));
            inverse.push_back(std::move(iv));
        }
    } else {
        const auto& t = std::get<Transvection>(letter);
        for (std::uint32_t i = 0; i < n; ++i) {
            images.push_back(WeylElement::generator(ring, n, i));
            inverse.push_back(WeylElement::generator(ring, n, i));
        }
        for (std::uint32_t i = 0; i < n; ++i) {
            WeylElement df = weyl_from_position_poly(derivative(t.f(), i), n);
            images.push_back(WeylElement::generator(ring, n, n + i) + df);
            inverse.push_back(WeylElement::generator(ring, n, n + i) - df);
        }
    }
    WeylEndo f = WeylEndo::make(ring, n, std::move(images), std::move(inverse));
    if (!f.verified())
        raise(Errc::relation_check_failed, "tame letter failed its relation check");
    return f;
}

inline PolyMap letter_polymap(const TameLetter& letter, const Ring& ring, std::uint32_t n) {
    PolyMap g{ring, n, {}, std::vector<PolyElement>{}};
    auto& inv = *g.claimed_inverse;
    if (const auto* sm = std::get_if<SymplecticMatrix>(&letter)) {
        const RingMatrix& m = sm->matrix();
        const RingMatrix mi = sm->inverse().matrix();
        for (std::uint32_t i = 0; i < 2 * n; ++i) {
            PolyElement im(ring, 2 * n), iv(ring, 2 * n);
            for (std::uint32_t j = 0; j < 2 * n; ++j) {
                MultiIndex e(2 * n, 0u);
                e[j] = 1;
                im.add_term(e, m.at(i, j));
                iv.add_term(e, mi.at(i, j));
            }
            g.images.push_back(std::move(im));
            inv.push_back(std::move(iv));
        }
    } else {
        const auto& t = std::get<Transvection>(letter);
        auto widen = [&](const PolyElement& f) {
            PolyElement out(ring, 2 * n);
            for (const auto& [e, c] : f.terms()) {
                MultiIndex e2(2 * n, 0u);
                for (std::uint32_t i = 0; i < n; ++i) e2[i] = e[i];
                out.add_term(e2, c);
            }
            return out;
        };
        for (std::uint32_t i = 0; i < n; ++i) {
            g.images.push_back(PolyElement::variable(ring, 2 * n, i));
            inv.push_back(PolyElement::variable(ring, 2 * n, i));
        }
        for (std::uint32_t i = 0; i < n; ++i) {
            PolyElement df = widen(derivative(t.f(), i));
            g.images.push_back(PolyElement::variable(ring, 2 * n, n + i) + df);
            inv.push_back(PolyElement::variable(ring, 2 * n, n + i) - df);
        }
    }
    return g;
}

// Closed-form action on the center (char p only): matrices act through
// entrywise Frobenius (p > 2), transvections through the Frobenius twist of
// dF/dx_i.
inline CenterMap letter_center_closed_form(const TameLetter& letter, const Ring& ring,
                                           std::uint32_t n) {
    if (!ring.has_prime_characteristic())
        raise(Errc::ring_not_char_p, "closed-form center action needs characteristic p");
    if (std::holds_alternative<SymplecticMatrix>(letter) && ring.characteristic() == 2)
        raise(Errc::unsupported_prime,
              "closed-form center action of matrix letters is unavailable at p = 2");
    PolyMap twisted = frobenius_twist_map(letter_polymap(letter, ring, n));
    std::int64_t bound = 1;
    if (const auto* t = std::get_if<Transvection>(&letter))
        bound = std::max<std::int64_t>(1, t->f().degree() - 1);
    return CenterMap{std::move(twisted), bound};
}

// --- words ---

inline TameWord invert_word(const TameWord& w) {
    w.validate();
    TameWord r{w.ring, w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (const auto* m = std::get_if<SymplecticMatrix>(&*it))
            r.letters.push_back(m->inverse());
        else
            r.letters.push_back(std::get<Transvection>(*it).inverse());
    }
    return r;
}

inline TameLetter reduce_letter(const TameLetter& letter, const Ring& from, const Ring& fp) {
    if (const auto* m = std::get_if<SymplecticMatrix>(&letter)) {
        RingMatrix rm = RingMatrix::zero(fp, m->matrix().dim);
        for (std::size_t i = 0; i < rm.entries.size(); ++i)
            rm.entries[i] = reduce_value(from, m->matrix().entries[i], fp);
        return SymplecticMatrix::make(std::move(rm));
    }
    return Transvection::make(reduce_poly(std::get<Transvection>(letter).f(), fp));
}

inline TameWord reduce_word(const TameWord& w, const Ring& fp) {
    w.validate();
    TameWord r{fp, w.n, {}};
    for (const auto& letter : w.letters) r.letters.push_back(reduce_letter(letter, w.ring, fp));
    return r;
}

// Degree bound of the letter's generator images: linear for matrices,
// max(1, deg F - 1) for a transvection.
inline std::int64_t letter_degree_bound(const TameLetter& letter) {
    if (std::holds_alternative<SymplecticMatrix>(letter)) return 1;
    return std::max<std::int64_t>(1, std::get<Transvection>(letter).f().degree() - 1);
}

// Bounds the Bernstein degree of rho^A(w) and rho^P(w): composition
// multiplies the per-letter bounds.
inline std::int64_t word_degree_bound(const TameWord& w) {
    std::int64_t d = 1;
    for (const auto& letter : w.letters) d *= letter_degree_bound(letter);
    return d;
}

// Public letter-level entry point: reduces coefficients first when the
// letter lives over Z or Q, otherwise requires the ring characteristic to
// be the requested prime.
inline CenterMap closed_form_center_map(const TameLetter& letter, const Ring& ring,
                                        std::uint32_t n, const Integer& p) {
    if (!is_prime(p)) raise(Errc::invalid_argument, "closed_form_center_map needs a prime");
    if (ring.kind() == RingKind::integers || ring.kind() == RingKind::rationals) {
        Ring fp = Ring::prime_field(p);
        return letter_center_closed_form(reduce_letter(letter, ring, fp), fp, n);
    }
    if (!ring.has_prime_characteristic() || ring.characteristic() != p)
        raise(Errc::ring_mismatch, "letter ring characteristic differs from the requested prime");
    return letter_center_closed_form(letter, ring, n);
}

// rho^A(w): the letters' endomorphisms composed left to right, so the first
// letter acts first on substitution data (outermost on points).
inline WeylEndo eval_word_weyl(const TameWord& w) {
    w.validate();
    std::vector<WeylElement> id;
    for (std::uint32_t i = 0; i < 2 * w.n; ++i)
        id.push_back(WeylElement::generator(w.ring, w.n, i));
    WeylEndo acc = WeylEndo::make(w.ring, w.n, id, id);
    for (const auto& letter : w.letters) acc = compose_endo(acc, letter_endo(letter, w.ring, w.n));
    return acc;
}

// rho^P(w): same composition order on the commutative side.
inline PolyMap eval_word_poisson(const TameWord& w) {
    w.validate();
    PolyMap acc = PolyMap::identity(w.ring, w.n);
    acc.claimed_inverse = acc.images;
    for (const auto& letter : w.letters)
        acc = compose_maps(acc, letter_polymap(letter, w.ring, w.n));
    return acc;
}

inline CenterMap closed_form_center_word(const TameWord& w) {
    w.validate();
    PolyMap id = PolyMap::identity(w.ring, w.n);
    id.claimed_inverse = id.images;
    CenterMap acc{std::move(id), 1};
    for (const auto& letter : w.letters)
        acc = compose_center_maps(acc, letter_center_closed_form(letter, w.ring, w.n));
    return acc;
}

// --- correspondence checks between the Weyl and Poisson actions ---

struct CorrespondenceVerdict {
    bool coeffs_are_pth_powers = false; // center-map coefficients untwist
    bool functorial_ok = false;         // engine center map == closed-form fold
    bool poisson_match = false;         // untwisted center map == rho^P(w)
    bool twist_match = false;           // Fr_* rho^P(w) == center map
    bool symplecto_ok = false;          // untwisted map preserves the bracket
    bool degree_ok = false;             // image degrees within the source bound
    bool inverse_ok = false;            // w * w^{-1} evaluates to the identity
    bool reduction_commutes = true;     // rho^P over Q reduced == rho^P of the
                                        // reduced word (set per prime)

    bool pass() const {
        return coeffs_are_pth_powers && functorial_ok && poisson_match && twist_match &&
               symplecto_ok && degree_ok && inverse_ok && reduction_commutes;
    }
};

// Runs on a word over a char-p ring (F_p or F_p[t]).
inline CorrespondenceVerdict correspondence_core(const TameWord& w) {
    if (!w.ring.has_prime_characteristic())
        raise(Errc::ring_not_char_p, "correspondence core needs characteristic p");
    CorrespondenceVerdict v;

    WeylEndo f = eval_word_weyl(w);
    CenterMap m = center_map(f);
    v.degree_ok = degree_check(m).pass;

    CenterMap closed = closed_form_center_word(w);
    v.functorial_ok = (m == closed);

    PolyMap g = eval_word_poisson(w);
    v.twist_match = (frobenius_twist_map(g) == m.map);

    try {
        CenterMap untwisted = untwist_frobenius_map(m);
        v.coeffs_are_pth_powers = true;
        v.poisson_match = (untwisted.map == g);
        v.symplecto_ok = check_symplecto(untwisted.map).pass();
    } catch (const Error& e) {
        if (e.code() != Errc::not_a_pth_power) throw;
    }

    TameWord round = w;
    TameWord winv = invert_word(w);
    round.letters.insert(round.letters.end(), winv.letters.begin(), winv.letters.end());
    v.inverse_ok = (eval_word_weyl(round) == WeylEndo::identity(w.ring, w.n));
    return v;
}

struct CorrespondencePrime {
    Integer p;
    std::optional<CorrespondenceVerdict> verdict; // absent when error is set
    std::string error;

    bool pass() const { return verdict && verdict->pass(); }
};

struct CorrespondenceReport {
    std::vector<CorrespondencePrime> primes;

    bool pass() const {
        if (primes.empty()) return false;
        for (const auto& e : primes)
            if (!e.pass()) return false;
        return true;
    }
};

inline CorrespondenceReport correspondence_check(const TameWord& w, const std::vector<Integer>& primes) {
    w.validate();
    if (w.ring.kind() != RingKind::integers && w.ring.kind() != RingKind::rationals)
        raise(Errc::invalid_argument, "correspondence_check reduces words over Z or Q");
    PolyMap over_q = eval_word_poisson(w);
    CorrespondenceReport report;
    for (const Integer& p : primes) {
        CorrespondencePrime entry{p, std::nullopt, ""};
        try {
            Ring fp = Ring::prime_field(p);
            TameWord wp = reduce_word(w, fp);
            CorrespondenceVerdict v = correspondence_core(wp);
            v.reduction_commutes = (reduce_map(over_q, fp) == eval_word_poisson(wp));
            entry.verdict = v;
        } catch (const Error& e) {
            entry.error = e.what();
        }
        report.primes.push_back(std::move(entry));
    }
    return report;
}

// --- kernel evidence: a word acts trivially on A_n iff it does on P_n ---

struct KernelPrimeEvidence {
    Integer p;
    bool center_identity = false;
    bool untwisted_identity = false;
    bool poisson_identity = false;
    std::string error;
};

struct KernelReport {
    bool weyl_identity = false;
    bool poisson_identity = false;
    std::optional<std::uint32_t> weyl_witness;    // 0-based generator index
    std::optional<std::uint32_t> poisson_witness;
    std::vector<KernelPrimeEvidence> primes;

    bool kernels_agree() const { return weyl_identity == poisson_identity; }
};

inline KernelReport kernel_evidence(const TameWord& w, const std::vector<Integer>& primes) {
    w.validate();
    KernelReport report;

    WeylEndo f = eval_word_weyl(w);
    report.weyl_identity = true;
    for (std::uint32_t i = 0; i < 2 * w.n; ++i) {
        if (!(f.images()[i] == WeylElement::generator(w.ring, w.n, i))) {
            report.weyl_identity = false;
            report.weyl_witness = i;
            break;
        }
    }

    PolyMap g = eval_word_poisson(w);
    report.poisson_identity = true;
    for (std::uint32_t i = 0; i < 2 * w.n; ++i) {
        if (!(g.images[i] == PolyElement::variable(w.ring, 2 * w.n, i))) {
            report.poisson_identity = false;
            report.poisson_witness = i;
            break;
        }
    }

    for (const Integer& p : primes) {
        KernelPrimeEvidence ev;
        ev.p = p;
        try {
            Ring fp = Ring::prime_field(p);
            TameWord wp = reduce_word(w, fp);
            CenterMap m = center_map(eval_word_weyl(wp));
            ev.center_identity = (m.map == PolyMap::identity(fp, w.n));
            ev.untwisted_identity = (untwist_frobenius_map(m).map == PolyMap::identity(fp, w.n));
            ev.poisson_identity = (eval_word_poisson(wp) == PolyMap::identity(fp, w.n));
        } catch (const Error& e) {
            ev.error = e.what();
        }
        report.primes.push_back(std::move(ev));
    }
    return report;
}

// --- seeded corpora ---

struct CorpusOptions {
    std::uint32_t max_f_degree = 4;
    std::uint32_t max_f_terms = 3;
    std::int64_t height = 3;
    std::int64_t den_max = 1;          // 1 keeps coefficients integral
    std::uint32_t matrix_factors = 1;  // elementary factors per matrix letter
    std::uint32_t max_t_degree = 2;    // t-degree of coefficients over F_p[t]
};

// Nonzero-by-construction coefficient of height <= opts.height: an integer
// for Z and the residue rings, num/den for Q when den_max > 1, a short
// t-polynomial over F_p[t]. (Residue reduction can still hit zero.)
inline RingValue random_coefficient(Rng& rng, const Ring& ring, const CorpusOptions& opts) {
    if (ring.kind() == RingKind::poly_over_fp) {
        RingValue v = ring.zero();
        std::uint64_t nterms = 1 + rng.below(2);
        for (std::uint64_t k = 0; k < nterms; ++k) {
            Integer c(rng.range(1, opts.height));
            if (rng.coin()) c = -c;
            v = ring.add(v, ring.monomial(rng.below(opts.max_t_degree + 1), c));
        }
        return v;
    }
    Integer num(rng.range(1, opts.height));
    if (rng.coin()) num = -num;
    if (opts.den_max > 1 && ring.kind() == RingKind::rationals)
        return ring.from_rational(Rational(num, Integer(rng.range(1, opts.den_max))));
    return ring.from_integer(num);
}

// One elementary symplectic factor: a symmetric shear in either off-diagonal
// block, the form itself, or a GL shear diag(A, (A^T)^{-1}). Entries have
// height <= opts.height; zero entries are drawn with probability 1/2.
inline SymplecticMatrix random_elementary_symplectic(Rng& rng, const Ring& ring, std::uint32_t n,
                                                     const CorpusOptions& opts = {}) {
    const std::uint32_t dim = 2 * n;
    auto sparse_entry = [&]() -> RingValue {
        return rng.coin() ? ring.zero() : random_coefficient(rng, ring, CorpusOptions{
            .height = opts.height, .den_max = 1, .max_t_degree = opts.max_t_degree});
    };
    for (;;) {
        RingMatrix m = RingMatrix::identity(ring, dim);
        switch (rng.below(4)) {
            case 0: { // [[I, B], [0, I]], B symmetric
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = i; j < n; ++j) {
                        RingValue b = sparse_entry();
                        m.at(i, n + j) = b;
                        m.at(j, n + i) = b;
                    }
                break;
            }
            case 1: { // [[I, 0], [C, I]], C symmetric
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = i; j < n; ++j) {
                        RingValue c = sparse_entry();
                        m.at(n + i, j) = c;
                        m.at(n + j, i) = c;
                    }
                break;
            }
            case 2: { // the form itself
                m = omega_matrix(ring, n);
                break;
            }
            default: { // diag(A, (A^T)^{-1}) with A a unit shear or sign flip
                if (n == 1) {
                    m.at(0, 0) = ring.from_integer(-1);
                    m.at(1, 1) = ring.from_integer(-1);
                } else {
                    std::uint32_t i = static_cast<std::uint32_t>(rng.below(n));
                    std::uint32_t j = static_cast<std::uint32_t>(rng.below(n - 1));
                    if (j >= i) ++j;
                    RingValue c = sparse_entry();
                    m.at(i, j) = c;
                    m.at(n + j, n + i) = ring.neg(c);
                }
                break;
            }
        }
        if (!(m == RingMatrix::identity(ring, dim))) return SymplecticMatrix::make(std::move(m));
    }
}

inline SymplecticMatrix random_symplectic(Rng& rng, const Ring& ring, std::uint32_t n,
                                          std::uint32_t factors, const CorpusOptions& opts = {}) {
    RingMatrix acc = random_elementary_symplectic(rng, ring, n, opts).matrix();
    for (std::uint32_t k = 1; k < factors; ++k)
        acc = mat_mul(acc, random_elementary_symplectic(rng, ring, n, opts).matrix());
    return SymplecticMatrix::make(std::move(acc));
}

// F with 1..max_f_terms monomials, total degree in [1, max_f_degree], no
// constant term, coefficients from random_coefficient.
inline PolyElement random_transvection_poly(Rng& rng, const Ring& ring, std::uint32_t n,
                                            const CorpusOptions& opts = {}) {
    PolyElement f(ring, n);
    std::uint64_t nterms = 1 + rng.below(opts.max_f_terms);
    for (std::uint64_t t = 0; t < nterms; ++t) {
        MultiIndex e(n, 0u);
        std::uint32_t deg = 1 + static_cast<std::uint32_t>(rng.below(opts.max_f_degree));
        for (std::uint32_t d = 0; d < deg; ++d) e[rng.below(n)] += 1;
        f.add_term(e, random_coefficient(rng, ring, opts));
    }
    if (f.is_zero()) { // all sampled terms cancelled
        MultiIndex e(n, 0u);
        e[0] = 1;
        f.add_term(e, ring.one());
    }
    return f;
}

inline TameWord random_tame_word(Rng& rng, const Ring& ring, std::uint32_t n, std::uint32_t len,
                                 const CorpusOptions& opts = {}) {
    TameWord w{ring, n, {}};
    for (std::uint32_t k = 0; k < len; ++k) {
        if (rng.coin())
            w.letters.push_back(random_symplectic(rng, ring, n, opts.matrix_factors, opts));
        else
            w.letters.push_back(
                Transvection::make(random_transvection_poly(rng, ring, n, opts)));
    }
    return w;
}

} // namespace weyl
