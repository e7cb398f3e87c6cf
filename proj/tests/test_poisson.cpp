#include "weyl/one_form.hpp"
#include "weyl/poisson.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace weyl;

TEST_CASE("bracket of coordinates is omega") {
    Ring Q = Ring::rationals();
    for (std::uint32_t n : {1u, 2u, 3u}) {
        for (std::uint32_t i = 0; i < 2 * n; ++i)
            for (std::uint32_t j = 0; j < 2 * n; ++j) {
                PolyElement xi = PolyElement::variable(Q, 2 * n, i);
                PolyElement xj = PolyElement::variable(Q, 2 * n, j);
                REQUIRE(poisson_bracket(xi, xj, n) ==
                        PolyElement::constant(Q, 2 * n, Q.from_integer(omega_entry(n, i, j))));
            }
    }
}

TEST_CASE("bracket identities") {
    for (const Ring& R : {Ring::rationals(), Ring::prime_field(7)}) {
        for (std::uint32_t n : {1u, 2u}) {
            Rng rng(0xb4ac + static_cast<std::uint64_t>(R.kind()) * 31 + n);
            for (int it = 0; it < 50; ++it) {
                PolyElement a = testutil::random_poly(rng, R, 2 * n, 3, 3, 4);
                PolyElement b = testutil::random_poly(rng, R, 2 * n, 3, 3, 4);
                PolyElement c = testutil::random_poly(rng, R, 2 * n, 3, 3, 4);
                // antisymmetry
                REQUIRE((poisson_bracket(a, b, n) + poisson_bracket(b, a, n)).is_zero());
                // Leibniz
                REQUIRE(poisson_bracket(a, b * c, n) ==
                        poisson_bracket(a, b, n) * c + b * poisson_bracket(a, c, n));
                // Jacobi
                PolyElement jac = poisson_bracket(a, poisson_bracket(b, c, n), n) +
                                  poisson_bracket(b, poisson_bracket(c, a, n), n) +
                                  poisson_bracket(c, poisson_bracket(a, b, n), n);
                REQUIRE(jac.is_zero());
            }
        }
    }
}

TEST_CASE("symplectomorphism check") {
    Ring Q = Ring::rationals();
    PolyElement x = PolyElement::variable(Q, 2, 0);
    PolyElement y = PolyElement::variable(Q, 2, 1);

    // x2 -> x2 + 3 x1^2 preserves the bracket
    PolyMap t{Q, 1, {x, y + scale(poly_pow(x, 2), RingValue(Rational(3)))}, std::nullopt};
    REQUIRE(check_symplecto(t).pass());

    // x1 -> 2 x1 does not; the defect is the constant -1
    PolyMap s{Q, 1, {scale(x, RingValue(Rational(2))), y}, std::nullopt};
    SymplectoReport rep = check_symplecto(s);
    REQUIRE_FALSE(rep.pass());
    REQUIRE(rep.defects.size() == 1);
    REQUIRE(rep.defects[0].defect == PolyElement::constant(Q, 2, Q.from_integer(-1)));

    // wrong inverse is reported
    PolyMap winv = t;
    winv.claimed_inverse = std::vector<PolyElement>{x, y};
    SymplectoReport irep = check_symplecto(winv);
    REQUIRE(irep.inverse_checked);
    REQUIRE_FALSE(irep.inverse_ok);

    PolyMap ginv = t;
    ginv.claimed_inverse =
        std::vector<PolyElement>{x, y - scale(poly_pow(x, 2), RingValue(Rational(3)))};
    REQUIRE(check_symplecto(ginv).pass());
}

TEST_CASE("composition of maps") {
    Ring Q = Ring::rationals();
    Rng rng(0xabcd);
    for (int it = 0; it < 25; ++it) {
        PolyMap g{Q, 1,
                  {testutil::random_poly(rng, Q, 2, 2, 3, 3), testutil::random_poly(rng, Q, 2, 2, 3, 3)},
                  std::nullopt};
        PolyMap h{Q, 1,
                  {testutil::random_poly(rng, Q, 2, 2, 3, 3), testutil::random_poly(rng, Q, 2, 2, 3, 3)},
                  std::nullopt};
        PolyElement a = testutil::random_poly(rng, Q, 2, 3, 3, 3);
        REQUIRE(apply_map(compose_maps(g, h), a) == apply_map(h, apply_map(g, a)));
    }
    REQUIRE(compose_maps(PolyMap::identity(Q, 2), PolyMap::identity(Q, 2)) ==
            PolyMap::identity(Q, 2));
}

TEST_CASE("pullback of one-forms") {
    Ring Q = Ring::rationals();
    PolyElement x = PolyElement::variable(Q, 2, 0);
    PolyElement y = PolyElement::variable(Q, 2, 1);

    SECTION("tautological form under a transvection") {
        // g: x2 -> x2 + 2 x1; g^*(x1 dx2) = x1 dx2 + 2 x1 dx1 = beta + d(x1^2)
        PolyMap g{Q, 1, {x, y + scale(x, RingValue(Rational(2)))}, std::nullopt};
        PolyOneForm beta = tautological_form(Q, 1);
        PolyOneForm pulled = pullback(g, beta);
        PolyOneForm expected = beta + d(poly_pow(x, 2), 1);
        REQUIRE(pulled == expected);

        PolyElement prim = primitive_of_exact(pulled - beta);
        REQUIRE(prim == poly_pow(x, 2));
    }

    SECTION("functoriality: pullback reverses composition") {
        Rng rng(0x9f);
        for (int it = 0; it < 20; ++it) {
            PolyMap g{Q, 1,
                      {testutil::random_poly(rng, Q, 2, 2, 2, 3),
                       testutil::random_poly(rng, Q, 2, 2, 2, 3)},
                      std::nullopt};
            PolyMap h{Q, 1,
                      {testutil::random_poly(rng, Q, 2, 2, 2, 3),
                       testutil::random_poly(rng, Q, 2, 2, 2, 3)},
                      std::nullopt};
            PolyOneForm theta{Q, 1,
                              {testutil::random_poly(rng, Q, 2, 2, 2, 3),
                               testutil::random_poly(rng, Q, 2, 2, 2, 3)}};
            REQUIRE(pullback(compose_maps(g, h), theta) == pullback(h, pullback(g, theta)));
        }
    }

    SECTION("pullback commutes with d") {
        Rng rng(0xd00d);
        for (int it = 0; it < 20; ++it) {
            PolyMap g{Q, 1,
                      {testutil::random_poly(rng, Q, 2, 2, 2, 3),
                       testutil::random_poly(rng, Q, 2, 2, 2, 3)},
                      std::nullopt};
            PolyElement f = testutil::random_poly(rng, Q, 2, 3, 3, 3);
            REQUIRE(pullback(g, d(f, 1)) == d(apply_map(g, f), 1));
        }
    }
}

TEST_CASE("primitive_of_exact") {
    Ring Q = Ring::rationals();

    SECTION("round trip over Q, Z and F_7") {
        for (const Ring& R : {Ring::rationals(), Ring::integers(), Ring::prime_field(7)}) {
            Rng rng(0x4e + static_cast<std::uint64_t>(R.kind()));
            for (int it = 0; it < 40; ++it) {
                PolyElement p = testutil::random_poly(rng, R, 2, 5, 4, 4);
                // drop the constant term so the normalization P(0)=0 matches
                PolyElement p0 = p - PolyElement::constant(R, 2, p.coefficient(MultiIndex{0, 0}));
                REQUIRE(primitive_of_exact(d(p0, 1)) == p0);
            }
        }
    }

    SECTION("not closed") {
        PolyOneForm theta{Q, 1, {PolyElement::variable(Q, 2, 1), PolyElement::zero(Q, 2)}};
        try {
            primitive_of_exact(theta);
            FAIL("expected NotClosed");
        } catch (const Error& e) {
            REQUIRE(e.code() == Errc::not_closed);
        }
    }

    SECTION("x^(p-1) dx has no primitive in characteristic p") {
        Ring F5 = Ring::prime_field(5);
        PolyOneForm theta{F5, 1,
                          {poly_pow(PolyElement::variable(F5, 2, 0), 4), PolyElement::zero(F5, 2)}};
        REQUIRE(is_closed(theta));
        try {
            primitive_of_exact(theta);
            FAIL("expected NonInvertibleDenominator");
        } catch (const Error& e) {
            REQUIRE(e.code() == Errc::non_invertible_denominator);
        }
    }

    SECTION("exact form whose Euler field vanishes is still rejected, not misanswered") {
        // d(x^(p+1) y^(p-1)) over F_3: closed, exact, but E = 0
        Ring F3 = Ring::prime_field(3);
        PolyElement x = PolyElement::variable(F3, 2, 0);
        PolyElement y = PolyElement::variable(F3, 2, 1);
        PolyElement f = poly_pow(x, 4) * poly_pow(y, 2);
        PolyOneForm theta = d(f, 1);
        REQUIRE(is_closed(theta));
        REQUIRE_FALSE(theta.components[0].is_zero());
        try {
            PolyElement p = primitive_of_exact(theta);
            REQUIRE(d(p, 1) == theta); // if it answers, it must be right
        } catch (const Error& e) {
            REQUIRE(e.code() == Errc::non_invertible_denominator);
        }
    }
}
