#include <doctest.h>

#include "superhowe/hwv.hpp"
#include "superhowe/verify.hpp"

using namespace superhowe;

namespace {
const VarSpace vs1(1);
}

TEST_CASE("Gamma(I)") {
    CHECK(gamma_poly(vs1, {}).is_zero());
    CHECK(gamma_poly(vs1, {1}) == SuperPoly::x(vs1, 1));
    // Gamma({1,2}) = x1 e2 - x2 e1
    CHECK(gamma_poly(vs1, {1, 2}) ==
          poly_mul(SuperPoly::x(vs1, 1), SuperPoly::eta(vs1, 2)) -
              poly_mul(SuperPoly::x(vs1, 2), SuperPoly::eta(vs1, 1)));

    for (const IndexSet& I : std::vector<IndexSet>{{1}, {1, 2}, {1, 3}, {1, 2, 3}}) {
        const VarSpace vs2(2);
        CHECK(gamma_poly(vs2, I).degree() == static_cast<int>(I.size()));
    }
}

TEST_CASE("bar map on index sets") {
    CHECK(bar_set({1, 2}, 2) == IndexSet{3, 4});
    CHECK(bar_set({1, 4}, 2) == IndexSet{1, 4});
    CHECK(bar_set({}, 3) == IndexSet{});
}

TEST_CASE("omega family") {
    for (int d = 0; d <= 3; ++d) {
        CHECK(omega(d, 0, 1) == SuperPoly::x(vs1, 1, d));
        CHECK(omega(d, 1, 1) == SuperPoly::x(vs1, 1, d + 1));
        CHECK(omega(d, 1, 1) == omega(d + 1, 0, 1));
    }
    // x1^{d-2}(x1 e2 - e1 x2) is the k = 2 member at n = 1
    for (int d = 2; d <= 4; ++d)
        CHECK(omega(d - 2, 2, 1) ==
              poly_mul(SuperPoly::x(vs1, 1, d - 2), gamma_poly(vs1, {1, 2})));
    const auto wb = is_hwv(omega(1, 2, 1), build_gl_big(1));
    REQUIRE(wb);
    CHECK(*wb == Weight({Rational(2), Rational(1), Rational(0)}));
    const auto ws = is_hwv(omega(1, 2, 1), build_gl_small(1));
    REQUIRE(ws);
    CHECK(*ws == Weight({Rational(2), Rational(1)}));
}

TEST_CASE("omega_tilde family") {
    // x1^{d-2}(x1 x3 + e1 e3) at n = 1, up to sign
    for (int d = 2; d <= 4; ++d) {
        const SuperPoly expected =
            poly_mul(SuperPoly::x(vs1, 1, d - 2),
                     poly_mul(SuperPoly::x(vs1, 1), SuperPoly::x(vs1, 3)) +
                         poly_mul(SuperPoly::eta(vs1, 1), SuperPoly::eta(vs1, 3)));
        CHECK(proportional(omega_tilde(d - 2, 2, 1), expected));
        const auto w = is_hwv(omega_tilde(d - 2, 2, 1), with_borel_step(build_gl_big(1), 1));
        REQUIRE(w);
        CHECK(*w == Weight({Rational(d - 1), Rational(0), Rational(1)}));
    }
    // weights (k, 0, d-k) x (k, d-k) for the stretched members at n = 1
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            const SuperPoly v = omega_tilde(k - 1, 1 + l, 1);
            const auto w = is_hwv(v, with_borel_step(build_gl_big(1), 1));
            REQUIRE(w);
            CHECK(*w == Weight({Rational(k), Rational(0), Rational(l)}));
            const auto ws = is_hwv(v, build_gl_small(1));
            REQUIRE(ws);
            CHECK(*ws == Weight({Rational(k), Rational(l)}));
        }
    for (int k = 0; k <= 1; ++k) CHECK(omega_tilde(2, k, 1) == omega(2, k, 1));
    for (int k = 0; k <= 2; ++k) CHECK(omega_tilde(1, k, 2) == omega(1, k, 2));
}

TEST_CASE("odd reflection steps") {
    const AlgebraSpec gl = build_gl_big(1);
    // zero pairing leaves the vector alone
    const SuperPoly xd = SuperPoly::x(vs1, 1, 3);
    const Weight lam({Rational(3), Rational(0), Rational(0)});
    const auto [v, mu] = odd_reflect(xd, lam, 1, gl);
    CHECK(v == xd);
    CHECK(mu == lam);

    // nonzero pairing applies eps_{3,2} and shifts the weight
    for (int d = 2; d <= 4; ++d) {
        const SuperPoly w = omega(d - 2, 2, 1);
        const Weight wl({Rational(d - 1), Rational(1), Rational(0)});
        const auto [r, rl] = odd_reflect(w, wl, 1, gl);
        CHECK(rl == Weight({Rational(d - 1), Rational(0), Rational(1)}));
        CHECK(r == apply(gl.gen("eps_3_2"), w));
        CHECK(proportional(r, omega_tilde(d - 2, 2, 1)));
    }

    CHECK_THROWS_AS(odd_reflect(SuperPoly::x(vs1, 2), Weight({Rational(1), Rational(0), Rational(0)}),
                                1, gl),
                    std::invalid_argument);

    // the full chain reaches omega~ up to a nonzero scalar
    for (int n = 1; n <= 2; ++n) {
        const AlgebraSpec big = build_gl_big(n);
        for (int d = 0; d <= 2; ++d)
            for (int k = 0; k <= 2 * n + 2; ++k) {
                const auto [r, rl] =
                    odd_reflection_chain(omega(d, k, n), omega_weight_gl_big(d, k, n), big);
                CHECK(rl == omega_tilde_weight(d, k, n));
                CHECK(proportional(r, omega_tilde(d, k, n)));
            }
    }
}

TEST_CASE("one-variable harmonics") {
    CHECK(s_vector(1, 0) == SuperPoly::constant(vs1, Rational(1)));
    CHECK(s_vector(1, 1) == SuperPoly::eta(vs1, 1));
    // Delta_2 at n=1 is x3 e1; Delta_3 is x3^3 + 3 x3 e1 e2
    CHECK(s_vector(1, 2) == poly_mul(SuperPoly::x(vs1, 3), SuperPoly::eta(vs1, 1)));
    CHECK(s_vector(1, 3) ==
          SuperPoly::x(vs1, 3, 3) +
              poly_mul(SuperPoly::x(vs1, 3),
                       poly_mul(SuperPoly::eta(vs1, 1), SuperPoly::eta(vs1, 2)))
                  .scaled(Rational(3)));
    const AlgebraSpec osp = build_osp22(1);
    CHECK(apply(osp.gen("D_22"), s_vector(1, 2)).is_zero());
    CHECK(apply(osp.gen("D_22"), s_vector(1, 3)).is_zero());
    const auto w = weight_of(s_vector(1, 3), build_spo(1));
    REQUIRE(w);
    CHECK(*w == Weight({Rational(0)}));

    CHECK_THROWS_AS(s_vector(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(delta_vector(1, 1), std::invalid_argument);

    for (int n = 2; n <= 3; ++n) {
        const AlgebraSpec o = build_osp22(n);
        for (int k = 0; k <= 2 * n + 1; ++k) {
            CHECK(apply(o.gen("D_22"), s_vector(n, k)).is_zero());
            CHECK(s_vector(n, k).degree() == (k == 0 ? 0 : k));
        }
    }
}

TEST_CASE("harmonic joint highest weight vectors p_{d,k}") {
    for (int d = 0; d <= 3; ++d) CHECK(p_vector(d, 1, 1) == SuperPoly::x(vs1, 1, d + 1));

    // p_{0,3} at n=1 is proportional to the degree-3 exceptional vector
    const SuperPoly vtilde = parse_poly("-x2 x3 e1 - e1 e2 e3 + x1 x3 e2 - x3^2 e3", vs1);
    const auto c = proportional(p_vector(0, 3, 1), vtilde);
    REQUIRE(c);
    CHECK(*c == Rational(3));

    // p_{d,k} = x_1^d zeta_{1,2}(s_{n,k}) for k >= 1
    for (int n = 1; n <= 3; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec gls = build_gl_small(n);
        for (int d = 0; d <= 2; ++d)
            for (int k = 1; k <= 2 * n + 1; ++k)
                CHECK(p_vector(d, k, n) ==
                      poly_mul(SuperPoly::x(vs, 1, d), apply(gls.gen("zeta_1_2"), s_vector(n, k))));
    }

    // the harmonic members are killed by D_12, D_22, F_{1,2} and all spo
    // raising operators, with the classified weights
    for (int n = 1; n <= 3; ++n) {
        const AlgebraSpec osp = build_osp22(n);
        const AlgebraSpec spo = build_spo(n);
        for (int d = 0; d <= 2; ++d)
            for (int k = 0; k <= 2 * n + 1; ++k) {
                if (k == 2 * n + 1 && d > 0) continue;  // not harmonic there
                if (k == 0 && d > 0) continue;          // duplicate of p_{d-1,1}
                const SuperPoly p = p_vector(d, k, n);
                CHECK(apply(osp.gen("D_12"), p).is_zero());
                CHECK(apply(osp.gen("D_22"), p).is_zero());
                CHECK(apply(osp.gen("F_1_2"), p).is_zero());
                const auto sw = is_hwv(p, spo);
                REQUIRE(sw);
                const auto pw = weight_of(p, osp);
                REQUIRE(pw);
                CHECK(*pw == harmonic_partner_weight(d, k, n));
            }
    }
}

TEST_CASE("nu vectors") {
    CHECK(nu_vector(1, 0) == SuperPoly::constant(vs1, Rational(1)));
    CHECK(nu_vector(1, 2) == poly_mul(SuperPoly::eta(vs1, 1), SuperPoly::eta(vs1, 2)));
    CHECK(nu_vector(1, 4) ==
          poly_mul(poly_mul(SuperPoly::eta(vs1, 1), SuperPoly::eta(vs1, 2)),
                   SuperPoly::x(vs1, 3, 2)));
}
