#include <doctest.h>

#include "superhowe/hwv.hpp"
#include "superhowe/liealg.hpp"
#include "superhowe/ratlinalg.hpp"

using namespace superhowe;

namespace {
const VarSpace vs1(1);

SuperPoly intro_vector() {
    // x1 x3 e2 - x2 x3 e1 - x3^2 e3 - e1 e2 e3
    return parse_poly("-x2 x3 e1 - e1 e2 e3 + x1 x3 e2 - x3^2 e3", vs1);
}

}  // namespace

TEST_CASE("gl(2n|1) generators act as expected") {
    for (int n = 1; n <= 2; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec gl = build_gl_big(n);
        CHECK(apply(gl.gen("eps_1_1"), SuperPoly::x(vs, 1, 2)) ==
              SuperPoly::x(vs, 1, 2).scaled(Rational(2)));
        CHECK(apply(gl.gen("eps_1_2"), SuperPoly::x(vs, 2)) == SuperPoly::x(vs, 1));

        const int last = 2 * n + 1;
        const std::string mixed = "eps_1_" + std::to_string(last);
        CHECK(apply(gl.gen(mixed), SuperPoly::x(vs, last)) == SuperPoly::eta(vs, 1));
        CHECK(apply(gl.gen(mixed), SuperPoly::eta(vs, last)) == SuperPoly::x(vs, 1));
    }
}

TEST_CASE("gl(1|1) generators act as expected") {
    const AlgebraSpec gls = build_gl_small(1);
    for (int d = 1; d <= 3; ++d)
        CHECK(apply(gls.gen("zeta_1_1"), SuperPoly::x(vs1, 1, d)) ==
              SuperPoly::x(vs1, 1, d).scaled(Rational(d)));
    CHECK(apply(gls.gen("zeta_1_2"), SuperPoly::eta(vs1, 1)) == SuperPoly::x(vs1, 1));
    // zeta_{1,2}(x_1^d nu_{n,k}) = omega_{d,k}
    for (int n = 1; n <= 2; ++n) {
        const AlgebraSpec z = build_gl_small(n);
        for (int d = 0; d <= 2; ++d)
            for (int k = 1; k <= 2 * n + 2; ++k)
                CHECK(apply(z.gen("zeta_1_2"),
                            poly_mul(SuperPoly::x(VarSpace(n), 1, d), nu_vector(n, k))) ==
                      omega(d, k, n));
    }
}

TEST_CASE("osp(2|2) generators act as expected") {
    for (int n = 1; n <= 2; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec osp = build_osp22(n);
        const SuperPoly one = SuperPoly::constant(vs, Rational(1));
        CHECK(apply(osp.gen("F_1_1"), one) == one.scaled(Rational(2 * n - 1, 2)));

        for (int d = 0; d <= 1; ++d)
            for (const SuperMonomial& m : basis_of_degree(vs, d))
                CHECK(apply(osp.gen("D_22"), SuperPoly::monomial(m)).is_zero());

        // R_22 1 = x_{2n+1}^2 + 2 sum eta_i eta_{2n+1-i}
        SuperPoly expected = SuperPoly::x(vs, 2 * n + 1, 2);
        for (int i = 1; i <= n; ++i)
            expected += poly_mul(SuperPoly::eta(vs, i), SuperPoly::eta(vs, 2 * n + 1 - i))
                            .scaled(Rational(2));
        CHECK(apply(osp.gen("R_22"), one) == expected);
    }
}

TEST_CASE("spo(2n|1) Borel data") {
    const AlgebraSpec spo = build_spo(1);
    // b^spo = span{eps_11 - eps_22, eps_12, eps_13 + eps_32}
    const AlgebraSpec gl = build_gl_big(1);
    REQUIRE(spo.cartan.size() == 1);
    CHECK(op_equal_on_degree(spo.cartan[0], gl.gen("eps_1_1") - gl.gen("eps_2_2"), 3, vs1));
    REQUIRE(spo.raising.size() == 2);
    CHECK(op_equal_on_degree(spo.gen("B_1_1"), gl.gen("eps_1_2"), 3, vs1));
    CHECK(op_equal_on_degree(spo.gen("X_1_0"), gl.gen("eps_1_3") + gl.gen("eps_3_2"), 3, vs1));

    CHECK(build_spo(2).cartan.size() == 2);
    // dim spo(2n|1) = 2n^2 + 3n
    CHECK(build_spo(2).generators.size() == 2 * 4 + 3 * 2);
    CHECK(build_spo(3).generators.size() == 2 * 9 + 3 * 3);
}

TEST_CASE("weight extraction") {
    const SuperPoly one = SuperPoly::constant(vs1, Rational(1));
    const auto w_small = weight_of(one, build_gl_small(1));
    REQUIRE(w_small);
    CHECK(*w_small == Weight({Rational(0), Rational(0)}));

    const auto w_osp = weight_of(one, build_osp22(1));
    REQUIRE(w_osp);
    CHECK(*w_osp == Weight({Rational(1, 2), Rational(-1, 2)}));

    CHECK_FALSE(weight_of(SuperPoly::x(vs1, 1) + SuperPoly::x(vs1, 2), build_gl_big(1)));
    CHECK_THROWS_AS(weight_of(SuperPoly::zero(), build_gl_big(1)), std::invalid_argument);
}

TEST_CASE("highest weight vector detection") {
    const AlgebraSpec gl = build_gl_big(1);
    const auto w = is_hwv(SuperPoly::x(vs1, 1, 3), gl);
    REQUIRE(w);
    CHECK(*w == Weight({Rational(3), Rational(0), Rational(0)}));

    CHECK_FALSE(is_hwv(SuperPoly::x(vs1, 2), gl));

    // the degree-3 joint spo + osp(2|2) highest weight vector of weight (0) x (3/2, 3/2)
    const SuperPoly v = intro_vector();
    const auto spo_w = is_hwv(v, build_spo(1));
    REQUIRE(spo_w);
    CHECK(*spo_w == Weight({Rational(0)}));
    const auto osp_w = is_hwv(v, build_osp22(1));
    REQUIRE(osp_w);
    CHECK(*osp_w == Weight({Rational(3, 2), Rational(3, 2)}));
}

TEST_CASE("duality supercommutation and closure invariants at small degree") {
    const DiffOp zero;
    for (int n = 1; n <= 2; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec spo = build_spo(n);
        const AlgebraSpec osp = build_osp22(n);
        for (const auto& [an, a] : spo.generators)
            for (const char* bn : {"F_1_2", "D_12", "R_22"})
                CHECK(op_equal_on_degree(supercommutator(a, osp.gen(bn)), zero, 2, vs));

        const AlgebraSpec glb = build_gl_big(n);
        const AlgebraSpec gls = build_gl_small(n);
        for (const auto& [an, a] : glb.generators)
            for (const auto& [bn, b] : gls.generators)
                CHECK(op_equal_on_degree(supercommutator(a, b), zero, 2, vs));
    }
}

TEST_CASE("cartans supercommute") {
    for (int n = 1; n <= 2; ++n) {
        CHECK(cartan_supercommutes(build_gl_big(n), 2));
        CHECK(cartan_supercommutes(build_gl_small(n), 2));
        CHECK(cartan_supercommutes(build_osp22(n), 2));
        CHECK(cartan_supercommutes(build_spo(n), 2));
    }
}

TEST_CASE("fast diagonal eigenvalues agree with operator application") {
    for (int n = 1; n <= 2; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec gls = build_gl_small(n);
        const AlgebraSpec spo = build_spo(n);
        for (const SuperMonomial& m : basis_of_degree(vs, 3)) {
            const SuperPoly p = SuperPoly::monomial(m);
            CHECK(apply(gls.gen("zeta_1_1"), p) ==
                  p.scaled(Rational(zeta11_eigenvalue(m, n))));
            CHECK(apply(gls.gen("zeta_2_2"), p) ==
                  p.scaled(Rational(zeta22_eigenvalue(m, n))));
            const auto key = cartan_key(m, spo);
            for (int i = 0; i < n; ++i)
                CHECK(apply(spo.cartan[i], p) == p.scaled(Rational(key[i])));
        }
    }
}
