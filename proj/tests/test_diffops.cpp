#include <doctest.h>

#include "superhowe/hwv.hpp"
#include "superhowe/liealg.hpp"

using namespace superhowe;

namespace {
const VarSpace vs1(1);
}

TEST_CASE("primitive actions: derivative, odd derivation, multiplications") {
    CHECK(apply(DiffOp::del_x(1), SuperPoly::x(vs1, 1, 3)) ==
          SuperPoly::x(vs1, 1, 2).scaled(Rational(3)));

    const SuperPoly e12 = poly_mul(SuperPoly::eta(vs1, 1), SuperPoly::eta(vs1, 2));
    CHECK(apply(DiffOp::del_eta(2), e12) == -SuperPoly::eta(vs1, 1));
    CHECK(apply(DiffOp::del_eta(1), e12) == SuperPoly::eta(vs1, 2));
    CHECK(apply(DiffOp::del_eta(3), e12).is_zero());

    CHECK(apply(DiffOp::mul_eta(1), SuperPoly::eta(vs1, 2)) == e12);
    CHECK(apply(DiffOp::mul_eta(2), SuperPoly::eta(vs1, 1)) == -e12);
}

TEST_CASE("the degree-lowering operator hits the stated non-harmonic vector") {
    // D_12 omega~_{d,n+l} is a nonzero multiple of x_1^d x_3^{l-2} eta_1 at n=1
    const AlgebraSpec osp = build_osp22(1);
    for (int d = 0; d <= 2; ++d)
        for (int l = 2; l <= 3; ++l) {
            const SuperPoly image = apply(osp.gen("D_12"), omega_tilde(d, 1 + l, 1));
            const SuperPoly expected =
                poly_mul(poly_mul(SuperPoly::x(vs1, 1, d), SuperPoly::x(vs1, 3, l - 2)),
                         SuperPoly::eta(vs1, 1))
                    .scaled(Rational(-l * (l - 1)));
            CHECK(image == expected);
        }
}

TEST_CASE("composition is word concatenation") {
    const DiffOp b = DiffOp::mul_x(1);
    CHECK(compose(DiffOp::identity(), b).terms() == b.terms());

    const DiffOp xdx = compose(DiffOp::mul_x(1), DiffOp::del_x(1));
    CHECK(apply(xdx, SuperPoly::x(vs1, 1)) == SuperPoly::x(vs1, 1));

    // {del_eta_1, mul_eta_1} = identity on every monomial of degree <= 3
    const DiffOp anti = compose(DiffOp::del_eta(1), DiffOp::mul_eta(1)) +
                        compose(DiffOp::mul_eta(1), DiffOp::del_eta(1));
    CHECK(op_equal_on_degree(anti, DiffOp::identity(), 3, vs1));
}

TEST_CASE("supercommutators") {
    const AlgebraSpec osp = build_osp22(1);
    const DiffOp& f12 = osp.gen("F_1_2");
    // odd self-bracket doubles the square
    const DiffOp self = supercommutator(f12, f12);
    CHECK(op_equal_on_degree(self, compose(f12, f12).scaled(Rational(2)), 3, vs1));

    // gl relation [eps_{1,2}, eps_{2,1}] = eps_{1,1} - eps_{2,2} on S^d, d <= 3
    const AlgebraSpec gl = build_gl_big(1);
    const DiffOp lhs = supercommutator(gl.gen("eps_1_2"), gl.gen("eps_2_1"));
    CHECK(op_equal_on_degree(lhs, gl.gen("eps_1_1") - gl.gen("eps_2_2"), 3, vs1));

    // [D_22, R_22] is nonzero already on constants
    const DiffOp dr = supercommutator(osp.gen("D_22"), osp.gen("R_22"));
    CHECK_FALSE(apply(dr, SuperPoly::constant(vs1, Rational(1))).is_zero());

    DiffOp mixed = DiffOp::mul_x(1) + DiffOp::mul_eta(1);
    CHECK_THROWS_AS(supercommutator(mixed, mixed), std::invalid_argument);
}

TEST_CASE("operator equality is decided on graded spanning sets") {
    const DiffOp a = DiffOp::mul_x(1);
    CHECK(op_equal_on_degree(a, a, 3, vs1));

    CHECK_FALSE(op_equal_on_degree(compose(DiffOp::mul_x(1), DiffOp::del_x(1)),
                                   compose(DiffOp::del_x(1), DiffOp::mul_x(1)), 1, vs1));

    // zeta_{1,2} = -F_{1,2} for n <= 3 on degrees <= 3
    for (int n = 1; n <= 3; ++n) {
        const AlgebraSpec osp = build_osp22(n);
        const AlgebraSpec gls = build_gl_small(n);
        CHECK(op_equal_on_degree(gls.gen("zeta_1_2"), -osp.gen("F_1_2"), 3, VarSpace(n)));
    }
}

TEST_CASE("Leibniz rule for the odd derivation on products") {
    const SuperPoly p = poly_mul(SuperPoly::eta(vs1, 1), SuperPoly::x(vs1, 3));  // parity 1
    const SuperPoly q = poly_mul(SuperPoly::eta(vs1, 2), SuperPoly::eta(vs1, 3));
    for (int i = 1; i <= 3; ++i) {
        const DiffOp de = DiffOp::del_eta(i);
        const SuperPoly lhs = apply(de, poly_mul(p, q));
        const SuperPoly rhs = poly_mul(apply(de, p), q) - poly_mul(p, apply(de, q));
        CHECK(lhs == rhs);
    }
}
