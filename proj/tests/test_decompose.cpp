#include <doctest.h>

#include "superhowe/decompose.hpp"
#include "superhowe/verify.hpp"

using namespace superhowe;

TEST_CASE("harmonic subspace dimensions at n=1") {
    CHECK(harmonic_dim(1, 0) == 1);
    CHECK(harmonic_dim(1, 1) == 6);
    CHECK(harmonic_dim(1, 3) == 26);
    // independent route: dim S^3 - dim lowered image
    CHECK(dim_of_degree(VarSpace(1), 3) - lowered_image_dim(1, 3) == 26);
}

TEST_CASE("every harmonic basis element is killed by n'+") {
    for (int n = 1; n <= 2; ++n) {
        const AlgebraSpec osp = build_osp22(n);
        for (int d = 0; d <= 4; ++d)
            for (const SuperPoly& h : harmonic_basis(n, d)) {
                CHECK(apply(osp.gen("D_12"), h).is_zero());
                CHECK(apply(osp.gen("D_22"), h).is_zero());
            }
    }
}

TEST_CASE("weight slices are joint eigenspaces with the stated weight") {
    const AlgebraSpec spo = build_spo(1);
    const AlgebraSpec osp = build_osp22(1);
    long total = 0;
    for (const WeightSpaceBasis& ws : weight_slices(1, 3, spo, osp)) {
        CHECK(ws.degree == 3);
        REQUIRE(ws.weight.coords.size() == 3);  // 1 spo + 2 osp coordinates
        for (const SuperPoly& v : ws.basis) {
            const auto wa = weight_of(v, spo.cartan);
            const auto wb = weight_of(v, osp.cartan);
            REQUIRE(wa);
            REQUIRE(wb);
            Weight joint = *wa;
            joint.coords.insert(joint.coords.end(), wb->coords.begin(), wb->coords.end());
            CHECK(joint == ws.weight);
        }
        total += static_cast<long>(ws.basis.size());
    }
    CHECK(total == dim_of_degree(VarSpace(1), 3));
}

TEST_CASE("joint enumeration for the gl pair at n=1, d=2") {
    const auto found =
        joint_hwv_enumerate(1, 2, build_gl_big(1), build_gl_small(1), false);
    REQUIRE(found.size() == 2);
    CHECK(found[0].weight_a == Weight({Rational(2), Rational(0), Rational(0)}));
    CHECK(found[0].weight_b == Weight({Rational(2), Rational(0)}));
    CHECK(found[1].weight_a == Weight({Rational(1), Rational(1), Rational(0)}));
    CHECK(found[1].weight_b == Weight({Rational(1), Rational(1)}));
}

TEST_CASE("harmonic joint enumeration for the spo pair at n=1") {
    const AlgebraSpec spo = build_spo(1);
    const AlgebraSpec osp = build_osp22(1);
    const auto d3 = joint_hwv_enumerate(1, 3, spo, osp, true);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0].weight_a == Weight({Rational(3)}));
    CHECK(d3[0].weight_b == Weight({Rational(7, 2), Rational(-1, 2)}));
    CHECK(d3[1].weight_a == Weight({Rational(2)}));
    CHECK(d3[1].weight_b == Weight({Rational(5, 2), Rational(1, 2)}));
    CHECK(d3[2].weight_a == Weight({Rational(0)}));
    CHECK(d3[2].weight_b == Weight({Rational(3, 2), Rational(3, 2)}));

    for (int d = 4; d <= 6; ++d) {
        const auto rows = joint_hwv_enumerate(1, d, spo, osp, true);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].weight_a == Weight({Rational(d)}));
        CHECK(rows[0].weight_b == Weight({Rational(2 * d + 1, 2), Rational(-1, 2)}));
        CHECK(rows[1].weight_a == Weight({Rational(d - 1)}));
        CHECK(rows[1].weight_b == Weight({Rational(2 * d - 1, 2), Rational(1, 2)}));
    }
}

TEST_CASE("module generation by lowering operators") {
    const AlgebraSpec spo = build_spo(1);
    const AlgebraSpec osp = build_osp22(1);
    const VarSpace vs(1);

    CHECK(generate_module(SuperPoly::constant(vs, Rational(1)), spo.lowering, 0, 1).size() == 1);
    CHECK(generate_module(SuperPoly::x(vs, 1), spo.lowering, 1, 1).size() == 3);

    // typical 2-dimensional k'-module over p_{d,1} = x_1^{d+1}
    const std::vector<DiffOp> kprime = {osp.gen("F_2_1")};
    for (int d = 0; d <= 3; ++d)
        CHECK(generate_module(p_vector(d, 1, 1), kprime, d + 1, 1).size() == 2);

    CHECK_THROWS_AS(generate_module(SuperPoly::zero(), spo.lowering, 3, 1),
                    std::invalid_argument);
}

TEST_CASE("decomposition reports carry passing audits and frozen n=1 rows") {
    for (int d = 0; d <= 8; ++d) {
        const DecompositionReport r = decompose_harmonic(1, d);
        const auto expected = expected_n1_rows(d);
        REQUIRE(r.entries.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(r.entries[i].spo_weight == expected[i].spo_weight);
            CHECK(r.entries[i].partner_weight == expected[i].partner_weight);
            CHECK(r.entries[i].spo_dim == expected[i].spo_dim);
            CHECK(r.entries[i].partner_dim == expected[i].partner_dim);
            CHECK(r.entries[i].parity == d % 2);
        }
        CHECK(r.dim_audit.sum_products == r.dim_audit.dim_harmonic);
        CHECK(r.dim_audit.dim_sd == r.dim_audit.dim_harmonic + r.dim_audit.dim_lowered);
    }
}

TEST_CASE("n=2 weight shapes at degree 3") {
    const DecompositionReport r = decompose_harmonic(2, 3);
    // spo weights are restricted to the shapes (a, 1_k, 0_{n-k-1}): at n=2
    // that means (a, 0) or (a, 1) with a >= 1
    for (const IsotypicEntry& e : r.entries) {
        REQUIRE(e.spo_weight.coords.size() == 2);
        CHECK(e.spo_weight.coords[0] >= Rational(1));
        const Rational second = e.spo_weight.coords[1];
        CHECK((second == Rational(0) || second == Rational(1)));
    }
}

TEST_CASE("enumerated highest weight vectors recover the closed-form families") {
    // degree d entries of the n=1 harmonic table are spanned by p vectors
    for (int d = 1; d <= 5; ++d) {
        const auto rows = joint_hwv_enumerate(1, d, build_spo(1), build_osp22(1), true);
        bool found_p1 = false;
        for (const auto& row : rows)
            if (proportional(row.v, p_vector(d - 1, 1, 1))) found_p1 = true;
        CHECK(found_p1);
        if (d >= 2) {
            bool found_p2 = false;
            for (const auto& row : rows)
                if (proportional(row.v, p_vector(d - 2, 2, 1))) found_p2 = true;
            CHECK(found_p2);
        }
    }
}

TEST_CASE("parity split at n=1") {
    const ParityReport pr = parity_split(1, 5);
    const auto& zero_degrees = pr.degrees_by_weight.at(Weight({Rational(0)}));
    CHECK(zero_degrees == std::vector<int>{0, 3});
    for (int delta = 1; delta <= 4; ++delta) {
        const auto& degrees = pr.degrees_by_weight.at(Weight({Rational(delta)}));
        REQUIRE(degrees.size() == 2);
        CHECK(degrees[0] == delta);
        CHECK(degrees[1] == delta + 1);
    }
}
