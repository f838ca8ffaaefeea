#include <doctest.h>

#include <random>

#include "superhowe/superpoly.hpp"

using namespace superhowe;

namespace {
const VarSpace vs1(1);
}

TEST_CASE("monomial products carry the Koszul sign") {
    SuperMonomial x1(3);
    x1.even[0] = 1;
    auto sq = mono_mul(x1, x1);
    CHECK(sq.sign == 1);
    CHECK(sq.mono.even[0] == 2);

    SuperMonomial e1(3), e2(3);
    e1.odd = {1};
    e2.odd = {2};
    auto swapped = mono_mul(e2, e1);
    CHECK(swapped.sign == -1);
    CHECK(swapped.mono.odd == std::vector<int>{1, 2});

    CHECK(mono_mul(e1, e1).sign == 0);
}

TEST_CASE("polynomial products") {
    const SuperPoly x1 = SuperPoly::x(vs1, 1);
    const SuperPoly e1 = SuperPoly::eta(vs1, 1);
    // (x1 + e1)(x1 - e1) = x1^2: the cross terms cancel and e1^2 = 0
    CHECK(poly_mul(x1 + e1, x1 - e1) == SuperPoly::x(vs1, 1, 2));

    const SuperPoly one = SuperPoly::constant(vs1, Rational(1));
    const SuperPoly p = x1 + e1.scaled(Rational(-2, 3));
    CHECK(poly_mul(one, p) == p);

    SuperMonomial e12(3), e3(3);
    e12.odd = {1, 2};
    e3.odd = {3};
    const auto prod = mono_mul(e12, e3);
    CHECK(prod.sign == 1);
    CHECK(prod.mono.odd == std::vector<int>{1, 2, 3});
}

TEST_CASE("graded bases and their dimensions") {
    CHECK(basis_of_degree(vs1, 0).size() == 1);
    CHECK(basis_of_degree(vs1, 1).size() == 6);
    CHECK(basis_of_degree(vs1, 3).size() == 38);
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 8; ++d)
            CHECK(static_cast<long>(basis_of_degree(VarSpace(n), d).size()) ==
                  dim_of_degree(VarSpace(n), d));
}

TEST_CASE("coords against a graded basis") {
    const auto basis = basis_of_degree(vs1, 2);
    CHECK(coords(SuperPoly::zero(), basis) == std::vector<Rational>(basis.size()));

    const auto c = coords(SuperPoly::monomial(basis[0]), basis);
    CHECK(c[0] == Rational(1));
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i].is_zero());

    SuperPoly p = SuperPoly::monomial(basis[1]).scaled(Rational(2)) +
                  SuperPoly::monomial(basis[4]).scaled(Rational(-1, 3));
    const auto cp = coords(p, basis);
    CHECK(cp[1] == Rational(2));
    CHECK(cp[4] == Rational(-1, 3));

    CHECK_THROWS_AS(coords(SuperPoly::x(vs1, 1, 3), basis), std::invalid_argument);
}

TEST_CASE("serialization format and round trip") {
    SuperMonomial m(3);
    m.even = {2, 0, 1};
    m.odd = {1, 2};
    const SuperPoly p = SuperPoly::monomial(m, Rational(-3, 2));
    CHECK(to_string(p) == "-3/2 * x1^2 x3 e1 e2");
    CHECK(parse_poly(to_string(p), vs1) == p);

    CHECK(to_string(SuperPoly::zero()) == "0");
    CHECK(parse_poly("0", vs1) == SuperPoly::zero());

    const SuperPoly q = SuperPoly::x(vs1, 1) - SuperPoly::eta(vs1, 1);
    CHECK(to_string(q) == "x1 - e1");
    CHECK(parse_poly(to_string(q), vs1) == q);
    CHECK(parse_poly("-x1 + 1/2 * e1 e2", vs1) ==
          -SuperPoly::x(vs1, 1) + poly_mul(SuperPoly::eta(vs1, 1), SuperPoly::eta(vs1, 2))
                                      .scaled(Rational(1, 2)));

    // canonical form survives a round trip on random polynomials
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const VarSpace vs(1 + static_cast<int>(rng() % 2));
        SuperPoly random;
        for (int t = 0; t < 4; ++t) {
            SuperMonomial mono(vs.num_vars());
            for (int v = 0; v < vs.num_vars(); ++v) mono.even[v] = static_cast<int>(rng() % 3);
            for (int v = 1; v <= vs.num_vars(); ++v)
                if (rng() % 3 == 0) mono.odd.push_back(v);
            random.add_term(mono, Rational(static_cast<long>(rng() % 19) - 9,
                                           1 + static_cast<long>(rng() % 6)));
        }
        CHECK(parse_poly(to_string(random), vs) == random);
    }
}

TEST_CASE("supercommutativity and associativity hold termwise") {
    std::mt19937_64 rng(11);
    auto random_mono = [&rng](const VarSpace& vs, int max_even) {
        SuperMonomial m(vs.num_vars());
        for (int v = 0; v < vs.num_vars(); ++v) m.even[v] = static_cast<int>(rng() % (max_even + 1));
        for (int v = 1; v <= vs.num_vars(); ++v)
            if (rng() % 2 == 0) m.odd.push_back(v);
        return m;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const VarSpace vs(1 + static_cast<int>(rng() % 2));
        const SuperPoly p = SuperPoly::monomial(random_mono(vs, 2), Rational(2));
        const SuperPoly q = SuperPoly::monomial(random_mono(vs, 2), Rational(1, 3));
        const SuperPoly r = SuperPoly::monomial(random_mono(vs, 1));
        const int sign = p.parity() * q.parity();
        const SuperPoly rhs = poly_mul(q, p);
        CHECK(poly_mul(p, q) == (sign == 1 ? -rhs : rhs));
        CHECK(poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r)));
    }
}
