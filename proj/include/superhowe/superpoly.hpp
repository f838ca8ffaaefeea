#pragma once

#include <map>
#include <string>
#include <vector>

#include "superhowe/rational.hpp"

namespace superhowe {

// The variable space behind S(E): 2n+1 commuting variables x_1..x_{2n+1}
// and 2n+1 anticommuting variables eta_1..eta_{2n+1}.  Indices are 1-based
// throughout, matching the serialization (x3, e3, ...).
struct VarSpace {
    int n;
    explicit VarSpace(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("VarSpace: n must be >= 1");
    }
    int num_vars() const { return 2 * n + 1; }
};

// Canonical-form monomial: exponent vector for the x's plus a strictly
// ascending list of eta indices.  Any sign produced while sorting eta's is
// absorbed into the owning coefficient, so equal monomials compare equal.
struct SuperMonomial {
    std::vector<int> even;  // size 2n+1, exponents of x_1..x_{2n+1}
    std::vector<int> odd;   // ascending indices in {1..2n+1}, no repeats

    explicit SuperMonomial(int num_vars) : even(num_vars, 0) {}
    SuperMonomial(std::vector<int> e, std::vector<int> o)
        : even(std::move(e)), odd(std::move(o)) {}

    int degree() const {
        int d = static_cast<int>(odd.size());
        for (int e : even) d += e;
        return d;
    }
    // Z2-parity in the superalgebra sense: number of eta factors mod 2.
    int parity() const { return static_cast<int>(odd.size()) % 2; }

    bool operator==(const SuperMonomial&) const = default;
};

// Total order on monomials: by degree, then by odd index list (ascending
// lexicographic), then by even exponent vector (descending lexicographic, so
// that x_1-heavy monomials come first).  This is the documented order used
// for graded bases, leading-term normalization and serialization.
struct MonoOrder {
    bool operator()(const SuperMonomial& a, const SuperMonomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.odd != b.odd) return a.odd < b.odd;
        return a.even > b.even;
    }
};

// (sign, monomial) product of two monomials; sign 0 encodes a vanishing
// product (shared eta index).  The Koszul convention is used: swapping two
// eta's contributes -1, x's are transparent.
struct MonoProduct {
    int sign;  // +1, -1, or 0
    SuperMonomial mono;
};
MonoProduct mono_mul(const SuperMonomial& a, const SuperMonomial& b);

// Finite Rational-linear combination of monomials; no zero coefficient is
// ever stored, so equality of polynomials is equality of term maps.
class SuperPoly {
public:
    using TermMap = std::map<SuperMonomial, Rational, MonoOrder>;

    SuperPoly() = default;
    static SuperPoly zero() { return SuperPoly(); }
    static SuperPoly constant(const VarSpace& vs, const Rational& c);
    static SuperPoly monomial(SuperMonomial m, const Rational& c = Rational(1));
    static SuperPoly x(const VarSpace& vs, int i, int power = 1);
    static SuperPoly eta(const VarSpace& vs, int i);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    // Degree of a homogeneous polynomial (throws on mixed degrees); use
    // is_homogeneous() first when unsure.
    int degree() const;
    bool is_homogeneous() const;
    // Superalgebra parity if all terms agree, else -1.
    int parity() const;

    void add_term(const SuperMonomial& m, const Rational& c);
    Rational coeff(const SuperMonomial& m) const;

    // First term in the documented monomial order.
    const std::pair<const SuperMonomial, Rational>& leading() const;

    SuperPoly operator-() const;
    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { a += b; return a; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { a -= b; return a; }
    SuperPoly scaled(const Rational& c) const;

    bool operator==(const SuperPoly&) const = default;

private:
    TermMap terms_;
};

SuperPoly poly_mul(const SuperPoly& p, const SuperPoly& q);

// All monomials of total degree d, sorted in the documented order.
// The count is sum_b C(2n+1, b) * C(d-b+2n, 2n) over the eta-degree b.
std::vector<SuperMonomial> basis_of_degree(const VarSpace& vs, int d);
long dim_of_degree(const VarSpace& vs, int d);

// Coordinate vector of a homogeneous polynomial with respect to an ordered
// monomial basis; throws if a term of p is missing from the basis.
std::vector<Rational> coords(const SuperPoly& p, const std::vector<SuperMonomial>& basis);

// Text form: terms like "-3/2 * x1^2 x3 e1 e2" joined with " + " / " - ",
// in the documented order; the zero polynomial prints as "0".  to_string
// and parse_poly are exact inverses on canonical forms.
std::string to_string(const SuperPoly& p);
SuperPoly parse_poly(const std::string& text, const VarSpace& vs);

}  // namespace superhowe
