#pragma once

#include <map>
#include <string>
#include <vector>

#include "superhowe/superpoly.hpp"

namespace superhowe {

// Primitive operator symbol on S(E): multiplication by x_i or eta_i, or the
// corresponding derivation.  mul_eta and del_eta are odd, the others even.
struct PrimOp {
    enum class Kind { MulX, MulEta, DelX, DelEta };
    Kind kind;
    int index;  // 1..2n+1

    int parity() const { return (kind == Kind::MulEta || kind == Kind::DelEta) ? 1 : 0; }
    auto operator<=>(const PrimOp&) const = default;
};

using OpWord = std::vector<PrimOp>;

// Finite linear combination of words in primitive symbols.  Words act
// right-to-left (the rightmost symbol applies first); the empty word is the
// identity, so constant terms are empty words with a scalar coefficient.
// All words in one operator must share the same total parity: equality of
// operators is decided by application to graded spanning sets, never by
// normal ordering.
class DiffOp {
public:
    DiffOp() = default;

    static DiffOp zero() { return DiffOp(); }
    static DiffOp identity() { return word(OpWord{}); }
    static DiffOp constant(const Rational& c) { return word(OpWord{}, c); }
    static DiffOp word(OpWord w, const Rational& c = Rational(1));
    static DiffOp mul_x(int i) { return word({{PrimOp::Kind::MulX, i}}); }
    static DiffOp mul_eta(int i) { return word({{PrimOp::Kind::MulEta, i}}); }
    static DiffOp del_x(int i) { return word({{PrimOp::Kind::DelX, i}}); }
    static DiffOp del_eta(int i) { return word({{PrimOp::Kind::DelEta, i}}); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<OpWord, Rational>& terms() const { return terms_; }

    // Total parity shared by all words; -1 when the operator mixes parities.
    int parity() const;

    void add_word(const OpWord& w, const Rational& c);
    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { a += b; return a; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { a -= b; return a; }
    DiffOp scaled(const Rational& c) const;

private:
    std::map<OpWord, Rational> terms_;
};

// Action on S(E).  Multiplications multiply from the left; del_x is the
// ordinary partial derivative; del_eta is the odd left derivation
//   del_eta_i(eta_{j1}...eta_{jk}) = (-1)^{p-1} eta_{j1}...^eta_{jp}...eta_{jk}
// when i = j_p (x factors are transparent).
SuperPoly apply(const PrimOp& op, const SuperPoly& p);
SuperPoly apply(const DiffOp& op, const SuperPoly& p);

// Word concatenation, bilinear: apply(compose(a,b), p) = apply(a, apply(b, p)).
DiffOp compose(const DiffOp& a, const DiffOp& b);

// [a, b] = a b - (-1)^{|a||b|} b a; throws when an input is not
// parity-homogeneous.
DiffOp supercommutator(const DiffOp& a, const DiffOp& b);

// True iff a and b agree on every basis monomial of degree <= dmax.
bool op_equal_on_degree(const DiffOp& a, const DiffOp& b, int dmax, const VarSpace& vs);

std::string to_string(const DiffOp& op);

}  // namespace superhowe
