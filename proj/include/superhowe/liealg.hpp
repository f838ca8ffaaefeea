#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superhowe/diffops.hpp"

namespace superhowe {

// Joint eigenvalue vector along an algebra's ordered Cartan list.
struct Weight {
    std::vector<Rational> coords;

    Weight() = default;
    explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;

    std::string str() const;  // "(7/2, -1/2)"
};

// A concrete realization of one of the four algebras acting on S(E) by
// differential operators, together with its Cartan and Borel data.
//
//   gl_big   gl(2n|1): generators eps_{i,j}; Cartan eps_{1,1}..eps_{2n+1,2n+1};
//            raising = strictly upper triangular.  borel_chain[k] is the
//            raising set of the Borel b^k obtained from the standard b by the
//            first k odd reflections (b^0 = b, b^n = b-tilde, which trades
//            eps_{i,2n+1} for eps_{2n+1,i} when n+1 <= i <= 2n).
//   gl_small gl(1|1): zeta_{1,1}, zeta_{2,2}, zeta_{1,2}, zeta_{2,1};
//            raising = {zeta_{1,2}}.
//   osp22    osp(2|2) = n'- + k' + n'+: k' = {F_{1,1},F_{2,2},F_{1,2},F_{2,1}}
//            with the Cartan shifted by +-(2n-1)/2, n'+ = {D_12, D_22},
//            n'- = {R_12, R_22}; raising = {F_12, D_12, D_22}.
//   spo      spo(2n|1) inside gl(2n|1) (each matrix unit E_{i,j} acts as
//            eps_{i,j}); Cartan eps_{i,i} - eps_{2n+1-i,2n+1-i} for i = 1..n;
//            raising = upper-triangular even part plus the n odd vectors
//            eps_{k,2n+1} + eps_{2n+1,2n+1-k}.
struct AlgebraSpec {
    enum class Label { GlBig, GlSmall, Osp22, Spo };

    Label label;
    int n;
    std::map<std::string, DiffOp> generators;
    std::vector<DiffOp> cartan;
    std::vector<DiffOp> raising;
    std::vector<DiffOp> lowering;
    std::vector<std::vector<DiffOp>> borel_chain;  // gl_big only, size n+1

    const DiffOp& gen(const std::string& name) const;
};

AlgebraSpec build_gl_big(int n);
AlgebraSpec build_gl_small(int n);
AlgebraSpec build_osp22(int n);
AlgebraSpec build_spo(int n);

// Individual operator constructors (shared with the builders).
DiffOp make_eps(int i, int j, int n);
DiffOp make_zeta(int k, int l, int n);

// Copy of a gl_big spec with the raising set of borel_chain[step].
AlgebraSpec with_borel_step(const AlgebraSpec& gl_big, int step);

// Simultaneous Cartan eigenvalue vector of v, or nullopt when v is not a
// weight vector.  Throws on v = 0.
std::optional<Weight> weight_of(const SuperPoly& v, const AlgebraSpec& alg);
std::optional<Weight> weight_of(const SuperPoly& v, const std::vector<DiffOp>& cartan);

// Weight of v when every raising operator kills v, nullopt otherwise.
std::optional<Weight> is_hwv(const SuperPoly& v, const AlgebraSpec& alg);
std::optional<Weight> is_hwv(const SuperPoly& v, const std::vector<DiffOp>& cartan,
                             const std::vector<DiffOp>& raising);

// Integer eigenvalues of the diagonal operators on a single monomial,
// computed combinatorially.  eps_{i,i} counts x_i plus eta_i content;
// zeta_{1,1} counts x_1..x_{2n} and eta_{2n+1}; zeta_{2,2} the complement.
long eps_diag_eigenvalue(const SuperMonomial& m, int i);
long zeta11_eigenvalue(const SuperMonomial& m, int n);
long zeta22_eigenvalue(const SuperMonomial& m, int n);

// Integer slice key of a monomial for the algebra's Cartan: for osp22 the
// unshifted zeta eigenvalues are used (the +-(2n-1)/2 shift is constant on
// all of S(E), so the slices are the same).
std::vector<long> cartan_key(const SuperMonomial& m, const AlgebraSpec& alg);

// True when all Cartan operators pairwise supercommute on S^d, d <= dmax.
bool cartan_supercommutes(const AlgebraSpec& alg, int dmax);

}  // namespace superhowe
