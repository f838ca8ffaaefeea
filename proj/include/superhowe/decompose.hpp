#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "superhowe/hwv.hpp"
#include "superhowe/liealg.hpp"

namespace superhowe {

// Thrown when one of the structural audits fails; identity names the exact
// equality that broke.  Audits are hard errors, never warnings: they are the
// falsifiers of the whole computation.
class AuditError : public std::runtime_error {
public:
    AuditError(std::string identity, const std::string& detail)
        : std::runtime_error(identity + ": " + detail), identity_(std::move(identity)) {}
    const std::string& identity() const { return identity_; }

private:
    std::string identity_;
};

// A graded weight slice: simultaneous eigenvectors of the chosen Cartans.
struct WeightSpaceBasis {
    int degree = 0;
    Weight weight;  // concatenated eigenvalues along the chosen Cartan lists
    std::vector<SuperPoly> basis;
};

// One isotypic summand of a graded component.
struct IsotypicEntry {
    Weight spo_weight;
    Weight partner_weight;  // along (F_{1,1}, F_{2,2}), shift included
    int degree = 0;
    int parity = 0;  // degree mod 2
    SuperPoly hwv;
    long spo_dim = 0;      // dimension of the spo(2n|1)-module generated by hwv
    long partner_dim = 0;  // dimension of the k'-module generated by hwv
};

struct DimAudit {
    long dim_sd = 0;
    long dim_harmonic = 0;
    long dim_lowered = 0;  // dim (R_12 S^{d-2} + R_22 S^{d-2})
    long sum_products = 0;
};

struct DecompositionReport {
    int n = 0;
    int degree = 0;
    std::vector<IsotypicEntry> entries;
    DimAudit dim_audit;
};

// Basis monomials of S^d grouped by the integer eigenvalues of the full
// diagonal torus (H_1..H_n, zeta_{1,1}, zeta_{2,2}); every operator used by
// the engine maps one slice into one slice, so kernels, ranks and module
// generation all decompose along these keys.
std::map<std::vector<long>, std::vector<SuperMonomial>> diagonal_slices(int n, int d);

// Joint Cartan eigenspaces of S^d for an algebra pair; the weight carries the
// exact eigenvalues along alg_a's Cartan list followed by alg_b's.  Slices are
// ordered by their integer keys, so iteration order is deterministic.
std::vector<WeightSpaceBasis> weight_slices(int n, int d, const AlgebraSpec& alg_a,
                                            const AlgebraSpec& alg_b);

// Combinations of `space` lying in the joint kernel of `ops`; each result is
// expressed in the given spanning polynomials.
std::vector<SuperPoly> kernel_in_span(const std::vector<SuperPoly>& space,
                                      const std::vector<DiffOp>& ops);

// Basis of S^d(E)^{n'+} = ker D_12 cap ker D_22 on S^d, computed slice by
// slice via exact nullspaces.
std::vector<SuperPoly> harmonic_basis(int n, int d);
long harmonic_dim(int n, int d);

struct JointHwv {
    SuperPoly v;  // normalized: leading coefficient 1 in the monomial order
    Weight weight_a;
    Weight weight_b;
};

// Basis of the joint highest weight vectors in S^d (or its harmonic subspace
// when restrict_harmonic is set) for the two algebras: vectors killed by
// every raising operator of both, refined to joint Cartan weight vectors.
// Entries are sorted by descending weight_a, then descending weight_b.
std::vector<JointHwv> joint_hwv_enumerate(int n, int d, const AlgebraSpec& alg_a,
                                          const AlgebraSpec& alg_b, bool restrict_harmonic);

// Closure of {v} under repeated application of the lowering operators,
// truncated at degree_cap; returns an exact basis of the generated subspace.
std::vector<SuperPoly> generate_module(const SuperPoly& v, const std::vector<DiffOp>& lowering,
                                       int degree_cap, int n);

// Rank of R_12 S^{d-2} + R_22 S^{d-2} inside S^d (0 when d < 2).
long lowered_image_dim(int n, int d);

// Full report for one degree, with all audits enforced:
//   dim S^d = dim harmonic + dim lowered (trivial intersection), and
//   sum spo_dim * partner_dim = dim harmonic.
DecompositionReport decompose_harmonic(int n, int d);

// spo-weight occurrences across degrees 0..dmax of the harmonic
// decomposition; enforces that every (weight, parity) pair occurs at most
// once.
struct ParityReport {
    int n = 0;
    int dmax = 0;
    std::map<Weight, std::vector<int>> degrees_by_weight;
};
ParityReport parity_split(int n, int dmax);

}  // namespace superhowe
