#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superhowe/liealg.hpp"

namespace superhowe {

// Strictly ascending index set I inside {1..2n}; bar(I) applies i -> 2n+1-i
// and re-sorts.  eta_monomial(I) is the ordered product eta_{i_1}...eta_{i_a}.
using IndexSet = std::vector<int>;
IndexSet bar_set(const IndexSet& I, int n);
IndexSet range_set(int k);  // [k] = {1..k}
SuperPoly eta_monomial(const VarSpace& vs, const IndexSet& I);

// Gamma(I) = sum_j (-1)^{j-1} x_{i_j} eta(I \ {i_j}); Gamma(empty) = 0 by
// convention so degenerate edges of the closed formulas vanish gracefully.
SuperPoly gamma_poly(const VarSpace& vs, const IndexSet& I);

// nu_{n,k}: eta([k]) for 0 <= k <= 2n, and eta([2n]) x_{2n+1}^l for k = 2n+l.
SuperPoly nu_vector(int n, int k);

// The joint highest weight vector families for the standard Borel pair
// (b, b') and the reflected pair (b-tilde, b'):
//   omega_{d,0} = x_1^d
//   omega_{d,k} = x_1^d Gamma([k])                              (1 <= k <= 2n)
//   omega_{d,2n+l} = x_1^d (x_{2n+1}^l Gamma([2n]) - l x_{2n+1}^{l-1} eta([2n+1]))
//   omega~_{d,k} = omega_{d,k}                                  (k <= n)
//   omega~_{d,n+l} = x_1^d (x_{2n+1}^l Gamma([n]) - l x_{2n+1}^{l-1} eta_{2n+1} eta([n]))
SuperPoly omega(int d, int k, int n);
SuperPoly omega_tilde(int d, int k, int n);

// Expected weights (frozen from the classification): gl(2n|1) b-weight
// (d+1, 1_{m-1}, 0_{2n-m}, k-m) with m = min(k, 2n), gl(1|1) weight
// (d+1, k-1); for k = 0 these degenerate to (d, 0_{2n}) and (d, 0).
Weight omega_weight_gl_big(int d, int k, int n);
Weight omega_weight_gl_small(int d, int k, int n);
// b-tilde weight (d+1, 1_{k-1}, 0_{2n+1-k}) for k <= n, else
// (d+1, 1_{n-1}, 0_n, l) for k = n+l.
Weight omega_tilde_weight(int d, int k, int n);
// spo(2n|1) restriction (lambda_1 - lambda_2n, ..., lambda_n - lambda_{n+1}):
// (d+1, 1_{k-1}, 0_{n-k}) for 1 <= k <= n, (d+1, 1_{n-1}) for k > n, 0_n at k=0.
Weight tau_weight(int d, int k, int n);

// One odd reflection step b^{i-1} -> b^i.  Requires v to be a b^{i-1}
// highest weight vector of gl_big weight lam (verified); returns (v, lam)
// unchanged when lam(E_{2n+1-i,2n+1-i} + E_{2n+1,2n+1}) = 0, and otherwise
// (eps_{2n+1,2n+1-i} v, lam - delta_{2n+1-i} + epsilon_1), which is verified
// to be a b^i highest weight vector.
std::pair<SuperPoly, Weight> odd_reflect(const SuperPoly& v, const Weight& lam, int i,
                                         const AlgebraSpec& gl_big);
// Full chain i = 1..n, mapping a b-HWV to a b-tilde-HWV.
std::pair<SuperPoly, Weight> odd_reflection_chain(const SuperPoly& v, const Weight& lam,
                                                  const AlgebraSpec& gl_big);

// Harmonic highest weight vectors of the one-variable factor spanned by
// eta_1..eta_2n, x_{2n+1}:
//   s_{n,k} = eta([k]) for 0 <= k <= n, and Delta_k for n+1 <= k <= 2n+1 with
//   Delta_k = sum_{a=0}^{k-n-1} b_a x_{2n+1}^{2(k-n-a)-1}
//             sum_{|I|=a, I subset {2n-k+2..n}} eta([2n+1-k], I, bar I),
//   b_0 = 1, b_a = prod_{r=0}^{a-1} (2(k-n-r)-1).
// Throws when k is outside 0..2n+1.
SuperPoly s_vector(int n, int k);
SuperPoly delta_vector(int n, int k);  // the k >= n+1 branch only

// Harmonic joint highest weight vector family:
//   p_{0,0} = 1,  p_{d,0} = x_1^d,
//   p_{d,k} = x_1^d Gamma([k])                                   (1 <= k <= n)
//   p_{d,k} = x_1^d sum_a b_a x_{2n+1}^{2(k-n-a)-1} sum_I Gamma([2n+1-k],I,bar I)
//           - x_1^d sum_a b_{a+1} x_{2n+1}^{2(k-n-a)-2} eta_{2n+1} sum_I eta([2n+1-k],I,bar I)
//                                                                (n+1 <= k <= 2n+1)
// which agrees with x_1^d zeta_{1,2}(s_{n,k}) for k >= 1.
SuperPoly p_vector(int d, int k, int n);

// Partner weights of the harmonic decomposition, along (F_{1,1}, F_{2,2})
// with alpha = (2n-1)/2: the entry p_{d,k} has spo weight tau and partner
// weight (d+1+alpha, k-1-alpha) for k <= n, while p_{d,2n+1-k} carries
// (d+1+alpha, 2n-k-alpha).
Weight harmonic_partner_weight(int d, int k, int n);

// Addressable family member: a family tag plus its (d, k) parameters (nu,
// gamma, s and delta ignore d).
struct HwvFamilyId {
    enum class Family { Omega, OmegaTilde, Nu, Gamma, S, Delta, P };
    Family family;
    int d = 0;
    int k = 0;
};

// nullopt for unknown names; accepted names are omega, omega_tilde, nu,
// gamma, s, delta, p.
std::optional<HwvFamilyId::Family> family_from_name(const std::string& name);

// Builds the family member, throwing std::invalid_argument with the valid
// parameter range on out-of-range input.
SuperPoly build_family(const HwvFamilyId& id, int n);

}  // namespace superhowe
