#include "superhowe/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "superhowe/ratlinalg.hpp"

namespace superhowe {

std::optional<Rational> proportional(const SuperPoly& a, const SuperPoly& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const auto& [lead, ca] = a.leading();
    const Rational cb = b.coeff(lead);
    if (cb.is_zero()) return std::nullopt;
    const Rational c = ca / cb;
    if (a == b.scaled(c)) return c;
    return std::nullopt;
}

namespace {

std::string at(int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }

std::string at_k(int n, int d, int k) { return at(n, d) + " k=" + std::to_string(k); }

// ---------------------------------------------------------------------------
// A1: closed formulas for omega / omega~ and their weights
// ---------------------------------------------------------------------------

CheckLedger suite_a1(int nmax, int dmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec gl_big = build_gl_big(n);
        const AlgebraSpec gl_small = build_gl_small(n);
        const AlgebraSpec spo = build_spo(n);
        const AlgebraSpec tilde = with_borel_step(gl_big, n);
        const DiffOp& zeta12 = gl_small.gen("zeta_1_2");
        bool formula_ok = true, hwv_ok = true, tilde_ok = true, tau_ok = true;
        std::string why;
        for (int d = 0; d <= dmax && formula_ok && hwv_ok && tilde_ok && tau_ok; ++d)
            for (int k = 0; k <= 2 * n + 3; ++k) {
                const SuperPoly w = omega(d, k, n);
                const SuperPoly wt = omega_tilde(d, k, n);
                if (k >= 1) {
                    const SuperPoly lhs = apply(zeta12, poly_mul(SuperPoly::x(vs, 1, d), nu_vector(n, k)));
                    if (lhs != w) { formula_ok = false; why = at_k(n, d, k); break; }
                }
                const auto wb = is_hwv(w, gl_big);
                const auto ws = is_hwv(w, gl_small);
                if (!wb || !ws || *wb != omega_weight_gl_big(d, k, n) ||
                    *ws != omega_weight_gl_small(d, k, n)) {
                    hwv_ok = false; why = at_k(n, d, k); break;
                }
                const auto wtb = is_hwv(wt, tilde);
                const auto wts = is_hwv(wt, gl_small);
                if (!wtb || !wts || *wtb != omega_tilde_weight(d, k, n) ||
                    *wts != omega_weight_gl_small(d, k, n) || (k <= n && wt != w)) {
                    tilde_ok = false; why = at_k(n, d, k); break;
                }
                // spo restriction tau = (lambda_1 - lambda_2n, ..., lambda_n - lambda_{n+1})
                const auto spo_w = weight_of(wt, spo);
                Weight tau;
                for (int i = 1; i <= n; ++i)
                    tau.coords.push_back(wtb->coords[i - 1] - wtb->coords[2 * n - i]);
                if (!spo_w || *spo_w != tau || tau != tau_weight(d, k, n)) {
                    tau_ok = false; why = at_k(n, d, k); break;
                }
            }
        ledger.add("omega = zeta_{1,2}(x_1^d nu) at n=" + std::to_string(n), formula_ok, why);
        ledger.add("omega is a (b, b') joint HWV with stated weights, n=" + std::to_string(n),
                   hwv_ok, why);
        ledger.add("omega~ is a (b~, b') joint HWV with stated weights, n=" + std::to_string(n),
                   tilde_ok, why);
        ledger.add("spo restriction of omega~ weights, n=" + std::to_string(n), tau_ok, why);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// A2: Gamma(I) via the column determinant
// ---------------------------------------------------------------------------

SuperPoly column_determinant(const std::vector<std::vector<SuperPoly>>& m) {
    const std::size_t a = m.size();
    std::vector<std::size_t> perm(a);
    std::iota(perm.begin(), perm.end(), 0);
    SuperPoly det;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = i + 1; j < a; ++j)
                if (perm[i] > perm[j]) ++inversions;
        SuperPoly prod = m[perm[0]][0];
        for (std::size_t col = 1; col < a; ++col) prod = poly_mul(prod, m[perm[col]][col]);
        det += (inversions % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

void subsets_up_to(int max_index, int max_size, std::vector<int>& cur, int start,
                   std::vector<IndexSet>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int i = start; i <= max_index; ++i) {
        cur.push_back(i);
        subsets_up_to(max_index, max_size, cur, i + 1, out);
        cur.pop_back();
    }
}

CheckLedger suite_a2(int nmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        const VarSpace vs(n);
        std::vector<IndexSet> sets;
        std::vector<int> cur;
        subsets_up_to(2 * n, 4, cur, 1, sets);
        bool ok = true;
        std::string why;
        for (const IndexSet& I : sets) {
            const std::size_t a = I.size();
            std::vector<std::vector<SuperPoly>> m(a, std::vector<SuperPoly>(a));
            for (std::size_t r = 0; r < a; ++r) {
                m[r][0] = SuperPoly::x(vs, I[r]);
                for (std::size_t c = 1; c < a; ++c) m[r][c] = SuperPoly::eta(vs, I[r]);
            }
            Rational fact(1);
            for (std::size_t i = 2; i < a; ++i) fact *= Rational(static_cast<long>(i));
            if (gamma_poly(vs, I).scaled(fact) != column_determinant(m)) {
                ok = false;
                why = "n=" + std::to_string(n) + " |I|=" + std::to_string(a);
                break;
            }
        }
        ledger.add("(|I|-1)! Gamma(I) equals the column determinant, n=" + std::to_string(n), ok,
                   why);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// T62: harmonicity filter for omega~
// ---------------------------------------------------------------------------

CheckLedger suite_t62(int nmax, int dmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec osp = build_osp22(n);
        const DiffOp& d12 = osp.gen("D_12");
        const DiffOp& d22 = osp.gen("D_22");
        bool harmonic_ok = true, filter_ok = true;
        std::string why;
        for (int d = 0; d <= dmax; ++d) {
            for (int k = 0; k <= n + 1; ++k) {
                const SuperPoly w = omega_tilde(d, k, n);
                if (!apply(d12, w).is_zero() || !apply(d22, w).is_zero()) {
                    harmonic_ok = false;
                    why = at_k(n, d, k);
                }
            }
            for (int l = 2; l <= 4; ++l) {
                const SuperPoly w = omega_tilde(d, n + l, n);
                SuperPoly expected =
                    poly_mul(poly_mul(SuperPoly::x(vs, 1, d), SuperPoly::x(vs, 2 * n + 1, l - 2)),
                             eta_monomial(vs, range_set(n)))
                        .scaled(Rational(-l * (l - 1)));
                if (apply(d12, w) != expected || expected.is_zero()) {
                    filter_ok = false;
                    why = at_k(n, d, n + l);
                }
            }
        }
        ledger.add("omega~_{d,k} harmonic for k <= n+1, n=" + std::to_string(n), harmonic_ok, why);
        ledger.add("D_12 omega~_{d,n+l} = -l(l-1) x_1^d x_{2n+1}^{l-2} eta([n]) for l >= 2, n=" +
                       std::to_string(n),
                   filter_ok, why);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// PLP: one-variable harmonics s_{n,k}
// ---------------------------------------------------------------------------

CheckLedger suite_plp(int nmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        const AlgebraSpec osp = build_osp22(n);
        const AlgebraSpec spo = build_spo(n);
        bool harmonic_ok = true, weight_ok = true, support_ok = true;
        std::string why;
        for (int k = 0; k <= 2 * n + 1; ++k) {
            const SuperPoly s = s_vector(n, k);
            if (!apply(osp.gen("D_22"), s).is_zero()) {
                harmonic_ok = false;
                why = "k=" + std::to_string(k);
            }
            // s_{n,k} lives in the copy spanned by eta_1..eta_2n, x_{2n+1}
            for (const auto& [m, c] : s.terms()) {
                for (int i = 1; i <= 2 * n; ++i)
                    if (m.even[i - 1] != 0) support_ok = false;
                if (std::binary_search(m.odd.begin(), m.odd.end(), 2 * n + 1)) support_ok = false;
            }
            const auto w = k == 0 ? weight_of(s, spo) : is_hwv(s, spo);
            const int mm = std::min(k, 2 * n + 1 - k);
            Weight expected;
            for (int i = 0; i < n; ++i) expected.coords.push_back(Rational(i < mm ? 1 : 0));
            if (!w || *w != expected) {
                weight_ok = false;
                why = "k=" + std::to_string(k);
            }
        }
        ledger.add("D_22 s_{n,k} = 0 for all k, n=" + std::to_string(n), harmonic_ok, why);
        ledger.add("s_{n,k} is an spo HWV of weight (1_m, 0_{n-m}), n=" + std::to_string(n),
                   weight_ok, why);
        ledger.add("s_{n,k} lies in the eta_1..eta_2n, x_{2n+1} copy, n=" + std::to_string(n),
                   support_ok, why);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// GLGL: hook census of the unrestricted gl pair
// ---------------------------------------------------------------------------

CheckLedger suite_glgl(int nmax, int dmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        const AlgebraSpec gl_big = build_gl_big(n);
        const AlgebraSpec gl_small = build_gl_small(n);
        bool count_ok = true, weight_ok = true, match_ok = true;
        std::string why;
        for (int d = 0; d <= dmax; ++d) {
            const auto found = joint_hwv_enumerate(n, d, gl_big, gl_small, false);
            // hooks (a, 1^{d-a}), a = 1..d; just the empty diagram at d = 0
            std::vector<std::pair<Weight, Weight>> expected;
            if (d == 0) {
                expected.emplace_back(omega_weight_gl_big(0, 0, n), omega_weight_gl_small(0, 0, n));
            } else {
                for (int a = d; a >= 1; --a)
                    expected.emplace_back(omega_weight_gl_big(a - 1, d - a + 1, n),
                                          omega_weight_gl_small(a - 1, d - a + 1, n));
            }
            if (found.size() != expected.size()) {
                count_ok = false;
                why = at(n, d);
                continue;
            }
            for (std::size_t i = 0; i < found.size(); ++i) {
                if (found[i].weight_a != expected[i].first ||
                    found[i].weight_b != expected[i].second) {
                    weight_ok = false;
                    why = at(n, d);
                }
            }
            for (const JointHwv& h : found) {
                // gl(1|1) weight (d'+1, k-1) pins the omega parameters.
                const long dd = d == 0 ? 0 : h.weight_b.coords[0].to_long() - 1;
                const long kk = d - dd;
                if (!proportional(h.v, omega(static_cast<int>(dd), static_cast<int>(kk), n))) {
                    match_ok = false;
                    why = at(n, d);
                }
            }
        }
        ledger.add("joint (b, b') HWV count equals the hook census, n=" + std::to_string(n),
                   count_ok, why);
        ledger.add("hook weights sigma(lambda) x gamma(lambda), n=" + std::to_string(n), weight_ok,
                   why);
        ledger.add("each enumerated HWV is proportional to an omega, n=" + std::to_string(n),
                   match_ok, why);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// TWRB: odd reflection chain
// ---------------------------------------------------------------------------

CheckLedger suite_twrb(int nmax, int dmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        const AlgebraSpec gl_big = build_gl_big(n);
        bool ok = true;
        std::string why;
        for (int d = 0; d <= dmax && ok; ++d)
            for (int k = 0; k <= 2 * n + 3; ++k) {
                const auto [v, lam] =
                    odd_reflection_chain(omega(d, k, n), omega_weight_gl_big(d, k, n), gl_big);
                if (lam != omega_tilde_weight(d, k, n) ||
                    !proportional(v, omega_tilde(d, k, n))) {
                    ok = false;
                    why = at_k(n, d, k);
                    break;
                }
            }
        ledger.add("odd reflections carry omega_{d,k} to omega~_{d,k} up to scalar, n=" +
                       std::to_string(n),
                   ok, why);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// SHIFT: zeta vs F identities
// ---------------------------------------------------------------------------

CheckLedger suite_shift(int nmax, int dmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec osp = build_osp22(n);
        const AlgebraSpec gls = build_gl_small(n);
        const Rational alpha(2 * n - 1, 2);
        const bool c11 = op_equal_on_degree(gls.gen("zeta_1_1") - osp.gen("F_1_1"),
                                            DiffOp::constant(-alpha), dmax, vs);
        const bool c22 = op_equal_on_degree(gls.gen("zeta_2_2") - osp.gen("F_2_2"),
                                            DiffOp::constant(alpha), dmax, vs);
        const bool c12 =
            op_equal_on_degree(gls.gen("zeta_1_2"), -osp.gen("F_1_2"), dmax, vs);
        const bool c21 =
            op_equal_on_degree(gls.gen("zeta_2_1"), -osp.gen("F_2_1"), dmax, vs);
        ledger.add("zeta_{1,1} - F_{1,1} = -(2n-1)/2, n=" + std::to_string(n), c11);
        ledger.add("zeta_{2,2} - F_{2,2} = +(2n-1)/2, n=" + std::to_string(n), c22);
        ledger.add("zeta_{1,2} = -F_{1,2}, n=" + std::to_string(n), c12);
        ledger.add("zeta_{2,1} = -F_{2,1}, n=" + std::to_string(n), c21);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// CLOS: osp(2|2) closure at the application level
// ---------------------------------------------------------------------------

struct IndexedMonoLess {
    bool operator()(const std::pair<std::size_t, SuperMonomial>& a,
                    const std::pair<std::size_t, SuperMonomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return MonoOrder()(a.second, b.second);
    }
};
using FlatIndex = std::map<std::pair<std::size_t, SuperMonomial>, std::size_t, IndexedMonoLess>;

SparseEchelon::SparseVec flatten_action(const DiffOp& op,
                                        const std::vector<SuperMonomial>& domain,
                                        FlatIndex& index) {
    SparseEchelon::SparseVec out;
    for (std::size_t j = 0; j < domain.size(); ++j) {
        const SuperPoly image = apply(op, SuperPoly::monomial(domain[j]));
        for (const auto& [m, c] : image.terms()) {
            auto [it, inserted] = index.try_emplace({j, m}, index.size());
            out.emplace(it->second, c);
        }
    }
    return out;
}

CheckLedger suite_clos(int nmax, int dmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec osp = build_osp22(n);
        std::vector<SuperMonomial> domain;
        for (int d = 0; d <= dmax; ++d)
            for (SuperMonomial& m : basis_of_degree(vs, d)) domain.push_back(std::move(m));

        const std::vector<std::string> names = {"F_1_1", "F_2_2", "F_1_2", "F_2_1",
                                                "D_12",  "D_22",  "R_12",  "R_22"};
        FlatIndex index;
        SparseEchelon span;
        for (const std::string& name : names)
            span.insert(flatten_action(osp.gen(name), domain, index));

        bool ok = true;
        std::string why;
        for (std::size_t i = 0; i < names.size() && ok; ++i)
            for (std::size_t j = i; j < names.size(); ++j) {
                const DiffOp bracket = supercommutator(osp.gen(names[i]), osp.gen(names[j]));
                if (!span.contains(flatten_action(bracket, domain, index))) {
                    ok = false;
                    why = "[" + names[i] + ", " + names[j] + "] at n=" + std::to_string(n);
                    break;
                }
            }
        ledger.add("supercommutators of {F,D,R} stay in their span, n=" + std::to_string(n), ok,
                   why);

        // [k', n'+] stays inside n'+
        FlatIndex idx2;
        SparseEchelon nplus_span;
        nplus_span.insert(flatten_action(osp.gen("D_12"), domain, idx2));
        nplus_span.insert(flatten_action(osp.gen("D_22"), domain, idx2));
        bool knp = true;
        std::string why2;
        for (const std::string& f : {"F_1_1", "F_2_2", "F_1_2", "F_2_1"})
            for (const std::string& dd : {"D_12", "D_22"}) {
                const DiffOp bracket = supercommutator(osp.gen(f), osp.gen(dd));
                if (!nplus_span.contains(flatten_action(bracket, domain, idx2))) {
                    knp = false;
                    why2 = "[" + f + ", " + dd + "] at n=" + std::to_string(n);
                }
            }
        ledger.add("[k', n'+] lands in n'+, n=" + std::to_string(n), knp, why2);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// DUAL: dual-pair supercommutation
// ---------------------------------------------------------------------------

CheckLedger suite_dual(int nmax, int dmax) {
    CheckLedger ledger;
    const DiffOp zero;
    for (int n = 1; n <= nmax; ++n) {
        const VarSpace vs(n);
        const AlgebraSpec spo = build_spo(n);
        const AlgebraSpec osp = build_osp22(n);
        bool ok = true;
        std::string why;
        for (const auto& [an, a] : spo.generators) {
            for (const auto& [bn, b] : osp.generators)
                if (!op_equal_on_degree(supercommutator(a, b), zero, dmax, vs)) {
                    ok = false;
                    why = "[" + an + ", " + bn + "] at n=" + std::to_string(n);
                }
            if (!ok) break;
        }
        ledger.add("[spo(2n|1), {F,D,R}] = 0 on S^d, d <= " + std::to_string(dmax) +
                       ", n=" + std::to_string(n),
                   ok, why);

        const AlgebraSpec gl_big = build_gl_big(n);
        const AlgebraSpec gl_small = build_gl_small(n);
        bool ok2 = true;
        std::string why2;
        for (const auto& [an, a] : gl_big.generators) {
            for (const auto& [bn, b] : gl_small.generators)
                if (!op_equal_on_degree(supercommutator(a, b), zero, dmax, vs)) {
                    ok2 = false;
                    why2 = "[" + an + ", " + bn + "] at n=" + std::to_string(n);
                }
            if (!ok2) break;
        }
        ledger.add("[gl(2n|1), gl(1|1)] = 0 on S^d, d <= " + std::to_string(dmax) +
                       ", n=" + std::to_string(n),
                   ok2, why2);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// KDIR: direct sum of harmonics and lowered image
// ---------------------------------------------------------------------------

CheckLedger suite_kdir(int nmax, int dmax) {
    CheckLedger ledger;
    for (int n = 1; n <= nmax; ++n) {
        bool dims_ok = true, direct_ok = true;
        std::string why;
        const AlgebraSpec osp = build_osp22(n);
        const std::vector<DiffOp> nminus = {osp.gen("R_12"), osp.gen("R_22")};
        for (int d = 0; d <= dmax; ++d) {
            const long sd = dim_of_degree(VarSpace(n), d);
            const std::vector<SuperPoly> harm = harmonic_basis(n, d);
            const long lowered = lowered_image_dim(n, d);
            if (static_cast<long>(harm.size()) + lowered != sd) {
                dims_ok = false;
                why = at(n, d);
            }
            if (d >= 2) {
                std::map<SuperMonomial, std::size_t, MonoOrder> index;
                SparseEchelon span;
                auto to_sparse = [&index](const SuperPoly& p) {
                    SparseEchelon::SparseVec v;
                    for (const auto& [m, c] : p.terms()) {
                        auto [it, inserted] = index.try_emplace(m, index.size());
                        v.emplace(it->second, c);
                    }
                    return v;
                };
                for (const SuperPoly& h : harm) span.insert(to_sparse(h));
                for (const SuperMonomial& m : basis_of_degree(VarSpace(n), d - 2))
                    for (const DiffOp& op : nminus) {
                        const SuperPoly w = apply(op, SuperPoly::monomial(m));
                        if (!w.is_zero()) span.insert(to_sparse(w));
                    }
                if (static_cast<long>(span.rank()) != sd) {
                    direct_ok = false;
                    why = at(n, d);
                }
            }
        }
        ledger.add("dim S^d = dim harmonic + dim n'- S^{d-2}, n=" + std::to_string(n), dims_ok,
                   why);
        ledger.add("harmonics and lowered image intersect trivially, n=" + std::to_string(n),
                   direct_ok, why);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// HDEC: harmonic decomposition shape and completeness
// ---------------------------------------------------------------------------

bool entry_matches_shape(const IsotypicEntry& e, int n) {
    const Rational alpha(2 * n - 1, 2);
    const int d = e.degree;
    // (0_n) x (alpha, -alpha) at degree 0, (0_n) x (1+alpha, 2n-alpha) at 2n+1
    const Weight zero_w(std::vector<Rational>(n, Rational(0)));
    if (e.spo_weight == zero_w) {
        if (d == 0) return e.partner_weight == Weight({alpha, -alpha});
        if (d == 2 * n + 1)
            return e.partner_weight == Weight({Rational(1) + alpha, Rational(2 * n) - alpha});
        return false;
    }
    // (d'+1, 1_{k-1}, 0_{n-k}) x (d'+1+alpha, k-1-alpha) at degree d'+k, or
    // the same spo weight x (d'+1+alpha, 2n-k-alpha) at degree d'+2n+1-k.
    for (int k = 1; k <= n; ++k) {
        for (int branch = 0; branch < 2; ++branch) {
            const int dp = branch == 0 ? d - k : d - (2 * n + 1 - k);
            if (dp < 0) continue;
            if (e.spo_weight != tau_weight(dp, k, n)) continue;
            const Weight partner =
                branch == 0
                    ? Weight({Rational(dp + 1) + alpha, Rational(k - 1) - alpha})
                    : Weight({Rational(dp + 1) + alpha, Rational(2 * n - k) - alpha});
            if (e.partner_weight == partner) return true;
        }
    }
    return false;
}

CheckLedger suite_hdec(int nmin, int nmax, int dmax) {
    CheckLedger ledger;
    for (int n = nmin; n <= nmax; ++n) {
        bool shape_ok = true, audit_ok = true, mult_ok = true;
        std::string why;
        std::map<std::pair<Weight, int>, int> weight_parity_count;
        for (int d = 0; d <= dmax; ++d) {
            DecompositionReport r;
            try {
                r = decompose_harmonic(n, d);
            } catch (const AuditError& e) {
                audit_ok = false;
                why = std::string(e.what());
                continue;
            }
            for (const IsotypicEntry& e : r.entries)
                if (!entry_matches_shape(e, n)) {
                    shape_ok = false;
                    why = at(n, d) + " weight " + e.spo_weight.str() + " x " +
                          e.partner_weight.str();
                }
            for (std::size_t i = 0; i + 1 < r.entries.size(); ++i)
                for (std::size_t j = i + 1; j < r.entries.size(); ++j)
                    if (r.entries[i].spo_weight == r.entries[j].spo_weight &&
                        r.entries[i].partner_weight == r.entries[j].partner_weight)
                        mult_ok = false;
            for (const IsotypicEntry& e : r.entries)
                ++weight_parity_count[{e.spo_weight, e.parity}];
        }
        bool parity_ok = true;
        std::string parity_why;
        for (const auto& [key, count] : weight_parity_count)
            if (count > 1) {
                parity_ok = false;
                parity_why = "weight " + key.first.str();
            }
        ledger.add("every harmonic entry matches the classified weight shapes, n=" +
                       std::to_string(n),
                   shape_ok, why);
        ledger.add("completeness and direct-sum audits hold, n=" + std::to_string(n), audit_ok,
                   why);
        ledger.add("multiplicity one per joint weight and degree, n=" + std::to_string(n), mult_ok,
                   why);
        ledger.add("multiplicity one per (spo weight, parity) across degrees, n=" +
                       std::to_string(n),
                   parity_ok, parity_why);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// INTRO: frozen n=1 table
// ---------------------------------------------------------------------------

}  // namespace

std::vector<ExpectedEntry> expected_n1_rows(int degree) {
    const Rational half(1, 2);
    std::vector<ExpectedEntry> rows;
    auto w1 = [](long a) { return Weight({Rational(a)}); };
    if (degree == 0) {
        rows.push_back({w1(0), Weight({half, -half}), 1, 1});
        return rows;
    }
    rows.push_back({w1(degree), Weight({Rational(degree) + half, -half}), 2L * degree + 1, 2});
    if (degree >= 2)
        rows.push_back(
            {w1(degree - 1), Weight({Rational(degree) - half, half}), 2L * (degree - 1) + 1, 2});
    if (degree == 3) rows.push_back({w1(0), Weight({Rational(3, 2), Rational(3, 2)}), 1, 2});
    return rows;
}

namespace {

CheckLedger suite_intro(int dmax) {
    CheckLedger ledger;
    bool ok = true;
    std::string why;
    for (int d = 0; d <= dmax && ok; ++d) {
        const DecompositionReport r = decompose_harmonic(1, d);
        const std::vector<ExpectedEntry> expected = expected_n1_rows(d);
        if (r.entries.size() != expected.size()) {
            ok = false;
            why = at(1, d) + " row count";
            break;
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const IsotypicEntry& e = r.entries[i];
            if (e.spo_weight != expected[i].spo_weight ||
                e.partner_weight != expected[i].partner_weight ||
                e.spo_dim != expected[i].spo_dim || e.partner_dim != expected[i].partner_dim) {
                ok = false;
                why = at(1, d) + " row " + std::to_string(i);
            }
        }
    }
    ledger.add("n=1 harmonic table matches the frozen rows for d <= " + std::to_string(dmax), ok,
               why);
    return ledger;
}

// ---------------------------------------------------------------------------
// PSPLIT: parity separation, n=1
// ---------------------------------------------------------------------------

CheckLedger suite_psplit(int dmax) {
    CheckLedger ledger;
    const ParityReport pr = parity_split(1, dmax);
    bool ok = true;
    std::string why;
    // weight (delta) must occur exactly at degrees delta and delta+1 when both
    // are visible; weight (0) at degrees 0 and 3.
    for (const auto& [w, degrees] : pr.degrees_by_weight) {
        const long delta = w.coords[0].to_long();
        std::vector<int> expected;
        if (delta == 0) {
            expected = {0};
            if (dmax >= 3) expected.push_back(3);
        } else {
            expected = {static_cast<int>(delta)};
            if (delta + 1 <= dmax) expected.push_back(static_cast<int>(delta + 1));
        }
        if (degrees != expected) {
            ok = false;
            why = "weight " + w.str();
        }
    }
    for (long delta = 0; delta <= dmax; ++delta)
        if (!pr.degrees_by_weight.count(Weight({Rational(delta)}))) {
            ok = false;
            why = "missing weight (" + std::to_string(delta) + ")";
        }
    ledger.add("each spo weight meets each parity exactly once (n=1, dmax=" +
                   std::to_string(dmax) + ")",
               ok, why);
    return ledger;
}

// ---------------------------------------------------------------------------
// DUALITY: truncated full-space dimension audit
// ---------------------------------------------------------------------------

CheckLedger suite_duality(int n, int dcap) {
    CheckLedger ledger;
    const AlgebraSpec osp = build_osp22(n);
    const std::vector<DiffOp> partner_full = {osp.gen("F_2_1"), osp.gen("R_12"),
                                              osp.gen("R_22")};
    std::vector<long> total(dcap + 1, 0);
    for (int d = 0; d <= dcap; ++d) {
        const DecompositionReport r = decompose_harmonic(n, d);
        for (const IsotypicEntry& e : r.entries) {
            std::map<int, long> by_degree;
            for (const SuperPoly& v : generate_module(e.hwv, partner_full, dcap, n))
                ++by_degree[v.degree()];
            for (const auto& [deg, count] : by_degree) total[deg] += e.spo_dim * count;
        }
    }
    bool ok = true;
    std::string why;
    for (int d = 0; d <= dcap; ++d)
        if (total[d] != dim_of_degree(VarSpace(n), d)) {
            ok = false;
            why = at(n, d) + " got " + std::to_string(total[d]);
        }
    ledger.add("sum dim V_pi * dim_d V_theta(pi) = dim S^d for d <= " + std::to_string(dcap) +
                   ", n=" + std::to_string(n),
               ok, why);
    return ledger;
}

// ---------------------------------------------------------------------------
// PROPS: seeded randomized properties
// ---------------------------------------------------------------------------

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned long long seed) : eng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    Rational coeff() {
        int num = 0;
        while (num == 0) num = uniform(-9, 9);
        return Rational(num, uniform(1, 9));
    }
    SuperMonomial monomial(const VarSpace& vs, int degree) {
        SuperMonomial m(vs.num_vars());
        const int max_odd = std::min(degree, vs.num_vars());
        int odd = uniform(0, max_odd);
        std::vector<int> pool;
        for (int i = 1; i <= vs.num_vars(); ++i) pool.push_back(i);
        std::shuffle(pool.begin(), pool.end(), eng);
        m.odd.assign(pool.begin(), pool.begin() + odd);
        std::sort(m.odd.begin(), m.odd.end());
        for (int rest = degree - odd; rest > 0; --rest)
            ++m.even[uniform(0, vs.num_vars() - 1)];
        return m;
    }
    // Homogeneous polynomial; when parity >= 0, all terms share that
    // superalgebra parity.
    SuperPoly poly(const VarSpace& vs, int degree, int terms, int parity = -1) {
        SuperPoly p;
        int guard = 0;
        while (p.num_terms() < static_cast<std::size_t>(terms) && guard++ < 200) {
            SuperMonomial m = monomial(vs, degree);
            if (parity >= 0 && m.parity() != parity) continue;
            p.add_term(m, coeff());
        }
        return p;
    }
    RatMatrix matrix(std::size_t rows, std::size_t cols) {
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (uniform(0, 2) != 0) m.at(i, j) = Rational(uniform(-6, 6), uniform(1, 4));
        return m;
    }
};

CheckLedger suite_props(unsigned long long seed) {
    CheckLedger ledger;
    Rng rng(seed);

    bool ok = true;
    std::string why;
    for (int i = 0; i < 250 && ok; ++i) {
        const VarSpace vs(rng.uniform(1, 2));
        const int pa = rng.uniform(0, 1), pb = rng.uniform(0, 1);
        const SuperPoly p = rng.poly(vs, rng.uniform(0, 3), rng.uniform(1, 3), pa);
        const SuperPoly q = rng.poly(vs, rng.uniform(0, 3), rng.uniform(1, 3), pb);
        const SuperPoly pq = poly_mul(p, q);
        const SuperPoly qp = poly_mul(q, p);
        if (pq != (pa * pb == 1 ? -qp : qp)) { ok = false; why = "case " + std::to_string(i); }
        const SuperPoly r = rng.poly(vs, rng.uniform(0, 2), 2);
        if (poly_mul(pq, r) != poly_mul(p, poly_mul(q, r))) { ok = false; why = "assoc " + std::to_string(i); }
    }
    ledger.add("supercommutativity and associativity (250 cases)", ok, why);

    ok = true;
    for (int i = 0; i < 250 && ok; ++i) {
        const VarSpace vs(rng.uniform(1, 2));
        const int pa = rng.uniform(0, 1);
        const SuperPoly p = rng.poly(vs, rng.uniform(0, 3), rng.uniform(1, 3), pa);
        const SuperPoly q = rng.poly(vs, rng.uniform(0, 3), rng.uniform(1, 3));
        const int idx = rng.uniform(1, vs.num_vars());
        const DiffOp dx = DiffOp::del_x(idx);
        if (apply(dx, poly_mul(p, q)) !=
            poly_mul(apply(dx, p), q) + poly_mul(p, apply(dx, q))) {
            ok = false; why = "del_x case " + std::to_string(i);
        }
        const DiffOp de = DiffOp::del_eta(idx);
        SuperPoly rhs = poly_mul(apply(de, p), q);
        const SuperPoly cross = poly_mul(p, apply(de, q));
        rhs += pa == 1 ? -cross : cross;
        if (apply(de, poly_mul(p, q)) != rhs) { ok = false; why = "del_eta case " + std::to_string(i); }
    }
    ledger.add("Leibniz rule for del_x and del_eta (250 cases)", ok, why);

    ok = true;
    for (int i = 0; i < 250 && ok; ++i) {
        const int n = rng.uniform(1, 2);
        const VarSpace vs(n);
        const AlgebraSpec osp = build_osp22(n);
        const int d = rng.uniform(0, 4);
        const SuperPoly p = rng.poly(vs, d, rng.uniform(1, 4));
        if (p.is_zero()) continue;
        for (const char* name : {"D_12", "D_22"}) {
            const SuperPoly img = apply(osp.gen(name), p);
            if (!img.is_zero() && img.degree() != d - 2) { ok = false; why = name; }
        }
        for (const char* name : {"R_12", "R_22"}) {
            // R_12 is odd, so it may kill a nonzero element (r^2 = 0); only
            // the grading is asserted.
            const SuperPoly img = apply(osp.gen(name), p);
            if (!img.is_zero() && img.degree() != d + 2) { ok = false; why = name; }
        }
        for (const char* name : {"F_1_1", "F_2_2", "F_1_2", "F_2_1"}) {
            const SuperPoly img = apply(osp.gen(name), p);
            if (!img.is_zero() && img.degree() != d) { ok = false; why = name; }
        }
    }
    ledger.add("degree grading: D lowers by 2, R raises by 2, F preserves (250 cases)", ok, why);

    ok = true;
    for (int i = 0; i < 250 && ok; ++i) {
        const RatMatrix m = rng.matrix(rng.uniform(1, 6), rng.uniform(1, 6));
        const RatMatrix r = rref(m);
        if (rref(r) != r) { ok = false; why = "rref idempotence case " + std::to_string(i); }
        const auto ns = nullspace(m);
        if (rank(m) + ns.size() != m.cols()) { ok = false; why = "rank-nullity case " + std::to_string(i); }
        for (const auto& v : ns)
            for (const Rational& entry : m.apply(v))
                if (!entry.is_zero()) { ok = false; why = "nullspace case " + std::to_string(i); }
    }
    ledger.add("rref idempotent, rank-nullity, m v = 0 on kernel (250 cases)", ok, why);

    ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        const VarSpace vs(rng.uniform(1, 2));
        auto random_op = [&](int words) {
            DiffOp op;
            for (int w = 0; w < words; ++w) {
                OpWord word;
                const int len = rng.uniform(0, 3);
                for (int s = 0; s < len; ++s) {
                    const PrimOp::Kind kinds[] = {PrimOp::Kind::MulX, PrimOp::Kind::MulEta,
                                                  PrimOp::Kind::DelX, PrimOp::Kind::DelEta};
                    word.push_back({kinds[rng.uniform(0, 3)], rng.uniform(1, vs.num_vars())});
                }
                op.add_word(word, rng.coeff());
            }
            return op;
        };
        const DiffOp a = random_op(2), b = random_op(2);
        const SuperPoly p = rng.poly(vs, rng.uniform(0, 3), 2);
        if (apply(compose(a, b), p) != apply(a, apply(b, p))) {
            ok = false; why = "compose/apply case " + std::to_string(i);
        }
    }
    ledger.add("apply(compose(a,b), p) = apply(a, apply(b, p)) (100 cases)", ok, why);

    return ledger;
}

}  // namespace

const std::vector<VerifyTarget>& verify_targets() {
    static const std::vector<VerifyTarget> targets = {
        {"A1", "omega families: zeta_{1,2} formula, joint HWV property, weights", 2, 3},
        {"A2", "Gamma(I) column determinant identity, |I| <= 4", 2, 0},
        {"T62", "harmonicity filter for omega~", 1, 3},
        {"PLP", "one-variable harmonics s_{n,k}", 2, 0},
        {"GLGL", "hook census for the unrestricted gl pair", 2, 4},
        {"TWRB", "odd reflection chain omega -> omega~", 2, 3},
        {"SHIFT", "zeta vs F shift identities", 2, 4},
        {"CLOS", "osp(2|2) closure under supercommutators", 2, 3},
        {"DUAL", "dual pair supercommutation", 2, 4},
        {"KDIR", "direct sum: harmonics + lowered image", 2, 8},
        {"HDEC", "harmonic decomposition shape and audits", 2, 6},
        {"INTRO", "frozen n=1 decomposition table", 1, 8},
        {"PSPLIT", "parity separation of spo weights", 1, 9},
        {"DUALITY", "truncated full-space dimension audit", 1, 6},
        {"PROPS", "seeded randomized property suite", 1, 0},
    };
    return targets;
}

bool is_verify_target(const std::string& id) {
    for (const VerifyTarget& t : verify_targets())
        if (t.id == id) return true;
    return false;
}

CheckLedger run_verify(const std::string& id, const VerifyOptions& opts) {
    const VerifyTarget* target = nullptr;
    for (const VerifyTarget& t : verify_targets())
        if (t.id == id) target = &t;
    if (!target) throw std::invalid_argument("unknown verify target '" + id + "'");
    const int n = opts.n > 0 ? opts.n : target->default_n;
    const int dmax = opts.dmax >= 0 ? opts.dmax : target->default_dmax;

    if (id == "A1") return suite_a1(n, dmax);
    if (id == "A2") return suite_a2(n);
    if (id == "T62") return suite_t62(n, dmax);
    if (id == "PLP") return suite_plp(n);
    if (id == "GLGL") return suite_glgl(n, dmax);
    if (id == "TWRB") return suite_twrb(n, dmax);
    if (id == "SHIFT") return suite_shift(n, dmax);
    if (id == "CLOS") return suite_clos(n, dmax);
    if (id == "DUAL") return suite_dual(n, dmax);
    if (id == "KDIR") return suite_kdir(n, dmax);
    if (id == "HDEC") return suite_hdec(1, n, dmax);
    if (id == "INTRO") {
        if (n != 1) throw std::invalid_argument("INTRO is defined for n = 1");
        return suite_intro(dmax);
    }
    if (id == "PSPLIT") {
        if (n != 1) throw std::invalid_argument("PSPLIT is defined for n = 1");
        return suite_psplit(dmax);
    }
    if (id == "DUALITY") return suite_duality(n, dmax);
    if (id == "PROPS") return suite_props(opts.seed);
    throw std::logic_error("run_verify: unhandled target");
}

}  // namespace superhowe
