#include "superhowe/hwv.hpp"

#include <algorithm>
#include <stdexcept>

namespace superhowe {

IndexSet bar_set(const IndexSet& I, int n) {
    IndexSet out;
    out.reserve(I.size());
    for (int i : I) out.push_back(2 * n + 1 - i);
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet range_set(int k) {
    IndexSet out;
    for (int i = 1; i <= k; ++i) out.push_back(i);
    return out;
}

SuperPoly eta_monomial(const VarSpace& vs, const IndexSet& I) {
    SuperMonomial m(vs.num_vars());
    m.odd = I;
    return SuperPoly::monomial(std::move(m));
}

SuperPoly gamma_poly(const VarSpace& vs, const IndexSet& I) {
    SuperPoly out;
    for (std::size_t j = 0; j < I.size(); ++j) {
        IndexSet rest;
        rest.reserve(I.size() - 1);
        for (std::size_t a = 0; a < I.size(); ++a)
            if (a != j) rest.push_back(I[a]);
        SuperPoly term = poly_mul(SuperPoly::x(vs, I[j]), eta_monomial(vs, rest));
        out += (j % 2 == 0) ? term : -term;
    }
    return out;
}

SuperPoly nu_vector(int n, int k) {
    if (k < 0) throw std::invalid_argument("nu_vector: k must be >= 0");
    const VarSpace vs(n);
    if (k <= 2 * n) return eta_monomial(vs, range_set(k));
    return poly_mul(eta_monomial(vs, range_set(2 * n)), SuperPoly::x(vs, 2 * n + 1, k - 2 * n));
}

SuperPoly omega(int d, int k, int n) {
    if (d < 0 || k < 0) throw std::invalid_argument("omega: parameters must be >= 0");
    const VarSpace vs(n);
    const SuperPoly head = SuperPoly::x(vs, 1, d);
    if (k == 0) return head;
    if (k <= 2 * n) return poly_mul(head, gamma_poly(vs, range_set(k)));
    const int l = k - 2 * n;
    SuperPoly body = poly_mul(SuperPoly::x(vs, 2 * n + 1, l), gamma_poly(vs, range_set(2 * n)));
    body -= poly_mul(SuperPoly::x(vs, 2 * n + 1, l - 1), eta_monomial(vs, range_set(2 * n + 1)))
                .scaled(Rational(l));
    return poly_mul(head, body);
}

SuperPoly omega_tilde(int d, int k, int n) {
    if (d < 0 || k < 0) throw std::invalid_argument("omega_tilde: parameters must be >= 0");
    if (k <= n) return omega(d, k, n);
    const VarSpace vs(n);
    const int l = k - n;
    SuperPoly body = poly_mul(SuperPoly::x(vs, 2 * n + 1, l), gamma_poly(vs, range_set(n)));
    SuperPoly tail = poly_mul(SuperPoly::eta(vs, 2 * n + 1), eta_monomial(vs, range_set(n)));
    body -= poly_mul(SuperPoly::x(vs, 2 * n + 1, l - 1), tail).scaled(Rational(l));
    return poly_mul(SuperPoly::x(vs, 1, d), body);
}

namespace {

std::vector<Rational> ones_zeros(int total, const Rational& first, int num_ones) {
    std::vector<Rational> w(total, Rational(0));
    w[0] = first;
    for (int i = 0; i < num_ones; ++i) w[1 + i] = Rational(1);
    return w;
}

}  // namespace

Weight omega_weight_gl_big(int d, int k, int n) {
    if (k == 0) return Weight(ones_zeros(2 * n + 1, Rational(d), 0));
    const int m = std::min(k, 2 * n);
    auto w = ones_zeros(2 * n + 1, Rational(d + 1), m - 1);
    w[2 * n] = Rational(k - m);
    return Weight(w);
}

Weight omega_weight_gl_small(int d, int k, int n) {
    (void)n;
    if (k == 0) return Weight({Rational(d), Rational(0)});
    return Weight({Rational(d + 1), Rational(k - 1)});
}

Weight omega_tilde_weight(int d, int k, int n) {
    if (k == 0) return Weight(ones_zeros(2 * n + 1, Rational(d), 0));
    if (k <= n) return Weight(ones_zeros(2 * n + 1, Rational(d + 1), k - 1));
    auto w = ones_zeros(2 * n + 1, Rational(d + 1), n - 1);
    w[2 * n] = Rational(k - n);
    return Weight(w);
}

Weight tau_weight(int d, int k, int n) {
    if (k == 0) return Weight(ones_zeros(n, Rational(d), 0));
    if (k <= n) return Weight(ones_zeros(n, Rational(d + 1), k - 1));
    return Weight(ones_zeros(n, Rational(d + 1), n - 1));
}

std::pair<SuperPoly, Weight> odd_reflect(const SuperPoly& v, const Weight& lam, int i,
                                         const AlgebraSpec& gl_big) {
    const int n = gl_big.n;
    if (i < 1 || i > n) throw std::invalid_argument("odd_reflect: step out of range");
    const auto checked = is_hwv(v, gl_big.cartan, gl_big.borel_chain[i - 1]);
    if (!checked || *checked != lam)
        throw std::invalid_argument("odd_reflect: input is not a b^{i-1} highest weight vector "
                                    "of the stated weight");
    const Rational test = lam.coords[2 * n - i] + lam.coords[2 * n];
    if (test.is_zero()) return {v, lam};

    const SuperPoly w = apply(gl_big.gen("eps_" + std::to_string(2 * n + 1) + "_" +
                                         std::to_string(2 * n + 1 - i)),
                              v);
    Weight mu = lam;
    mu.coords[2 * n - i] -= Rational(1);
    mu.coords[2 * n] += Rational(1);
    if (w.is_zero())
        throw std::logic_error("odd_reflect: reflected vector vanished");
    const auto post = is_hwv(w, gl_big.cartan, gl_big.borel_chain[i]);
    if (!post || *post != mu)
        throw std::logic_error("odd_reflect: output is not a b^i highest weight vector");
    return {w, mu};
}

std::pair<SuperPoly, Weight> odd_reflection_chain(const SuperPoly& v, const Weight& lam,
                                                  const AlgebraSpec& gl_big) {
    std::pair<SuperPoly, Weight> cur{v, lam};
    for (int i = 1; i <= gl_big.n; ++i)
        cur = odd_reflect(cur.first, cur.second, i, gl_big);
    return cur;
}

namespace {

void subsets_rec(int lo, int hi, int size, std::vector<int>& cur,
                 std::vector<IndexSet>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int i = lo; i <= hi; ++i) {
        cur.push_back(i);
        subsets_rec(i + 1, hi, size, cur, out);
        cur.pop_back();
    }
}

std::vector<IndexSet> subsets_of_range(int lo, int hi, int size) {
    std::vector<IndexSet> out;
    std::vector<int> cur;
    subsets_rec(lo, hi, size, cur, out);
    return out;
}

IndexSet sorted_union(const IndexSet& a, const IndexSet& b, const IndexSet& c) {
    IndexSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

Rational b_coeff(int k, int n, int a) {
    Rational b(1);
    for (int r = 0; r < a; ++r) b *= Rational(2 * (k - n - r) - 1);
    return b;
}

}  // namespace

SuperPoly delta_vector(int n, int k) {
    if (k < n + 1 || k > 2 * n + 1)
        throw std::invalid_argument("delta_vector: k must satisfy n+1 <= k <= 2n+1");
    const VarSpace vs(n);
    const IndexSet head = range_set(2 * n + 1 - k);
    SuperPoly out;
    for (int a = 0; a <= k - n - 1; ++a) {
        SuperPoly inner;
        for (const IndexSet& I : subsets_of_range(2 * n - k + 2, n, a))
            inner += eta_monomial(vs, sorted_union(head, I, bar_set(I, n)));
        out += poly_mul(SuperPoly::x(vs, 2 * n + 1, 2 * (k - n - a) - 1), inner)
                   .scaled(b_coeff(k, n, a));
    }
    return out;
}

SuperPoly s_vector(int n, int k) {
    if (k < 0 || k > 2 * n + 1)
        throw std::invalid_argument("s_vector: k must satisfy 0 <= k <= 2n+1");
    if (k <= n) return eta_monomial(VarSpace(n), range_set(k));
    return delta_vector(n, k);
}

SuperPoly p_vector(int d, int k, int n) {
    if (d < 0) throw std::invalid_argument("p_vector: d must be >= 0");
    if (k < 0 || k > 2 * n + 1)
        throw std::invalid_argument("p_vector: k must satisfy 0 <= k <= 2n+1");
    const VarSpace vs(n);
    const SuperPoly head = SuperPoly::x(vs, 1, d);
    if (k == 0) return head;
    if (k <= n) return poly_mul(head, gamma_poly(vs, range_set(k)));

    const IndexSet lead = range_set(2 * n + 1 - k);
    SuperPoly gamma_part, eta_part;
    for (int a = 0; a <= k - n - 1; ++a) {
        SuperPoly gsum, esum;
        for (const IndexSet& I : subsets_of_range(2 * n - k + 2, n, a)) {
            const IndexSet s = sorted_union(lead, I, bar_set(I, n));
            gsum += gamma_poly(vs, s);
            esum += eta_monomial(vs, s);
        }
        gamma_part += poly_mul(SuperPoly::x(vs, 2 * n + 1, 2 * (k - n - a) - 1), gsum)
                          .scaled(b_coeff(k, n, a));
        eta_part += poly_mul(SuperPoly::x(vs, 2 * n + 1, 2 * (k - n - a) - 2),
                             poly_mul(SuperPoly::eta(vs, 2 * n + 1), esum))
                        .scaled(b_coeff(k, n, a + 1));
    }
    return poly_mul(head, gamma_part - eta_part);
}

Weight harmonic_partner_weight(int d, int k, int n) {
    const Rational alpha(2 * n - 1, 2);
    if (k == 0) return Weight({Rational(d) + alpha, -alpha});
    return Weight({Rational(d + 1) + alpha, Rational(k - 1) - alpha});
}

std::optional<HwvFamilyId::Family> family_from_name(const std::string& name) {
    using F = HwvFamilyId::Family;
    if (name == "omega") return F::Omega;
    if (name == "omega_tilde") return F::OmegaTilde;
    if (name == "nu") return F::Nu;
    if (name == "gamma") return F::Gamma;
    if (name == "s") return F::S;
    if (name == "delta") return F::Delta;
    if (name == "p") return F::P;
    return std::nullopt;
}

SuperPoly build_family(const HwvFamilyId& id, int n) {
    using F = HwvFamilyId::Family;
    const int d = id.d, k = id.k;
    if (n < 1) throw std::invalid_argument("requires n >= 1");
    if (d < 0 || k < 0) throw std::invalid_argument("requires d >= 0 and k >= 0");
    switch (id.family) {
        case F::Omega: return omega(d, k, n);
        case F::OmegaTilde: return omega_tilde(d, k, n);
        case F::Nu: return nu_vector(n, k);
        case F::Gamma:
            if (k < 1 || k > 2 * n)
                throw std::invalid_argument("requires 1 <= k <= 2n = " + std::to_string(2 * n));
            return gamma_poly(VarSpace(n), range_set(k));
        case F::S:
            if (k > 2 * n + 1)
                throw std::invalid_argument("requires 0 <= k <= 2n+1 = " +
                                            std::to_string(2 * n + 1));
            return s_vector(n, k);
        case F::Delta:
            if (k < n + 1 || k > 2 * n + 1)
                throw std::invalid_argument("requires n+1 = " + std::to_string(n + 1) +
                                            " <= k <= 2n+1 = " + std::to_string(2 * n + 1));
            return delta_vector(n, k);
        case F::P:
            if (k > 2 * n + 1)
                throw std::invalid_argument("requires 0 <= k <= 2n+1 = " +
                                            std::to_string(2 * n + 1));
            return p_vector(d, k, n);
    }
    throw std::logic_error("build_family: unhandled family");
}

}  // namespace superhowe
