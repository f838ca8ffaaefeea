#include "superhowe/liealg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace superhowe {

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i].str();
    }
    os << ')';
    return os.str();
}

const DiffOp& AlgebraSpec::gen(const std::string& name) const {
    auto it = generators.find(name);
    if (it == generators.end())
        throw std::invalid_argument("AlgebraSpec: unknown generator '" + name + "'");
    return it->second;
}

namespace {

OpWord w2(PrimOp a, PrimOp b) { return {a, b}; }

PrimOp MX(int i) { return {PrimOp::Kind::MulX, i}; }
PrimOp ME(int i) { return {PrimOp::Kind::MulEta, i}; }
PrimOp DX(int i) { return {PrimOp::Kind::DelX, i}; }
PrimOp DE(int i) { return {PrimOp::Kind::DelEta, i}; }

std::string name2(const char* base, int i, int j) {
    std::ostringstream os;
    os << base << '_' << i << '_' << j;
    return os.str();
}

void debug_check_cartan(const AlgebraSpec& spec) {
#ifndef NDEBUG
    if (spec.n <= 2) assert(cartan_supercommutes(spec, 3));
#else
    (void)spec;
#endif
}

}  // namespace

DiffOp make_eps(int i, int j, int n) {
    const int last = 2 * n + 1;
    if (i < 1 || i > last || j < 1 || j > last)
        throw std::invalid_argument("make_eps: index out of range");
    DiffOp op;
    if (i <= 2 * n && j <= 2 * n) {
        op.add_word(w2(MX(i), DX(j)), Rational(1));
        op.add_word(w2(ME(i), DE(j)), Rational(1));
    } else if (i == last && j == last) {
        op.add_word(w2(MX(last), DX(last)), Rational(1));
        op.add_word(w2(ME(last), DE(last)), Rational(1));
    } else if (j == last) {
        op.add_word(w2(ME(i), DX(last)), Rational(1));
        op.add_word(w2(MX(i), DE(last)), Rational(1));
    } else {
        op.add_word(w2(ME(last), DX(j)), Rational(1));
        op.add_word(w2(MX(last), DE(j)), Rational(1));
    }
    return op;
}

DiffOp make_zeta(int k, int l, int n) {
    const int last = 2 * n + 1;
    DiffOp op;
    if (k == 1 && l == 1) {
        for (int t = 1; t <= 2 * n; ++t) op.add_word(w2(MX(t), DX(t)), Rational(1));
        op.add_word(w2(ME(last), DE(last)), Rational(1));
    } else if (k == 2 && l == 2) {
        for (int t = 1; t <= 2 * n; ++t) op.add_word(w2(ME(t), DE(t)), Rational(1));
        op.add_word(w2(MX(last), DX(last)), Rational(1));
    } else if (k == 1 && l == 2) {
        for (int t = 1; t <= 2 * n; ++t) op.add_word(w2(MX(t), DE(t)), Rational(1));
        op.add_word(w2(ME(last), DX(last)), Rational(-1));
    } else if (k == 2 && l == 1) {
        for (int t = 1; t <= 2 * n; ++t) op.add_word(w2(ME(t), DX(t)), Rational(1));
        op.add_word(w2(MX(last), DE(last)), Rational(-1));
    } else {
        throw std::invalid_argument("make_zeta: indices must be in {1,2}");
    }
    return op;
}

AlgebraSpec build_gl_big(int n) {
    if (n < 1) throw std::invalid_argument("build_gl_big: n must be >= 1");
    AlgebraSpec spec;
    spec.label = AlgebraSpec::Label::GlBig;
    spec.n = n;
    const int last = 2 * n + 1;
    for (int i = 1; i <= last; ++i)
        for (int j = 1; j <= last; ++j)
            spec.generators.emplace(name2("eps", i, j), make_eps(i, j, n));
    for (int i = 1; i <= last; ++i) spec.cartan.push_back(spec.gen(name2("eps", i, i)));
    for (int i = 1; i <= last; ++i)
        for (int j = 1; j <= last; ++j) {
            if (i < j) spec.raising.push_back(spec.gen(name2("eps", i, j)));
            if (i > j) spec.lowering.push_back(spec.gen(name2("eps", i, j)));
        }
    // Odd reflection chain b^0..b^n: b^k trades eps_{2n+1-i,2n+1} for
    // eps_{2n+1,2n+1-i}, i = 1..k.
    for (int k = 0; k <= n; ++k) {
        std::vector<DiffOp> raising;
        for (int i = 1; i <= last; ++i)
            for (int j = i + 1; j <= last; ++j) {
                if (j == last && i >= 2 * n + 1 - k && i <= 2 * n) continue;
                raising.push_back(spec.gen(name2("eps", i, j)));
            }
        for (int i = 1; i <= k; ++i)
            raising.push_back(spec.gen(name2("eps", last, 2 * n + 1 - i)));
        spec.borel_chain.push_back(std::move(raising));
    }
    debug_check_cartan(spec);
    return spec;
}

AlgebraSpec with_borel_step(const AlgebraSpec& gl_big, int step) {
    if (gl_big.label != AlgebraSpec::Label::GlBig)
        throw std::invalid_argument("with_borel_step: needs a gl_big spec");
    if (step < 0 || step >= static_cast<int>(gl_big.borel_chain.size()))
        throw std::invalid_argument("with_borel_step: step out of range");
    AlgebraSpec spec = gl_big;
    spec.raising = gl_big.borel_chain[step];
    return spec;
}

AlgebraSpec build_gl_small(int n) {
    if (n < 1) throw std::invalid_argument("build_gl_small: n must be >= 1");
    AlgebraSpec spec;
    spec.label = AlgebraSpec::Label::GlSmall;
    spec.n = n;
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
            spec.generators.emplace(name2("zeta", k, l), make_zeta(k, l, n));
    spec.cartan = {spec.gen("zeta_1_1"), spec.gen("zeta_2_2")};
    spec.raising = {spec.gen("zeta_1_2")};
    spec.lowering = {spec.gen("zeta_2_1")};
    debug_check_cartan(spec);
    return spec;
}

AlgebraSpec build_osp22(int n) {
    if (n < 1) throw std::invalid_argument("build_osp22: n must be >= 1");
    AlgebraSpec spec;
    spec.label = AlgebraSpec::Label::Osp22;
    spec.n = n;
    const int last = 2 * n + 1;
    const Rational alpha(2 * n - 1, 2);

    DiffOp f11;
    for (int i = 1; i <= n; ++i) {
        f11.add_word(w2(MX(i), DX(i)), Rational(1));
        f11.add_word(w2(MX(2 * n + 1 - i), DX(2 * n + 1 - i)), Rational(1));
    }
    f11.add_word(w2(ME(last), DE(last)), Rational(1));
    f11.add_word(OpWord{}, alpha);

    DiffOp f22;
    for (int i = 1; i <= n; ++i) {
        f22.add_word(w2(ME(i), DE(i)), Rational(1));
        f22.add_word(w2(ME(2 * n + 1 - i), DE(2 * n + 1 - i)), Rational(1));
    }
    f22.add_word(w2(MX(last), DX(last)), Rational(1));
    f22.add_word(OpWord{}, -alpha);

    DiffOp f21 = DiffOp::word(w2(MX(last), DE(last)));
    for (int i = 1; i <= n; ++i) {
        f21.add_word(w2(ME(i), DX(i)), Rational(-1));
        f21.add_word(w2(ME(2 * n + 1 - i), DX(2 * n + 1 - i)), Rational(-1));
    }

    DiffOp f12 = DiffOp::word(w2(ME(last), DX(last)));
    for (int i = 1; i <= n; ++i) {
        f12.add_word(w2(MX(i), DE(i)), Rational(-1));
        f12.add_word(w2(MX(2 * n + 1 - i), DE(2 * n + 1 - i)), Rational(-1));
    }

    DiffOp d12 = DiffOp::word(w2(DX(last), DE(last)));
    for (int i = 1; i <= n; ++i) {
        d12.add_word(w2(DX(i), DE(2 * n + 1 - i)), Rational(1));
        d12.add_word(w2(DX(2 * n + 1 - i), DE(i)), Rational(-1));
    }

    DiffOp d22 = DiffOp::word(w2(DX(last), DX(last)));
    for (int i = 1; i <= n; ++i)
        d22.add_word(w2(DE(i), DE(2 * n + 1 - i)), Rational(2));

    DiffOp r12 = DiffOp::word(w2(MX(last), ME(last)));
    for (int i = 1; i <= n; ++i) {
        r12.add_word(w2(ME(i), MX(2 * n + 1 - i)), Rational(1));
        r12.add_word(w2(ME(2 * n + 1 - i), MX(i)), Rational(-1));
    }

    DiffOp r22 = DiffOp::word(w2(MX(last), MX(last)));
    for (int i = 1; i <= n; ++i)
        r22.add_word(w2(ME(i), ME(2 * n + 1 - i)), Rational(2));

    spec.generators = {{"F_1_1", f11}, {"F_2_2", f22}, {"F_1_2", f12}, {"F_2_1", f21},
                       {"D_12", d12}, {"D_22", d22}, {"R_12", r12}, {"R_22", r22}};
    spec.cartan = {f11, f22};
    spec.raising = {f12, d12, d22};
    spec.lowering = {f21, r12, r22};
    debug_check_cartan(spec);
    return spec;
}

AlgebraSpec build_spo(int n) {
    if (n < 1) throw std::invalid_argument("build_spo: n must be >= 1");
    AlgebraSpec spec;
    spec.label = AlgebraSpec::Label::Spo;
    spec.n = n;
    const int last = 2 * n + 1;

    // A block: E_{i,j} - E_{2n+1-j,2n+1-i}, 1 <= i,j <= n.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            DiffOp op = make_eps(i, j, n) - make_eps(2 * n + 1 - j, 2 * n + 1 - i, n);
            const std::string name = i == j ? name2("H", i, i) : name2("A", i, j);
            spec.generators.emplace(name, op);
            if (i == j)
                spec.cartan.push_back(op);
            else if (i < j)
                spec.raising.push_back(op);
            else
                spec.lowering.push_back(op);
        }

    // B block (upper right, raising): pairs {(i,j),(n+1-j,n+1-i)} of unit
    // matrices with B^t = E_n B E_n; fixed points sit on j = n+1-i.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int pi = n + 1 - j, pj = n + 1 - i;
            if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;  // dedupe pair
            DiffOp op = make_eps(i, n + j, n);
            if (std::make_pair(pi, pj) != std::make_pair(i, j))
                op += make_eps(pi, n + pj, n);
            spec.generators.emplace(name2("B", i, j), op);
            spec.raising.push_back(op);
        }

    // C block (lower left, lowering): E_{n+i,j} + E_{2n+1-j,n+1-i}.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int pi = n + 1 - j, pj = n + 1 - i;
            if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
            DiffOp op = make_eps(n + i, j, n);
            if (std::make_pair(pi, pj) != std::make_pair(i, j))
                op += make_eps(n + pi, pj, n);
            spec.generators.emplace(name2("C", i, j), op);
            spec.lowering.push_back(op);
        }

    // Odd part: X_k = E_{k,2n+1} + E_{2n+1,2n+1-k} raises, and
    // Y_k = E_{n+k,2n+1} - E_{2n+1,n+1-k} lowers.
    for (int k = 1; k <= n; ++k) {
        DiffOp xk = make_eps(k, last, n) + make_eps(last, 2 * n + 1 - k, n);
        DiffOp yk = make_eps(n + k, last, n) - make_eps(last, n + 1 - k, n);
        spec.generators.emplace(name2("X", k, 0), xk);
        spec.generators.emplace(name2("Y", k, 0), yk);
        spec.raising.push_back(xk);
        spec.lowering.push_back(yk);
    }

    debug_check_cartan(spec);
    return spec;
}

std::optional<Weight> weight_of(const SuperPoly& v, const std::vector<DiffOp>& cartan) {
    if (v.is_zero()) throw std::invalid_argument("weight_of: zero vector");
    const auto& [lead, lead_coeff] = v.leading();
    Weight w;
    w.coords.reserve(cartan.size());
    for (const DiffOp& h : cartan) {
        const SuperPoly hv = apply(h, v);
        const Rational c = hv.coeff(lead) / lead_coeff;
        if (hv != v.scaled(c)) return std::nullopt;
        w.coords.push_back(c);
    }
    return w;
}

std::optional<Weight> weight_of(const SuperPoly& v, const AlgebraSpec& alg) {
    return weight_of(v, alg.cartan);
}

std::optional<Weight> is_hwv(const SuperPoly& v, const std::vector<DiffOp>& cartan,
                             const std::vector<DiffOp>& raising) {
    if (v.is_zero()) throw std::invalid_argument("is_hwv: zero vector");
    for (const DiffOp& r : raising)
        if (!apply(r, v).is_zero()) return std::nullopt;
    return weight_of(v, cartan);
}

std::optional<Weight> is_hwv(const SuperPoly& v, const AlgebraSpec& alg) {
    return is_hwv(v, alg.cartan, alg.raising);
}

long eps_diag_eigenvalue(const SuperMonomial& m, int i) {
    long e = m.even[i - 1];
    if (std::binary_search(m.odd.begin(), m.odd.end(), i)) ++e;
    return e;
}

long zeta11_eigenvalue(const SuperMonomial& m, int n) {
    long e = 0;
    for (int t = 1; t <= 2 * n; ++t) e += m.even[t - 1];
    if (std::binary_search(m.odd.begin(), m.odd.end(), 2 * n + 1)) ++e;
    return e;
}

long zeta22_eigenvalue(const SuperMonomial& m, int n) {
    long e = m.even[2 * n];
    for (int idx : m.odd)
        if (idx <= 2 * n) ++e;
    return e;
}

std::vector<long> cartan_key(const SuperMonomial& m, const AlgebraSpec& alg) {
    const int n = alg.n;
    std::vector<long> key;
    switch (alg.label) {
        case AlgebraSpec::Label::GlBig:
            for (int i = 1; i <= 2 * n + 1; ++i) key.push_back(eps_diag_eigenvalue(m, i));
            break;
        case AlgebraSpec::Label::GlSmall:
        case AlgebraSpec::Label::Osp22:
            key.push_back(zeta11_eigenvalue(m, n));
            key.push_back(zeta22_eigenvalue(m, n));
            break;
        case AlgebraSpec::Label::Spo:
            for (int i = 1; i <= n; ++i)
                key.push_back(eps_diag_eigenvalue(m, i) -
                              eps_diag_eigenvalue(m, 2 * n + 1 - i));
            break;
    }
    return key;
}

bool cartan_supercommutes(const AlgebraSpec& alg, int dmax) {
    const VarSpace vs(alg.n);
    const DiffOp zero;
    for (std::size_t a = 0; a < alg.cartan.size(); ++a)
        for (std::size_t b = a + 1; b < alg.cartan.size(); ++b)
            if (!op_equal_on_degree(supercommutator(alg.cartan[a], alg.cartan[b]), zero, dmax, vs))
                return false;
    return true;
}

}  // namespace superhowe
