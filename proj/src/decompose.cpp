#include "superhowe/decompose.hpp"

#include <algorithm>

#include "superhowe/parallel.hpp"
#include "superhowe/ratlinalg.hpp"

namespace superhowe {

namespace {

std::vector<long> full_torus_key(const SuperMonomial& m, int n) {
    std::vector<long> key;
    key.reserve(n + 2);
    for (int i = 1; i <= n; ++i)
        key.push_back(eps_diag_eigenvalue(m, i) - eps_diag_eigenvalue(m, 2 * n + 1 - i));
    key.push_back(zeta11_eigenvalue(m, n));
    key.push_back(zeta22_eigenvalue(m, n));
    return key;
}

// Key of a slice-homogeneous polynomial; throws when terms straddle slices.
std::vector<long> full_torus_key(const SuperPoly& p, int n) {
    const std::vector<long> key = full_torus_key(p.leading().first, n);
    for (const auto& [m, c] : p.terms())
        if (full_torus_key(m, n) != key)
            throw std::logic_error("full_torus_key: polynomial is not torus-homogeneous");
    return key;
}

}  // namespace

std::map<std::vector<long>, std::vector<SuperMonomial>> diagonal_slices(int n, int d) {
    std::map<std::vector<long>, std::vector<SuperMonomial>> slices;
    for (SuperMonomial& m : basis_of_degree(VarSpace(n), d))
        slices[full_torus_key(m, n)].push_back(std::move(m));
    return slices;
}

std::vector<SuperPoly> kernel_in_span(const std::vector<SuperPoly>& space,
                                      const std::vector<DiffOp>& ops) {
    if (space.empty()) return {};
    // Stack the coordinate matrices of every op over the union of image
    // monomials; the right kernel gives the coefficient combinations.
    std::vector<std::vector<SuperPoly>> images(space.size());
    for (std::size_t j = 0; j < space.size(); ++j)
        for (const DiffOp& op : ops) images[j].push_back(apply(op, space[j]));

    struct RowLess {
        bool operator()(const std::pair<std::size_t, SuperMonomial>& a,
                        const std::pair<std::size_t, SuperMonomial>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return MonoOrder()(a.second, b.second);
        }
    };
    std::map<std::pair<std::size_t, SuperMonomial>, std::size_t, RowLess> row_index;
    for (std::size_t j = 0; j < space.size(); ++j)
        for (std::size_t o = 0; o < ops.size(); ++o)
            for (const auto& [m, c] : images[j][o].terms())
                row_index.try_emplace({o, m}, row_index.size());

    RatMatrix mat(row_index.size(), space.size());
    for (std::size_t j = 0; j < space.size(); ++j)
        for (std::size_t o = 0; o < ops.size(); ++o)
            for (const auto& [m, c] : images[j][o].terms())
                mat.at(row_index.at({o, m}), j) = c;

    std::vector<SuperPoly> out;
    for (const std::vector<Rational>& vec : nullspace(mat)) {
        SuperPoly p;
        for (std::size_t j = 0; j < space.size(); ++j)
            if (!vec[j].is_zero()) p += space[j].scaled(vec[j]);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

std::vector<SuperPoly> monos_to_polys(const std::vector<SuperMonomial>& ms) {
    std::vector<SuperPoly> out;
    out.reserve(ms.size());
    for (const SuperMonomial& m : ms) out.push_back(SuperPoly::monomial(m));
    return out;
}

std::vector<SuperPoly> sliced_kernel(int n, int d, const std::vector<DiffOp>& ops) {
    const auto slices = diagonal_slices(n, d);
    std::vector<const std::vector<SuperMonomial>*> slot;
    slot.reserve(slices.size());
    for (const auto& [key, monos] : slices) slot.push_back(&monos);

    std::vector<std::vector<SuperPoly>> results(slot.size());
    parallel_for(slot.size(), [&](std::size_t i) {
        results[i] = kernel_in_span(monos_to_polys(*slot[i]), ops);
    });

    std::vector<SuperPoly> out;
    for (auto& r : results)
        for (auto& p : r) out.push_back(std::move(p));
    return out;
}

std::vector<DiffOp> nplus_ops(int n) {
    const AlgebraSpec osp = build_osp22(n);
    return {osp.gen("D_12"), osp.gen("D_22")};
}

}  // namespace

std::vector<SuperPoly> harmonic_basis(int n, int d) {
    if (d < 0) throw std::invalid_argument("harmonic_basis: negative degree");
    if (d <= 1) return monos_to_polys(basis_of_degree(VarSpace(n), d));
    return sliced_kernel(n, d, nplus_ops(n));
}

long harmonic_dim(int n, int d) { return static_cast<long>(harmonic_basis(n, d).size()); }

std::vector<WeightSpaceBasis> weight_slices(int n, int d, const AlgebraSpec& alg_a,
                                            const AlgebraSpec& alg_b) {
    std::map<std::vector<long>, std::vector<SuperMonomial>> slices;
    for (SuperMonomial& m : basis_of_degree(VarSpace(n), d)) {
        std::vector<long> key = cartan_key(m, alg_a);
        for (long v : cartan_key(m, alg_b)) key.push_back(v);
        slices[std::move(key)].push_back(std::move(m));
    }
    std::vector<WeightSpaceBasis> out;
    out.reserve(slices.size());
    for (auto& [key, monos] : slices) {
        WeightSpaceBasis ws;
        ws.degree = d;
        const SuperPoly first = SuperPoly::monomial(monos.front());
        const auto wa = weight_of(first, alg_a.cartan);
        const auto wb = weight_of(first, alg_b.cartan);
        if (!wa || !wb) throw std::logic_error("weight_slices: non-diagonal Cartan operator");
        ws.weight = *wa;
        ws.weight.coords.insert(ws.weight.coords.end(), wb->coords.begin(), wb->coords.end());
        ws.basis = monos_to_polys(monos);
        out.push_back(std::move(ws));
    }
    return out;
}

std::vector<JointHwv> joint_hwv_enumerate(int n, int d, const AlgebraSpec& alg_a,
                                          const AlgebraSpec& alg_b, bool restrict_harmonic) {
    // The combined slicing refines both Cartan families, so each slice is a
    // joint eigenspace and kernel vectors are automatically weight vectors.
    std::vector<DiffOp> kill = alg_a.raising;
    kill.insert(kill.end(), alg_b.raising.begin(), alg_b.raising.end());
    if (restrict_harmonic)
        for (DiffOp& op : nplus_ops(n)) kill.push_back(std::move(op));

    const std::vector<WeightSpaceBasis> slices = weight_slices(n, d, alg_a, alg_b);
    std::vector<std::vector<SuperPoly>> results(slices.size());
    parallel_for(slices.size(), [&](std::size_t i) {
        results[i] = kernel_in_span(slices[i].basis, kill);
    });

    std::vector<JointHwv> out;
    for (auto& r : results)
        for (SuperPoly& p : r) {
            SuperPoly v = p.scaled(p.leading().second.inverse());
            const auto wa = weight_of(v, alg_a);
            const auto wb = weight_of(v, alg_b);
            if (!wa || !wb)
                throw std::logic_error("joint_hwv_enumerate: kernel vector is not a weight vector");
            out.push_back({std::move(v), *wa, *wb});
        }
    std::sort(out.begin(), out.end(), [](const JointHwv& a, const JointHwv& b) {
        if (a.weight_a != b.weight_a) return b.weight_a < a.weight_a;
        return b.weight_b < a.weight_b;
    });
    return out;
}

namespace {

// Per-slice monomial indexing plus an echelon of the vectors seen so far.
class SlicedSpan {
public:
    explicit SlicedSpan(int n) : n_(n) {}

    bool insert(const SuperPoly& p) {
        Slice& s = slice_for(p);
        return s.echelon.insert(to_sparse(p, s));
    }

    long rank() const {
        long r = 0;
        for (const auto& [key, s] : slices_) r += static_cast<long>(s.echelon.rank());
        return r;
    }

private:
    struct Slice {
        std::map<SuperMonomial, std::size_t, MonoOrder> index;
        SparseEchelon echelon;
    };

    Slice& slice_for(const SuperPoly& p) { return slices_[full_torus_key(p, n_)]; }

    static SparseEchelon::SparseVec to_sparse(const SuperPoly& p, Slice& s) {
        SparseEchelon::SparseVec v;
        for (const auto& [m, c] : p.terms()) {
            auto [it, inserted] = s.index.try_emplace(m, s.index.size());
            v.emplace(it->second, c);
        }
        return v;
    }

    int n_;
    std::map<std::vector<long>, Slice> slices_;
};

}  // namespace

std::vector<SuperPoly> generate_module(const SuperPoly& v, const std::vector<DiffOp>& lowering,
                                       int degree_cap, int n) {
    if (v.is_zero()) throw std::invalid_argument("generate_module: zero seed");
    SlicedSpan span(n);
    std::vector<SuperPoly> basis;
    span.insert(v);
    basis.push_back(v);
    for (std::size_t next = 0; next < basis.size(); ++next) {
        // basis grows during iteration; indices stay valid.
        const SuperPoly u = basis[next];
        for (const DiffOp& op : lowering) {
            SuperPoly w = apply(op, u);
            if (w.is_zero() || w.degree() > degree_cap) continue;
            if (span.insert(w)) basis.push_back(std::move(w));
        }
    }
    return basis;
}

long lowered_image_dim(int n, int d) {
    if (d < 2) return 0;
    const AlgebraSpec osp = build_osp22(n);
    const std::vector<DiffOp> nminus = {osp.gen("R_12"), osp.gen("R_22")};
    SlicedSpan span(n);
    for (const SuperMonomial& m : basis_of_degree(VarSpace(n), d - 2)) {
        const SuperPoly p = SuperPoly::monomial(m);
        for (const DiffOp& op : nminus) {
            const SuperPoly w = apply(op, p);
            if (!w.is_zero()) span.insert(w);
        }
    }
    return span.rank();
}

DecompositionReport decompose_harmonic(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("decompose_harmonic: bad parameters");
    const AlgebraSpec spo = build_spo(n);
    const AlgebraSpec osp = build_osp22(n);

    DecompositionReport report;
    report.n = n;
    report.degree = d;
    report.dim_audit.dim_sd = dim_of_degree(VarSpace(n), d);

    const std::vector<SuperPoly> harm = harmonic_basis(n, d);
    report.dim_audit.dim_harmonic = static_cast<long>(harm.size());
    report.dim_audit.dim_lowered = lowered_image_dim(n, d);

    // Direct sum audit: the harmonic subspace and the lowered image must fill
    // S^d with trivial intersection.
    if (report.dim_audit.dim_harmonic + report.dim_audit.dim_lowered != report.dim_audit.dim_sd)
        throw AuditError("dim S^d = dim harmonic + dim lowered image",
                         "n=" + std::to_string(n) + " d=" + std::to_string(d));
    if (d >= 2) {
        SlicedSpan combined(n);
        long rank = 0;
        for (const SuperPoly& h : harm)
            if (combined.insert(h)) ++rank;
        const std::vector<DiffOp> nminus = {osp.gen("R_12"), osp.gen("R_22")};
        for (const SuperMonomial& m : basis_of_degree(VarSpace(n), d - 2)) {
            const SuperPoly p = SuperPoly::monomial(m);
            for (const DiffOp& op : nminus) {
                const SuperPoly w = apply(op, p);
                if (!w.is_zero() && combined.insert(w)) ++rank;
            }
        }
        if (rank != report.dim_audit.dim_sd)
            throw AuditError("harmonic subspace meets lowered image trivially",
                             "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }

    std::vector<JointHwv> hwvs = joint_hwv_enumerate(n, d, spo, osp, true);
    const std::vector<DiffOp> partner_lowering = {osp.gen("F_2_1")};

    std::vector<IsotypicEntry> entries(hwvs.size());
    parallel_for(hwvs.size(), [&](std::size_t i) {
        IsotypicEntry e;
        e.spo_weight = hwvs[i].weight_a;
        e.partner_weight = hwvs[i].weight_b;
        e.degree = d;
        e.parity = d % 2;
        e.hwv = hwvs[i].v;
        e.spo_dim = static_cast<long>(generate_module(e.hwv, spo.lowering, d, n).size());
        e.partner_dim = static_cast<long>(generate_module(e.hwv, partner_lowering, d, n).size());
        entries[i] = std::move(e);
    });
    report.entries = std::move(entries);

    long sum = 0;
    for (const IsotypicEntry& e : report.entries) sum += e.spo_dim * e.partner_dim;
    report.dim_audit.sum_products = sum;
    if (sum != report.dim_audit.dim_harmonic)
        throw AuditError("sum spo_dim * partner_dim = dim harmonic",
                         "n=" + std::to_string(n) + " d=" + std::to_string(d) + " sum=" +
                             std::to_string(sum) + " dim=" +
                             std::to_string(report.dim_audit.dim_harmonic));

    for (std::size_t i = 0; i + 1 < report.entries.size(); ++i)
        for (std::size_t j = i + 1; j < report.entries.size(); ++j)
            if (report.entries[i].spo_weight == report.entries[j].spo_weight &&
                report.entries[i].partner_weight == report.entries[j].partner_weight)
                throw AuditError("multiplicity one per joint weight",
                                 "n=" + std::to_string(n) + " d=" + std::to_string(d));
    return report;
}

ParityReport parity_split(int n, int dmax) {
    const AlgebraSpec spo = build_spo(n);
    const AlgebraSpec osp = build_osp22(n);
    ParityReport report;
    report.n = n;
    report.dmax = dmax;
    for (int d = 0; d <= dmax; ++d)
        for (const JointHwv& h : joint_hwv_enumerate(n, d, spo, osp, true))
            report.degrees_by_weight[h.weight_a].push_back(d);
    for (const auto& [w, degrees] : report.degrees_by_weight) {
        int even = 0, odd = 0;
        for (int d : degrees) (d % 2 == 0 ? even : odd)++;
        if (even > 1 || odd > 1)
            throw AuditError("multiplicity one per (weight, parity)",
                             "weight " + w.str() + " repeats within one parity");
    }
    return report;
}

}  // namespace superhowe
