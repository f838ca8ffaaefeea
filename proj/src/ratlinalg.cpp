#include "superhowe/ratlinalg.hpp"

#include <stdexcept>

namespace superhowe {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) return RatMatrix(0, 0);
    const std::size_t r = cols.front().size();
    for (const auto& c : cols)
        if (c.size() != r) throw std::invalid_argument("from_columns: ragged columns");
    RatMatrix m(r, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    return m;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

namespace {

// Gauss-Jordan elimination in place; returns the pivot columns.
std::vector<std::size_t> eliminate(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        const Rational inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            const Rational f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RatMatrix rref(const RatMatrix& m) {
    RatMatrix a = m;
    eliminate(a);
    return a;
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
    RatMatrix a = m;
    const std::vector<std::size_t> pivots = eliminate(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return eliminate(a).size();
}

std::optional<std::vector<Rational>> in_span(const std::vector<Rational>& v,
                                             const std::vector<std::vector<Rational>>& basis) {
    for (const auto& b : basis)
        if (b.size() != v.size()) throw std::invalid_argument("in_span: length mismatch");
    // Solve B c = v by eliminating the augmented matrix [B | v].
    RatMatrix a(v.size(), basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) a.at(i, j) = basis[j][i];
    for (std::size_t i = 0; i < v.size(); ++i) a.at(i, basis.size()) = v[i];
    const std::vector<std::size_t> pivots = eliminate(a);
    if (!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
    std::vector<Rational> coeff(basis.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        coeff[pivots[r]] = a.at(r, basis.size());
    return coeff;
}

void SparseEchelon::reduce(SparseVec& v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) return;  // leading index is a fresh pivot
        const Rational f = it->second;   // pivot rows are normalized to 1
        for (const auto& [idx, val] : row->second) {
            auto [pos, inserted] = v.try_emplace(idx, Rational(0));
            pos->second -= f * val;
            if (pos->second.is_zero()) v.erase(pos);
        }
        it = v.begin();
    }
}

bool SparseEchelon::insert(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    const Rational inv = v.begin()->second.inverse();
    for (auto& [idx, val] : v) val *= inv;
    const std::size_t pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

bool SparseEchelon::contains(SparseVec v) const {
    reduce(v);
    return v.empty();
}

}  // namespace superhowe
