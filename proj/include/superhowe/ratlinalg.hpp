#pragma once

#include <map>
#include <optional>
#include <vector>

#include "superhowe/rational.hpp"

namespace superhowe {

// Dense exact rational matrix.  Vectors are columns and operators act as
// matrix-on-column; every entry is a Rational in lowest terms.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Reduced row echelon form: pivots are 1, pivot columns have zeros elsewhere.
RatMatrix rref(const RatMatrix& m);

// Basis of the right kernel {v : m v = 0}.  Empty iff the kernel is zero.
// Basis vectors are the canonical RREF ones (free variable set to 1),
// ordered by ascending free column.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Coefficients c with v = sum c_i basis_i, or nullopt when v is outside the
// span.  All vectors must have the same length.
std::optional<std::vector<Rational>> in_span(const std::vector<Rational>& v,
                                             const std::vector<std::vector<Rational>>& basis);

// Incremental row space over sparse vectors, used as the rank/membership
// engine where coordinates live in a large ambient index set.  Rows are kept
// pivot-normalized and forward-reduced; insert() returns true iff the vector
// enlarged the span.
class SparseEchelon {
public:
    using SparseVec = std::map<std::size_t, Rational>;

    bool insert(SparseVec v);
    bool contains(SparseVec v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    void reduce(SparseVec& v) const;
    std::map<std::size_t, SparseVec> rows_;  // pivot index -> row
};

}  // namespace superhowe
