#pragma once

// Exact dense and sparse linear algebra over the rationals.

#include "hsing/bigint.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace hsing {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static QMatrix identity(std::size_t n);
    static QMatrix from_ints(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    QMatrix operator-() const;
    QMatrix scaled(const Rational& c) const;
    bool operator==(const QMatrix& rhs) const;

    QMatrix transpose() const;
    bool is_zero() const;

    std::size_t rank() const;
    /// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
    QMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    /// Columns form a basis of {x : A x = 0}.
    QMatrix nullspace() const;
    std::optional<QMatrix> inverse() const;
    Rational determinant() const;
    /// Coefficients of det(x I - A), ascending powers.
    std::vector<Rational> charpoly() const;
    /// Some x with A x = b, if one exists.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    /// Kronecker product, row-major block order.
    QMatrix kron(const QMatrix& rhs) const;

    QMatrix column(std::size_t j) const;
    /// Horizontal concatenation.
    static QMatrix hcat(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

using SparseVector = std::map<std::size_t, Rational>;

/// Incremental row-echelon basis of sparse vectors. Inserting a vector reduces it
/// against the stored pivots; the rank is the number of independent vectors seen.
class SparseEchelon {
public:
    /// Returns true if `v` was independent of the current span.
    bool insert(SparseVector v);
    /// True if `v` lies in the current span.
    bool contains(SparseVector v) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    void reduce(SparseVector& v) const;
    std::map<std::size_t, SparseVector> pivots_;  // pivot index -> row with leading 1
};

/// Rank of the matrix whose columns are `columns`.
std::size_t sparse_rank(const std::vector<SparseVector>& columns);

}  // namespace hsing
