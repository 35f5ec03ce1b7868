#include "hsing/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hsing {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("QMatrix: entry count mismatch");
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("QMatrix::from_ints: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const { return *this + (-rhs); }

QMatrix QMatrix::operator-() const { return scaled(Rational(-1)); }

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix out = *this;
    for (auto& x : out.data_) x *= c;
    return out;
}

bool QMatrix::operator==(const QMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivots) const {
    QMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t i = row; i < rows_; ++i)
            if (m(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < cols_; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                if (m(row, j) != 0) m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t QMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

QMatrix QMatrix::nullspace() const {
    std::vector<std::size_t> piv;
    const QMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMatrix basis(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], k) = -r(i, f);
    }
    return basis;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    const QMatrix r = aug.rref(&piv);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Rational QMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    QMatrix m = *this;
    const std::size_t n = rows_;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = n;
        for (std::size_t i = col; i < n; ++i)
            if (m(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == n) return 0;
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

std::vector<Rational> QMatrix::charpoly() const {
    // Faddeev-LeVerrier: M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
    const std::size_t n = rows_;
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = (*this) * m + QMatrix::identity(n).scaled(c[n - k + 1]);
        const QMatrix am = (*this) * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs length mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    std::vector<std::size_t> piv;
    const QMatrix r = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, cols_);
    return x;
}

QMatrix QMatrix::kron(const QMatrix& rhs) const {
    QMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& a = (*this)(i, j);
            if (a == 0) continue;
            for (std::size_t k = 0; k < rhs.rows_; ++k)
                for (std::size_t l = 0; l < rhs.cols_; ++l)
                    out(i * rhs.rows_ + k, j * rhs.cols_ + l) = a * rhs(k, l);
        }
    return out;
}

QMatrix QMatrix::column(std::size_t j) const {
    QMatrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
    return out;
}

QMatrix QMatrix::hcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hcat: row mismatch");
    QMatrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
    }
    return out;
}

void SparseEchelon::reduce(SparseVector& v) const {
    // Pivots are eliminated in increasing index order; eliminating pivot p only
    // introduces entries at indices > p, so one forward sweep suffices.
    auto it = v.begin();
    while (it != v.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const Rational f = it->second;
        const std::size_t key = it->first;
        for (const auto& [idx, val] : p->second) {
            Rational& slot = v[idx];
            slot -= f * val;
        }
        // Drop zeros produced by the update, then resume after `key`.
        for (auto z = v.begin(); z != v.end();) {
            if (z->second == 0)
                z = v.erase(z);
            else
                ++z;
        }
        it = v.upper_bound(key);
    }
}

bool SparseEchelon::insert(SparseVector v) {
    for (auto z = v.begin(); z != v.end();) {
        if (z->second == 0)
            z = v.erase(z);
        else
            ++z;
    }
    reduce(v);
    if (v.empty()) return false;
    const std::size_t lead = v.begin()->first;
    const Rational inv = 1 / v.begin()->second;
    for (auto& [idx, val] : v) val *= inv;
    pivots_.emplace(lead, std::move(v));
    return true;
}

bool SparseEchelon::contains(SparseVector v) const {
    for (auto z = v.begin(); z != v.end();) {
        if (z->second == 0)
            z = v.erase(z);
        else
            ++z;
    }
    reduce(v);
    return v.empty();
}

std::size_t sparse_rank(const std::vector<SparseVector>& columns) {
    SparseEchelon ech;
    for (const auto& c : columns) ech.insert(c);
    return ech.rank();
}

}  // namespace hsing
