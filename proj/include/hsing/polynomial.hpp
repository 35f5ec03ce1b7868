#pragma once

// Sparse multivariate polynomials over Q and matrices of them.

#include "hsing/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace hsing {

using Monomial = std::vector<int>;  // exponent vector

class Poly {
public:
    Poly() = default;
    static Poly constant(const Rational& c, std::size_t nvars);
    static Poly monomial(const Monomial& m, const Rational& c = 1);
    /// x_var^power in nvars variables.
    static Poly variable_power(std::size_t var, int power, std::size_t nvars);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly& operator+=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// Exponent vectors widened to `nvars` variables, placed at `offset`.
    Poly embedded(std::size_t offset, std::size_t nvars) const;
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static PolyMatrix identity(std::size_t n, std::size_t nvars);
    static PolyMatrix scalar(std::size_t n, const Poly& p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    bool operator==(const PolyMatrix& o) const;
    bool is_zero() const;

    PolyMatrix embedded(std::size_t offset, std::size_t nvars) const;
    /// Kronecker product; row index (i, k) -> i * o.rows() + k.
    PolyMatrix kron(const PolyMatrix& o) const;
    /// [[a, b], [c, d]]
    static PolyMatrix blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> data_;
};

}  // namespace hsing
