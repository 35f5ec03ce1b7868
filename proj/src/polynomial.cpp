#include "hsing/polynomial.hpp"

#include <stdexcept>

namespace hsing {

Poly Poly::constant(const Rational& c, std::size_t nvars) { return monomial(Monomial(nvars, 0), c); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

Poly Poly::variable_power(std::size_t var, int power, std::size_t nvars) {
    Monomial m(nvars, 0);
    m.at(var) = power;
    return monomial(m);
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }
Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            if (m1.size() != m2.size()) throw std::invalid_argument("Poly: variable count mismatch");
            Monomial m(m1.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = m1[k] + m2[k];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Poly Poly::embedded(std::size_t offset, std::size_t nvars) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (offset + m.size() > nvars) throw std::invalid_argument("Poly::embedded: out of range");
        Monomial w(nvars, 0);
        for (std::size_t k = 0; k < m.size(); ++k) w[offset + k] = m[k];
        r.add_term(w, c);
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k);
            if (m[k] > 1) mono += "^" + std::to_string(m[k]);
        }
        const Rational mag = abs(c);
        std::string coef = hsing::to_string(mag);
        std::string term = mono.empty() ? coef : (mag == 1 ? mono : coef + "*" + mono);
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) { return scalar(n, Poly::constant(1, nvars)); }

PolyMatrix PolyMatrix::scalar(std::size_t n, const Poly& p) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
    PolyMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Poly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch");
    PolyMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& p : r.data_) p = -p;
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::embedded(std::size_t offset, std::size_t nvars) const {
    PolyMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].embedded(offset, nvars);
    return r;
}

PolyMatrix PolyMatrix::kron(const PolyMatrix& o) const {
    PolyMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r(i * o.rows_ + k, j * o.cols_ + l) = (*this)(i, j) * o(k, l);
        }
    return r;
}

PolyMatrix PolyMatrix::blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
    if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_)
        throw std::invalid_argument("PolyMatrix::blocks: incompatible block shapes");
    PolyMatrix r(a.rows_ + c.rows_, a.cols_ + b.cols_);
    auto put = [&](const PolyMatrix& m, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) r(r0 + i, c0 + j) = m(i, j);
    };
    put(a, 0, 0);
    put(b, 0, a.cols_);
    put(c, a.rows_, 0);
    put(d, a.rows_, a.cols_);
    return r;
}

}  // namespace hsing
