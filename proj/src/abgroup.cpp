#include "hsing/abgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hsing {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("IntMatrix: entry count must equal rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::left_apply(const IntVector& v) const {
    if (v.size() != rows_) throw std::invalid_argument("IntMatrix::left_apply: length mismatch");
    IntVector out(cols_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] += v[i] * (*this)(i, j);
    }
    return out;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t sel = k + 1;
            while (sel < n && m(sel, k) == 0) ++sel;
            if (sel == n) return 0;
            m.swap_rows(k, sel);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMatrix IntMatrix::kron(const IntMatrix& rhs) const {
    IntMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t k = 0; k < rhs.rows_; ++k)
                for (std::size_t l = 0; l < rhs.cols_; ++l)
                    out(i * rhs.rows_ + k, j * rhs.cols_ + l) = (*this)(i, j) * rhs(k, l);
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

// ------------------------------------------------------- Smith normal form

namespace {

struct SnfWork {
    IntMatrix S, U, V, Vi;

    void row_swap(std::size_t a, std::size_t b) {
        S.swap_rows(a, b);
        U.swap_rows(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        S.swap_cols(a, b);
        V.swap_cols(a, b);
        Vi.swap_rows(a, b);
    }
    // row_dst += f * row_src
    void row_add(std::size_t dst, std::size_t src, const Integer& f) {
        S.add_row(dst, src, f);
        U.add_row(dst, src, f);
    }
    // col_dst += f * col_src; V^{-1} picks up the inverse row operation.
    void col_add(std::size_t dst, std::size_t src, const Integer& f) {
        S.add_col(dst, src, f);
        V.add_col(dst, src, f);
        Vi.add_row(src, dst, -f);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    SnfWork w{m, IntMatrix::identity(r), IntMatrix::identity(c), IntMatrix::identity(c)};
    IntMatrix& S = w.S;

    std::size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        // Smallest nonzero |entry| of the trailing block becomes the pivot.
        auto move_smallest_to_pivot = [&]() -> bool {
            bool found = false;
            std::size_t bi = t, bj = t;
            Integer best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (S(i, j) == 0) continue;
                    Integer a = abs(S(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        bi = i;
                        bj = j;
                    }
                }
            if (!found) return false;
            w.row_swap(t, bi);
            w.col_swap(t, bj);
            return true;
        };
        if (!move_smallest_to_pivot()) break;

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (S(i, t) == 0) continue;
                w.row_add(i, t, -floor_div(S(i, t), S(t, t)));
                if (S(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (S(t, j) == 0) continue;
                w.col_add(j, t, -floor_div(S(t, j), S(t, t)));
                if (S(t, j) != 0) dirty = true;
            }
            if (dirty) {
                move_smallest_to_pivot();
                continue;
            }
            // Row and column are clear; enforce divisibility of the trailing block.
            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (S(i, j) != 0 && mod_nonneg(S(i, j), S(t, t)) != 0) {
                        w.row_add(t, i, Integer(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (S(t, t) < 0) {
            S.negate_row(t);
            w.U.negate_row(t);
        }
    }

    SmithForm out;
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) {
        out.diagonal.push_back(S(i, i));
        if (S(i, i) > 1) out.invariant_factors.push_back(S(i, i));
    }
    out.U = std::move(w.U);
    out.S = std::move(w.S);
    out.V = std::move(w.V);
    out.V_inverse = std::move(w.Vi);
    return out;
}

// ---------------------------------------------------------- FGAbelianGroup

bool CanonicalForm::is_zero() const {
    for (const auto& x : torsion)
        if (x != 0) return false;
    for (const auto& x : free)
        if (x != 0) return false;
    return true;
}

FGAbelianGroup group_from_relations(std::size_t n, const IntMatrix& relations) {
    if (relations.rows() > 0 && relations.cols() != n)
        throw std::invalid_argument("relation matrix has " + std::to_string(relations.cols()) +
                                    " columns, expected " + std::to_string(n));
    FGAbelianGroup g;
    g.num_generators_ = n;
    g.relations_ = relations.rows() > 0 ? relations : IntMatrix(0, n);
    g.snf_ = smith_normal_form(g.relations_);
    g.free_rank_ = n - g.snf_.rank;
    for (std::size_t k = 0; k < g.snf_.rank; ++k)
        if (g.snf_.diagonal[k] > 1) g.torsion_columns_.push_back(k);
    return g;
}

Integer FGAbelianGroup::torsion_order() const {
    Integer p = 1;
    for (const auto& t : snf_.invariant_factors) p *= t;
    return p;
}

CanonicalForm FGAbelianGroup::canonical(const IntVector& coords) const {
    if (coords.size() != num_generators_)
        throw std::invalid_argument("element has " + std::to_string(coords.size()) + " coordinates, expected " +
                                    std::to_string(num_generators_));
    const IntVector y = snf_.V.left_apply(coords);
    CanonicalForm c;
    for (std::size_t k : torsion_columns_) c.torsion.push_back(mod_nonneg(y[k], snf_.diagonal[k]));
    for (std::size_t k = snf_.rank; k < num_generators_; ++k) c.free.push_back(y[k]);
    return c;
}

GroupElement FGAbelianGroup::element(IntVector coords) const {
    GroupElement e;
    e.canonical = canonical(coords);
    e.coordinates = std::move(coords);
    return e;
}

GroupElement FGAbelianGroup::generator(std::size_t i) const {
    IntVector v(num_generators_, Integer(0));
    v.at(i) = 1;
    return element(std::move(v));
}

GroupElement FGAbelianGroup::zero() const { return element(IntVector(num_generators_, Integer(0))); }

GroupElement FGAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    IntVector v = a.coordinates;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coordinates.at(i);
    return element(std::move(v));
}

GroupElement FGAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, negate(b)); }

GroupElement FGAbelianGroup::negate(const GroupElement& a) const { return scale(a, Integer(-1)); }

GroupElement FGAbelianGroup::scale(const GroupElement& a, const Integer& k) const {
    IntVector v = a.coordinates;
    for (auto& x : v) x *= k;
    return element(std::move(v));
}

bool FGAbelianGroup::is_torsion(const GroupElement& a) const {
    for (const auto& f : a.canonical.free)
        if (f != 0) return false;
    return true;
}

IntVector FGAbelianGroup::representative(const CanonicalForm& c) const {
    IntVector y(num_generators_, Integer(0));
    for (std::size_t i = 0; i < torsion_columns_.size(); ++i) y[torsion_columns_[i]] = c.torsion.at(i);
    for (std::size_t k = snf_.rank; k < num_generators_; ++k) y[k] = c.free.at(k - snf_.rank);
    return snf_.V_inverse.left_apply(y);
}

std::vector<GroupElement> FGAbelianGroup::torsion_elements() const {
    std::vector<GroupElement> out;
    CanonicalForm c;
    c.torsion.assign(torsion_columns_.size(), Integer(0));
    c.free.assign(free_rank_, Integer(0));
    for (;;) {
        out.push_back(element(representative(c)));
        std::size_t i = 0;
        for (; i < c.torsion.size(); ++i) {
            c.torsion[i] += 1;
            if (c.torsion[i] < snf_.diagonal[torsion_columns_[i]]) break;
            c.torsion[i] = 0;
        }
        if (i == c.torsion.size()) break;
    }
    return out;
}

Integer torsion_order(const FGAbelianGroup& g) { return g.torsion_order(); }

// ----------------------------------------------------- PointedAbelianGroup

PointedAbelianGroup::PointedAbelianGroup(FGAbelianGroup group, IntVector marked, std::vector<Embedding> embeddings)
    : group_(std::move(group)), embeddings_(std::move(embeddings)) {
    marked_ = group_.element(std::move(marked));
    if (group_.is_torsion(marked_)) throw std::invalid_argument("marked element must be non-torsion");
    if (has_degree()) orientation_ = marked_.canonical.free.front() > 0 ? 1 : -1;
}

Integer PointedAbelianGroup::degree(const GroupElement& e) const {
    if (!has_degree())
        throw std::domain_error("degree map requires free rank 1, group has free rank " +
                                std::to_string(group_.free_rank()));
    return orientation_ * e.canonical.free.front();
}

Integer PointedAbelianGroup::degree(const IntVector& coords) const { return degree(group_.element(coords)); }

GroupElement PointedAbelianGroup::embed(std::size_t component, const IntVector& coords) const {
    const Embedding& emb = embeddings_.at(component);
    if (coords.size() != emb.size) throw std::invalid_argument("embed: coordinate length mismatch");
    IntVector v(group_.num_generators(), Integer(0));
    for (std::size_t i = 0; i < emb.size; ++i) v[emb.offset + i] = coords[i];
    return group_.element(std::move(v));
}

std::vector<GroupElement> PointedAbelianGroup::elements_of_degree(const Integer& k) const {
    if (!has_degree()) throw std::domain_error("elements_of_degree requires free rank 1");
    std::vector<GroupElement> out;
    for (const auto& t : group_.torsion_elements()) {
        CanonicalForm c = t.canonical;
        c.free = {orientation_ * k};
        out.push_back(group_.element(group_.representative(c)));
    }
    return out;
}

PointedAbelianGroup pointed_integers(const Integer& d) {
    if (d == 0) throw std::invalid_argument("marked element of Z must be nonzero");
    return PointedAbelianGroup(group_from_relations(1, IntMatrix(0, 1)), IntVector{d}, {Embedding{0, 1}});
}

PointedAbelianGroup boxminus(const PointedAbelianGroup& a, const PointedAbelianGroup& b) {
    const auto& ga = a.group();
    const auto& gb = b.group();
    if (ga.is_torsion(a.marked()) || gb.is_torsion(b.marked()))
        throw std::invalid_argument("boxminus requires non-torsion marked elements");
    const std::size_t na = ga.num_generators();
    const std::size_t nb = gb.num_generators();
    const std::size_t ra = ga.relations().rows();
    const std::size_t rb = gb.relations().rows();
    IntMatrix rel(ra + rb + 1, na + nb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < na; ++j) rel(i, j) = ga.relations()(i, j);
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < nb; ++j) rel(ra + i, na + j) = gb.relations()(i, j);
    for (std::size_t j = 0; j < na; ++j) rel(ra + rb, j) = a.marked().coordinates[j];
    for (std::size_t j = 0; j < nb; ++j) rel(ra + rb, na + j) = -b.marked().coordinates[j];

    IntVector marked(na + nb, Integer(0));
    for (std::size_t j = 0; j < na; ++j) marked[j] = a.marked().coordinates[j];
    return PointedAbelianGroup(group_from_relations(na + nb, rel), std::move(marked),
                               {Embedding{0, na}, Embedding{na, nb}});
}

PointedAbelianGroup weight_group(const WeightSequence& d) {
    if (d.empty()) throw std::invalid_argument("weight_group: empty weight sequence");
    const auto& w = d.entries();
    const std::size_t n = w.size();
    IntMatrix rel(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        rel(i, i) = w[i];
        rel(i, i + 1) = -w[i + 1];
    }
    IntVector marked(n, Integer(0));
    marked[0] = w[0];
    std::vector<Embedding> emb;
    for (std::size_t i = 0; i < n; ++i) emb.push_back(Embedding{i, 1});
    return PointedAbelianGroup(group_from_relations(n, rel), std::move(marked), std::move(emb));
}

}  // namespace hsing
