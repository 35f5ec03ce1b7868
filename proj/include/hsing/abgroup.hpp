#pragma once

// Finitely generated abelian groups presented as Z^n / (row span of a relation
// matrix), with Smith normal form, canonical element forms, box-minus products
// and normalized degree maps.

#include "hsing/bigint.hpp"
#include "hsing/weight_sequence.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace hsing {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Integer>& entries() const { return data_; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    IntVector row(std::size_t i) const;
    /// Row vector times matrix.
    IntVector left_apply(const IntVector& v) const;
    Integer determinant() const;  // Bareiss, square only
    IntMatrix kron(const IntMatrix& rhs) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row_dst += f * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& f);
    /// col_dst += f * col_src
    void add_col(std::size_t dst, std::size_t src, const Integer& f);
    void negate_row(std::size_t r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Smith normal form with the convention U * M * V = S.
struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    IntMatrix V_inverse;
    std::size_t rank = 0;                 // number of nonzero diagonal entries
    std::vector<Integer> diagonal;        // the `rank` nonzero diagonal entries, d_1 | d_2 | ...
    std::vector<Integer> invariant_factors;  // diagonal entries > 1
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Canonical coordinates of a group element: torsion residues in [0, t_i) and
/// unreduced free coordinates. Two elements are equal iff these agree.
struct CanonicalForm {
    IntVector torsion;
    IntVector free;
    bool is_zero() const;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct GroupElement {
    IntVector coordinates;
    CanonicalForm canonical;
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.canonical == b.canonical; }
};

class FGAbelianGroup {
public:
    FGAbelianGroup() = default;

    std::size_t num_generators() const { return num_generators_; }
    const IntMatrix& relations() const { return relations_; }
    const SmithForm& normal_form() const { return snf_; }
    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& invariant_factors() const { return snf_.invariant_factors; }
    Integer torsion_order() const;

    CanonicalForm canonical(const IntVector& coords) const;
    GroupElement element(IntVector coords) const;
    GroupElement generator(std::size_t i) const;
    GroupElement zero() const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(const GroupElement& a, const Integer& k) const;
    bool is_torsion(const GroupElement& a) const;
    /// Coordinates of a representative of the given canonical form.
    IntVector representative(const CanonicalForm& c) const;
    /// All torsion elements, in a deterministic order.
    std::vector<GroupElement> torsion_elements() const;

    friend FGAbelianGroup group_from_relations(std::size_t n, const IntMatrix& relations);

private:
    std::size_t num_generators_ = 0;
    IntMatrix relations_;
    SmithForm snf_;
    std::size_t free_rank_ = 0;
    std::vector<std::size_t> torsion_columns_;  // SNF columns carrying invariant factors > 1
};

FGAbelianGroup group_from_relations(std::size_t n, const IntMatrix& relations);

/// Coordinate range of one factor inside a box-minus product.
struct Embedding {
    std::size_t offset = 0;
    std::size_t size = 0;
};

/// A finitely generated abelian group with a distinguished non-torsion element
/// `marked` and, when the free rank is 1, the degree map A -> A/A_tors = Z
/// oriented so that deg(marked) > 0.
class PointedAbelianGroup {
public:
    PointedAbelianGroup() = default;
    PointedAbelianGroup(FGAbelianGroup group, IntVector marked, std::vector<Embedding> embeddings = {});

    const FGAbelianGroup& group() const { return group_; }
    const GroupElement& marked() const { return marked_; }
    const std::vector<Embedding>& embeddings() const { return embeddings_; }
    bool has_degree() const { return group_.free_rank() == 1; }
    int orientation() const { return orientation_; }

    /// Throws std::domain_error unless free rank is 1.
    Integer degree(const GroupElement& e) const;
    Integer degree(const IntVector& coords) const;
    /// Image of a component element under the i-th embedding.
    GroupElement embed(std::size_t component, const IntVector& coords) const;
    /// Canonical elements of a given degree (exactly torsion_order() of them).
    std::vector<GroupElement> elements_of_degree(const Integer& k) const;

private:
    FGAbelianGroup group_;
    GroupElement marked_;
    std::vector<Embedding> embeddings_;
    int orientation_ = 1;
};

/// Pointed Z with marked element d.
PointedAbelianGroup pointed_integers(const Integer& d);

/// A (+) B / (marked_A, -marked_B); embeddings record the two factors.
PointedAbelianGroup boxminus(const PointedAbelianGroup& a, const PointedAbelianGroup& b);

Integer torsion_order(const FGAbelianGroup& g);

/// Z^{n+1} / (d_i e_i - d_j e_j), marked element d_0 e_0.
PointedAbelianGroup weight_group(const WeightSequence& d);

}  // namespace hsing
