#include "doctest.h"
#include "hsing/abgroup.hpp"

#include <random>

using namespace hsing;

namespace {

// k-th determinantal divisor: gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
    Integer g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
        do {
            IntMatrix sub(k, k);
            std::size_t a = 0;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (!rsel[i]) continue;
                std::size_t b = 0;
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (csel[j]) sub(a, b++) = m(i, j);
                ++a;
            }
            g = gcd(g, sub.determinant());
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return g;
}

IntMatrix random_matrix(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(1, 5), val(-20, 20), sparse(0, 3);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sparse(rng) == 0 ? 0 : val(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form small cases") {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.invariant_factors.empty());
    CHECK(s.rank == 2);

    s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}, 2));
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 2);
    CHECK(s.invariant_factors[1] == 4);

    auto g = group_from_relations(2, IntMatrix::from_rows({{3, -3}}, 2));
    CHECK(g.free_rank() == 1);
    REQUIRE(g.invariant_factors().size() == 1);
    CHECK(g.invariant_factors()[0] == 3);

    CHECK(smith_normal_form(IntMatrix(0, 3)).rank == 0);
    CHECK(smith_normal_form(IntMatrix(2, 3)).rank == 0);
}

TEST_CASE("smith normal form random property") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        const IntMatrix m = random_matrix(rng);
        const auto s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.S);
        CHECK(abs(s.U.determinant()) == 1);
        CHECK(abs(s.V.determinant()) == 1);
        CHECK(s.V * s.V_inverse == IntMatrix::identity(m.cols()));
        for (std::size_t i = 0; i < s.S.rows(); ++i)
            for (std::size_t j = 0; j < s.S.cols(); ++j)
                if (i != j) CHECK(s.S(i, j) == 0);
        for (std::size_t k = 0; k + 1 < s.rank; ++k) CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
        Integer prod = 1;
        for (std::size_t k = 0; k < s.rank; ++k) {
            prod *= s.diagonal[k];
            CHECK(determinantal_divisor(m, k + 1) == prod);
        }
    }
}

TEST_CASE("group elements and canonical forms") {
    auto g = group_from_relations(2, IntMatrix::from_rows({{3, -3}}, 2));
    CHECK(g.zero().canonical.is_zero());
    CHECK(g.element({3, 0}) == g.element({0, 3}));
    CHECK(!(g.element({1, 0}) == g.element({0, 1})));
    CHECK(g.torsion_elements().size() == 3);
    CHECK_THROWS_AS(g.element({1}), std::invalid_argument);
    CHECK_THROWS_AS(group_from_relations(3, IntMatrix::from_rows({{1, 2}}, 2)), std::invalid_argument);

    // Canonical form is invariant under adding relation combinations.
    std::mt19937 rng(7);
    auto h = group_from_relations(3, IntMatrix::from_rows({{2, 4, 6}, {0, 3, 9}}, 3));
    std::uniform_int_distribution<int> val(-9, 9);
    for (int i = 0; i < 50; ++i) {
        IntVector v{val(rng), val(rng), val(rng)};
        IntVector w = v;
        const int a = val(rng), b = val(rng);
        w[0] += 2 * a;
        w[1] += 4 * a + 3 * b;
        w[2] += 6 * a + 9 * b;
        CHECK(h.element(v) == h.element(w));
        CHECK(h.element(h.representative(h.canonical(v))) == h.element(v));
    }
}

TEST_CASE("weight groups, torsion and degrees") {
    auto b = weight_group(WeightSequence({2, 3, 5}));
    CHECK(b.degree(b.group().generator(0)) == 15);
    CHECK(b.degree(b.group().generator(1)) == 10);
    CHECK(b.degree(b.group().generator(2)) == 6);
    CHECK(b.degree(b.marked()) == 30);
    CHECK(b.group().torsion_order() == 1);

    auto b33 = weight_group(WeightSequence({3, 3}));
    CHECK(b33.group().torsion_order() == 3);
    CHECK(b33.degree(b33.group().generator(0)) == 1);
    CHECK(b33.elements_of_degree(0).size() == 3);
    CHECK(b33.degree(b33.group().zero()) == 0);

    CHECK(torsion_order(weight_group(WeightSequence({4, 4, 4, 4})).group()) == 64);
    auto single = weight_group(WeightSequence({7}));
    CHECK(single.degree(single.marked()) == 7);

    auto z2 = group_from_relations(2, IntMatrix(0, 2));
    PointedAbelianGroup rank2(z2, {1, 0});
    CHECK_THROWS_AS(rank2.degree(z2.generator(0)), std::domain_error);
}

TEST_CASE("boxminus degrees") {
    auto p = boxminus(pointed_integers(3), pointed_integers(2));
    CHECK(p.group().free_rank() == 1);
    CHECK(p.group().torsion_order() == 1);
    CHECK(p.degree(p.embed(0, {1})) == 2);
    CHECK(p.degree(p.embed(1, {1})) == 3);
    CHECK(p.degree(p.marked()) == 6);

    auto q = boxminus(pointed_integers(4), pointed_integers(4));
    CHECK(q.group().torsion_order() == 4);
    CHECK(q.degree(q.embed(0, {1})) == 1);
    CHECK(q.degree(q.embed(1, {1})) == 1);

    auto t = boxminus(boxminus(pointed_integers(2), pointed_integers(2)), pointed_integers(2));
    CHECK(t.group().torsion_order() == 4);
    CHECK(t.marked() == t.group().scale(t.embed(0, {1, 0}), 2));
    CHECK(t.marked() == t.group().scale(t.embed(1, {1}), 2));
}

TEST_CASE("boxminus degree formula and associativity on random inputs") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dd(1, 9), aa(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const long d1 = dd(rng), d2 = dd(rng), d3 = dd(rng);
        auto a = pointed_integers(d1), b = pointed_integers(d2), c = pointed_integers(d3);
        auto ab = boxminus(a, b);
        const long x = aa(rng), y = aa(rng);
        // deg((x, y)) = (d2 * x + d1 * y) / gcd(d1, d2)
        const Integer g = gcd(Integer(d1), Integer(d2));
        IntVector v{x, y};
        CHECK(ab.degree(v) == (Integer(d2) * x + Integer(d1) * y) / g);
        CHECK(ab.degree(v) > 0);

        auto left = boxminus(ab, c);
        auto right = boxminus(a, boxminus(b, c));
        CHECK(left.group().free_rank() == right.group().free_rank());
        CHECK(left.group().invariant_factors() == right.group().invariant_factors());
        CHECK(left.degree(left.marked()) == right.degree(right.marked()));
        CHECK(left.degree(IntVector{1, 0, 0}) == right.degree(IntVector{1, 0, 0}));
        CHECK(left.degree(IntVector{0, 1, 0}) == right.degree(IntVector{0, 1, 0}));
        CHECK(left.degree(IntVector{0, 0, 1}) == right.degree(IntVector{0, 0, 1}));
    }
}
