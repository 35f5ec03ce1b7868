#include "doctest.h"

#include "hsing/mfengine.hpp"

#include <algorithm>

using namespace hsing;

namespace {

// Stable hom between cyclic modules over k[x]/x^d: R/x^i generated in degree gm
// to R/x^j generated in degree gn, in degree 0.
long cyclic_stable_hom(long d, long i, long gm, long j, long gn) {
    const long m = gm - gn;
    return (m >= std::max(0L, j - i) && m < std::min(j, d - i)) ? 1 : 0;
}

// dim H^{2l + parity}(E_i(a), E_j(b)) by reducing to stable module homs.
long oracle_strand(long d, long i, long a, long j, long b, int parity, long l) {
    if (parity == 0) return cyclic_stable_hom(d, i, -a, j, -b - l * d);
    return cyclic_stable_hom(d, i, -a, d - j, -(b - j + d) - l * d);
}

Factorization std_obj(long d, long i, long a) {
    auto objs = standard_objects(d);
    return twist(objs[i - 1], objs[0].ring.group().element({a}));
}

}  // namespace

TEST_CASE("make_factorization validates") {
    const auto ring = one_variable_potential(3);
    const auto& g = ring.group();
    PolyMatrix a(1, 1), b(1, 1);
    a(0, 0) = Poly::variable_power(0, 1, 1);
    b(0, 0) = Poly::variable_power(0, 2, 1);
    CHECK_NOTHROW(make_factorization(ring, {{g.element({-1})}}, {{g.zero()}}, a, b));
    // wrong product
    PolyMatrix b1(1, 1);
    b1(0, 0) = Poly::variable_power(0, 1, 1);
    CHECK_THROWS_AS(make_factorization(ring, {{g.element({-1})}}, {{g.zero()}}, a, b1), std::invalid_argument);
    // wrong twist makes the entries inhomogeneous of the forced degree
    CHECK_THROWS_AS(make_factorization(ring, {{g.element({-2})}}, {{g.zero()}}, a, b), std::invalid_argument);
    // wrong shape
    CHECK_THROWS_AS(make_factorization(ring, {{g.element({-1})}}, {{g.zero()}}, PolyMatrix(1, 2), b),
                    std::invalid_argument);
    const auto z = zero_factorization(ring);
    CHECK(strand_cohomology(z, std_obj(3, 1, 0)).total() == 0);
    CHECK_THROWS_AS(GradedPotential(make_spec(pointed_integers(3), {{1}}, {3}), Poly::variable_power(0, 2, 1)),
                    std::invalid_argument);
}

TEST_CASE("monomials of degree") {
    const auto r = boxplus(one_variable_potential(3), one_variable_potential(3));
    // Z^2/(3,-3): x has degree e0, y has degree e1.
    CHECK(r.monomials_of_degree(r.group().element({3, 0})).size() == 2);  // x^3, y^3
    CHECK(r.monomials_of_degree(r.group().element({1, 1})).size() == 1);
    CHECK(r.monomials_of_degree(r.group().element({2, 0})).size() == 1);
    CHECK(r.monomials_of_degree(r.group().element({-1, 0})).empty());
    CHECK(r.monomials_of_degree(r.group().zero()).size() == 1);
}

TEST_CASE("one variable strands against the module oracle") {
    for (long d = 2; d <= 6; ++d)
        for (long i = 1; i < d; ++i)
            for (long j = 1; j < d; ++j)
                for (long b = -d; b <= d; ++b) {
                    const auto e = std_obj(d, i, 0), f = std_obj(d, j, b);
                    for (long l = -3; l <= 3; ++l)
                        for (int p = 0; p < 2; ++p)
                            CHECK_MESSAGE(strand_dimension(e, f, p, l) == oracle_strand(d, i, 0, j, b, p, l),
                                          "d=" << d << " i=" << i << " j=" << j << " b=" << b << " p=" << p
                                               << " l=" << l);
                    const auto sc = strand_cohomology(e, f);
                    CHECK(sc.certified);
                    long expect = 0;
                    for (long l = -20; l <= 20; ++l)
                        for (int p = 0; p < 2; ++p) expect += oracle_strand(d, i, 0, j, b, p, l);
                    CHECK(sc.total() == expect);
                }
}

TEST_CASE("endomorphism algebra of the standard objects") {
    const auto r2 = endo_algebra_check(2);
    CHECK(r2.matches);
    CHECK(r2.h0 == std::vector<std::vector<long>>{{1}});
    const auto r3 = endo_algebra_check(3);
    CHECK(r3.matches);
    CHECK(r3.other_cohomology_vanishes);
    CHECK(r3.certified);
    CHECK(r3.h0 == std::vector<std::vector<long>>{{1, 0}, {1, 1}});
    for (long d = 4; d <= 6; ++d) {
        const auto r = endo_algebra_check(d);
        CHECK(r.matches);
        CHECK(r.other_cohomology_vanishes);
        CHECK(r.certified);
        for (std::size_t i = 0; i < r.h0.size(); ++i)
            for (std::size_t j = 0; j < r.h0.size(); ++j) CHECK(r.h0[i][j] == (i >= j ? 1 : 0));
    }
}

TEST_CASE("k(a) is exceptional") {
    for (long d = 2; d <= 8; ++d)
        for (long a : {-5L, 0L, 1L, 7L}) {
            const auto k = k_object(d, a);
            const auto sc = strand_cohomology(k, k);
            CHECK(sc.certified);
            CHECK(sc.at(0, 0) == 1);
            CHECK(sc.total() == 1);
        }
}

TEST_CASE("shift and twist periodicity") {
    const long d = 5;
    const auto ring1 = one_variable_potential(d);
    const auto& g = ring1.group();
    for (long i = 1; i < d; ++i)
        for (long j = 1; j < d; ++j) {
            const auto e = std_obj(d, i, 0), f = std_obj(d, j, 2);
            const auto f1 = translate(f, 1, g.zero());
            const auto f2 = translate(f, 2, g.zero());
            const auto fm = translate(f, -1, g.zero());
            const auto fd = twist(f, g.element({d}));
            for (long l = -2; l <= 2; ++l) {
                CHECK(strand_dimension(e, f1, 0, l) == strand_dimension(e, f, 1, l));
                CHECK(strand_dimension(e, f1, 1, l) == strand_dimension(e, f, 0, l + 1));
                CHECK(strand_dimension(e, fm, 1, l) == strand_dimension(e, f, 0, l));
                for (int p = 0; p < 2; ++p) {
                    CHECK(strand_dimension(e, f2, p, l) == strand_dimension(e, f, p, l + 1));
                    CHECK(strand_dimension(e, fd, p, l) == strand_dimension(e, f, p, l + 1));
                }
            }
        }
}

TEST_CASE("cones") {
    const long d = 4;
    const auto ring1 = one_variable_potential(d);
    const auto& g = ring1.group();
    std::vector<Factorization> battery;
    for (long i = 1; i < d; ++i)
        for (long a = -2; a <= 2; ++a) battery.push_back(std_obj(d, i, a));
    const auto e = std_obj(d, 2, 0);
    const auto c = cone(e, e, identity_morphism(e));
    for (const auto& t : battery) CHECK(strand_cohomology(t, c, 3).total() == 0);

    // zero morphism: cone = E[1] (+) F
    const auto f = std_obj(d, 1, 1);
    const auto cz = cone(e, f, FactorizationMorphism{PolyMatrix(1, 1), PolyMatrix(1, 1)});
    const auto e1 = translate(e, 1, g.zero());
    for (const auto& t : battery)
        for (long l = -2; l <= 2; ++l)
            for (int p = 0; p < 2; ++p)
                CHECK(strand_dimension(t, cz, p, l) == strand_dimension(t, e1, p, l) + strand_dimension(t, f, p, l));

    // x : E_1 -> E_2(1) is injective on cokernels R/x -> R/x^2, so its cone is k(1)
    FactorizationMorphism x{PolyMatrix(1, 1), PolyMatrix(1, 1)};
    x.f_minus1(0, 0) = Poly::constant(1, 1);
    x.f0(0, 0) = Poly::variable_power(0, 1, 1);
    const auto src = std_obj(d, 1, 0), tgt = std_obj(d, 2, 1);
    CHECK(is_closed(src, tgt, x));
    const auto cx = cone(src, tgt, x);
    const auto k1 = k_object(d, 1);
    for (const auto& t : battery)
        for (long l = -2; l <= 2; ++l)
            for (int p = 0; p < 2; ++p) CHECK(strand_dimension(t, cx, p, l) == strand_dimension(t, k1, p, l));

    FactorizationMorphism bad = x;
    bad.f_minus1(0, 0) = Poly::constant(2, 1);
    CHECK_FALSE(is_closed(src, tgt, bad));
    CHECK_THROWS_AS(cone(src, tgt, bad), std::invalid_argument);
}

TEST_CASE("certified range reaches far twists") {
    const long d = 3;
    const auto e = std_obj(d, 1, 0);
    const auto f = std_obj(d, 1, 30);
    const auto sc = strand_cohomology(e, f, 0);
    CHECK(sc.certified);
    CHECK(sc.total() == 1);
    CHECK(sc.at(0, -10) == 1);
}

TEST_CASE("finite length support") {
    const auto r = one_variable_potential(4);
    const auto e = std_obj(4, 3, 0);
    const auto sup = finite_length_support(r, e.e_minus1, e.e0, e.phi0);
    REQUIRE(sup.has_value());
    CHECK(sup->first == 0);
    CHECK(sup->second == 2);
    const auto c = boxplus(one_variable_potential(3), one_variable_potential(3));
    const auto ee = exterior_product(std_obj(3, 1, 0), std_obj(3, 1, 0), c);
    CHECK(finite_length_support(c, ee.e_minus1, ee.e0, ee.phi0).has_value() == false);
}

TEST_CASE("exterior products and orbit restriction") {
    const auto r1 = one_variable_potential(3);
    const auto ring = boxplus(r1, r1);
    CHECK(ring.group().free_rank() == 1);
    CHECK(ring.group().torsion_order() == 3);
    const auto psi = make_orbit_spec(ring.grading(), {{1, -1}});
    CHECK(psi.kernel.size() == 3);
    CHECK(psi.target.group().torsion_order() == 1);
    CHECK_THROWS_AS(make_orbit_spec(ring.grading(), {{1, 0}}), std::invalid_argument);

    std::vector<Factorization> battery;
    for (long i = 1; i <= 2; ++i)
        for (long j = 1; j <= 2; ++j) {
            const auto p = exterior_product(std_obj(3, i, 0), std_obj(3, j, 0), ring);
            for (const auto& gamma : psi.kernel) battery.push_back(twist(p, gamma));
        }
    const auto& ps = battery.front();
    const auto sc = strand_cohomology(ps, ps, 4);
    CHECK_FALSE(sc.certified);
    CHECK(sc.certification() == "windowed(4)");
    CHECK(sc.at(0, 0) >= 1);
    for (std::size_t a = 0; a < battery.size(); a += 4)
        for (std::size_t b = 0; b < battery.size(); b += 3) {
            const auto rep = orbit_hom_check(battery[a], battery[b], psi, 3);
            CHECK(rep.holds);
        }
}
