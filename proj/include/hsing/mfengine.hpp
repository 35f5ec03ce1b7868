#pragma once

// Graded matrix factorizations over positively graded polynomial rings:
// validation, standard objects, shift/twist/cone, strand cohomology of the
// morphism complex, exterior products and restriction of the grading group.
//
// A graded free module is (+)_j S(t_j); its j-th generator sits in degree -t_j,
// so a degree-0 map entry (i, j) has degree t_target_i - t_source_j.
// A factorization is E_{-1} --phi0--> E_0 --phi_minus1--> E_{-1}(d).

#include "hsing/abgroup.hpp"
#include "hsing/polynomial.hpp"
#include "hsing/weightcalc.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hsing {

/// A graded ring spec together with its potential w, homogeneous of degree d.
class GradedPotential {
public:
    GradedPotential() = default;
    /// Throws std::invalid_argument unless w is nonzero and homogeneous of degree d.
    GradedPotential(GradedRingSpec spec, Poly w);

    const GradedRingSpec& spec() const { return spec_; }
    const PointedAbelianGroup& grading() const { return spec_.grading; }
    const FGAbelianGroup& group() const { return spec_.grading.group(); }
    const Poly& potential() const { return w_; }
    std::size_t num_variables() const { return spec_.num_variables(); }
    const GroupElement& d() const { return spec_.potential_degree; }
    Integer degree_of_d() const { return spec_.grading.degree(spec_.potential_degree); }

    GroupElement monomial_degree(const Monomial& m) const;
    bool is_homogeneous(const Poly& p, const GroupElement& deg) const;
    /// All monomials of the given degree (finite since every variable has positive degree).
    std::vector<Monomial> monomials_of_degree(const GroupElement& deg) const;

private:
    GradedRingSpec spec_;
    Poly w_;
    struct Cache {
        std::mutex mutex;
        std::map<CanonicalForm, std::vector<Monomial>> monomials;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// x^d in one variable of degree 1, graded by (Z, d).
GradedPotential one_variable_potential(long d);

struct GradedFreeModule {
    std::vector<GroupElement> twists;
    std::size_t rank() const { return twists.size(); }
};

GradedFreeModule twisted(const GradedFreeModule& m, const FGAbelianGroup& g, const GroupElement& a);

struct Factorization {
    GradedPotential ring;
    GradedFreeModule e_minus1;
    GradedFreeModule e0;
    PolyMatrix phi0;        // E_{-1} -> E_0
    PolyMatrix phi_minus1;  // E_0 -> E_{-1}(d)
};

/// Validates shapes, homogeneity of every entry and both composition identities.
Factorization make_factorization(const GradedPotential& ring, GradedFreeModule e_minus1, GradedFreeModule e0,
                                 PolyMatrix phi0, PolyMatrix phi_minus1);

Factorization zero_factorization(const GradedPotential& ring);

/// E_i = (x^i, x^{d-i}) with E_0 = S and E_{-1} = S(-i), for i = 1..d-1 over one_variable_potential(d).
std::vector<Factorization> standard_objects(long d);
/// The stabilized residue field k(a): E_1 twisted by a (coker phi0 = k).
Factorization k_object(long d, long a);

/// E[shift] twisted by `twist`.
Factorization translate(const Factorization& e, int shift, const GroupElement& twist);
Factorization twist(const Factorization& e, const GroupElement& a);

/// A degree-0 map E -> F given by its two components.
struct FactorizationMorphism {
    PolyMatrix f_minus1;  // E_{-1} -> F_{-1}
    PolyMatrix f0;        // E_0 -> F_0
};

bool is_closed(const Factorization& e, const Factorization& f, const FactorizationMorphism& m);
FactorizationMorphism identity_morphism(const Factorization& e);
/// Throws std::invalid_argument unless m is closed and homogeneous of degree 0.
Factorization cone(const Factorization& e, const Factorization& f, const FactorizationMorphism& m);

struct StrandCohomology {
    /// (parity, l) -> dim H^{2l + parity}(Hom(E, F)).
    std::map<std::pair<int, long>, long> dims;
    bool certified = false;  // if true every strand outside `dims` is proven zero
    long window_lo = 0;
    long window_hi = 0;
    long window = 0;  // the requested L

    long at(int parity, long l) const;
    long total() const;
    std::string certification() const;  // "certified" or "windowed(L)"
};

/// dim H^{2l + parity}(Hom(E, F)).
long strand_dimension(const Factorization& e, const Factorization& f, int parity, long l);

/// Support interval of the generator degrees of coker(phi), if it has finite length.
std::optional<std::pair<Integer, Integer>> finite_length_support(const GradedPotential& ring,
                                                                 const GradedFreeModule& source,
                                                                 const GradedFreeModule& target,
                                                                 const PolyMatrix& phi);

/// Strands for l in [-window, window]; when all cokernels have finite length the
/// window is extended to cover the proven support and the result is certified.
/// window < 0 selects the default window.
StrandCohomology strand_cohomology(const Factorization& e, const Factorization& f, long window = -1);

/// Exterior product over (A1 ⊟ A2, w1 ⊞ w2) with variables of e first.
GradedPotential boxplus(const GradedPotential& r1, const GradedPotential& r2);
Factorization exterior_product(const Factorization& e, const Factorization& f);
Factorization exterior_product(const Factorization& e, const Factorization& f, const GradedPotential& product_ring);

struct EndoAlgebraReport {
    long d = 0;
    std::vector<std::vector<long>> h0;        // h0[i][j] = dim H^0(Hom(E_{i+1}, E_{j+1}))
    std::vector<std::vector<long>> cartan;    // A_{d-1} Cartan matrix
    std::vector<std::size_t> permutation;     // object i <-> Cartan vertex permutation[i]
    bool transposed = false;
    bool matches = false;
    bool other_cohomology_vanishes = false;
    bool certified = false;
    std::vector<std::string> diff;            // human-readable mismatches
};

EndoAlgebraReport endo_algebra_check(long d);

/// psi : A -> A / Gamma for a finite subgroup Gamma generated by torsion elements.
struct OrbitSpec {
    PointedAbelianGroup source;
    PointedAbelianGroup target;
    std::vector<IntVector> gamma_generators;
    std::vector<GroupElement> kernel;  // all elements of Gamma in `source`

    GroupElement apply(const GroupElement& a) const { return target.group().element(a.coordinates); }
};

OrbitSpec make_orbit_spec(const PointedAbelianGroup& a, const std::vector<IntVector>& gamma_generators);

GradedPotential restrict_ring(const GradedPotential& ring, const OrbitSpec& psi);
Factorization restrict_grading(const Factorization& e, const OrbitSpec& psi);
Factorization restrict_grading(const Factorization& e, const OrbitSpec& psi, const GradedPotential& restricted_ring);

struct OrbitStrandRow {
    int parity = 0;
    long l = 0;
    long restricted = 0;  // dim H(Hom(RE, RF))
    long orbit_sum = 0;   // sum over Gamma of dim H(Hom(E, F(gamma)))
};

struct OrbitHomReport {
    std::vector<OrbitStrandRow> rows;
    bool holds = true;
    std::vector<OrbitStrandRow> counterexamples;
};

OrbitHomReport orbit_hom_check(const Factorization& e, const Factorization& f, const OrbitSpec& psi, long window);

}  // namespace hsing
