#pragma once

// Path algebras of acyclic quivers: Cartan and Coxeter data, Loewy lengths,
// representations with exact Hom/Ext^1, a hereditary derived-category model,
// ghost-lemma certificates and splitting of complexes.
//
// Representation convention: an arrow a: i -> j acts by a matrix M_j -> M_i
// (shape dim_i x dim_j). With this convention the projective P_v has dimension
// vector equal to column v of the Cartan matrix, top S_v, and
// Ext^1(S_v, S_w) counts the arrows w -> v.

#include "hsing/abgroup.hpp"
#include "hsing/decompose.hpp"
#include "hsing/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hsing {

struct Quiver {
    std::size_t num_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)

    bool is_acyclic() const;
    /// Throws std::invalid_argument on a directed cycle.
    std::vector<std::size_t> topological_order() const;
    friend bool operator==(const Quiver&, const Quiver&) = default;
};

Quiver ade_quiver(const ADEType& t);

struct QuiverAlgebraModel {
    Quiver quiver;
    IntMatrix cartan;
    long loewy_length = 0;
    std::string label;
};

QuiverAlgebraModel quiver_model(const ADEType& t);

/// Entry (i, j) = number of paths i -> j.
IntMatrix cartan_matrix(const Quiver& q);

/// charpoly(-C^{-T} C), ascending integer coefficients.
std::vector<Integer> coxeter_polynomial(const IntMatrix& cartan);
std::string polynomial_to_string(const std::vector<Integer>& ascending);

IntMatrix tensor_cartan(const IntMatrix& a, const IntMatrix& b);

/// Longest path + 1; 0 for the empty quiver.
long loewy_length(const Quiver& q);
/// sum LL_i - (count - 1)
long loewy_length_tensor(const std::vector<long>& lengths);

/// dim Ext^t(S_v, S_w).
long ext_simples(const Quiver& q, std::size_t v, std::size_t w, int t);

struct Representation {
    Quiver quiver;
    std::vector<std::size_t> dims;
    std::vector<QMatrix> maps;  // one per arrow, shape dims[source] x dims[target]

    /// Throws std::invalid_argument on shape mismatch.
    void validate() const;
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

Representation simple_rep(const Quiver& q, std::size_t v);
Representation projective_rep(const Quiver& q, std::size_t v);
Representation zero_rep(const Quiver& q);
Representation direct_sum(const Representation& a, const Representation& b);

/// A family of vertex maps f_v : M_v -> N_v.
using RepMorphism = std::vector<QMatrix>;

struct HomSpace {
    std::size_t dimension = 0;
    std::vector<RepMorphism> basis;
};

bool is_rep_morphism(const Representation& m, const Representation& n, const RepMorphism& f);
HomSpace rep_hom(const Representation& m, const Representation& n);

/// An Ext^1 cocycle: one matrix per arrow a: i -> j, shape dim N_i x dim M_j.
using ExtCocycle = std::vector<QMatrix>;

struct ExtSpace {
    std::size_t dimension = 0;
    std::vector<ExtCocycle> basis;  // cocycles representing a basis of the cokernel
};

ExtSpace ext1(const Representation& m, const Representation& n);
bool ext_class_is_zero(const Representation& m, const Representation& n, const ExtCocycle& c);

/// Formal direct sum of shifted representations X_k[s_k].
struct DerivedObject {
    std::vector<std::pair<Representation, int>> summands;
};

/// Block of a derived morphism X[a] -> Y[b]: a homomorphism when b = a, an
/// Ext^1 cocycle when b = a + 1, zero otherwise.
struct DerivedBlock {
    enum class Kind { zero, hom, ext } kind = Kind::zero;
    RepMorphism hom;
    ExtCocycle ext;
};

struct DerivedMorphism {
    DerivedObject source;
    DerivedObject target;
    std::vector<std::vector<DerivedBlock>> blocks;  // [target summand][source summand]
};

DerivedMorphism derived_compose(const DerivedMorphism& g, const DerivedMorphism& f);
bool derived_is_zero(const DerivedMorphism& f);
/// True if every map G[i] -> source composes to zero with f, for all shifts i.
bool is_ghost(const DerivedMorphism& f, const DerivedObject& generator);

struct GhostCertificate {
    DerivedObject generator;
    std::vector<DerivedMorphism> chain;  // f_1, ..., f_n
    /// Number of objects X_0, ..., X_n in the chain (0 for an empty chain).
    long length() const { return chain.empty() ? 0 : static_cast<long>(chain.size()) + 1; }
};

/// Validates the certificate and returns length - 1 (the number of ghost maps):
/// X_0 is not in <G>_{n-1}. Throws std::invalid_argument on an empty chain, a
/// non-ghost map, mismatched objects or a zero composite.
long ghost_lower_bound(const GhostCertificate& cert);

/// Bounded complex C^lo -> ... -> C^hi of representations.
struct ComplexOfReps {
    int lowest_degree = 0;
    std::vector<Representation> terms;
    std::vector<RepMorphism> differentials;  // d^i : C^i -> C^{i+1}, terms.size() - 1 of them
};

/// Nonzero cohomology H^i with shift -i, so that C is isomorphic to the sum of H^i[-i].
std::vector<std::pair<Representation, int>> split_complex(const ComplexOfReps& c);

}  // namespace hsing
