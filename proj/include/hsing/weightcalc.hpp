#pragma once

// Gorenstein parameters, mu, semi-orthogonal decomposition summaries,
// exceptional-object counts and Knoerrer doubling for graded hypersurfaces.

#include "hsing/abgroup.hpp"
#include "hsing/bigint.hpp"
#include "hsing/weight_sequence.hpp"

#include <string>
#include <vector>

namespace hsing {

enum class SignClass { negative, zero, positive };
std::string to_string(SignClass s);

struct MuValues {
    Rational mu_bar;
    Integer mu;
    SignClass sign = SignClass::zero;
};

MuValues mu_values(const WeightSequence& d);

/// A positively graded polynomial ring with a homogeneous potential.
struct GradedRingSpec {
    PointedAbelianGroup grading;
    std::vector<GroupElement> generator_degrees;  // a_i, one per variable
    GroupElement potential_degree;                // d

    /// Throws std::invalid_argument unless the grading has free rank 1 and
    /// every a_i and d has positive degree.
    void validate() const;
    std::size_t num_variables() const { return generator_degrees.size(); }
};

GradedRingSpec make_spec(PointedAbelianGroup grading, std::vector<IntVector> generator_degrees,
                         IntVector potential_degree);

/// Fermat spec of sum x_i^{d_i}: grading B_d, a_i = e_i, d = marked element.
GradedRingSpec fermat_spec(const WeightSequence& d);

struct GorensteinData {
    GroupElement eta;  // -d + sum a_i
    Integer mu;        // deg(eta)
};

GorensteinData gorenstein_parameter(const GradedRingSpec& spec);

enum class ObjectKind { line_bundle, stabilized_residue };
std::string to_string(ObjectKind k);

struct SODBlock {
    Integer degree;
    ObjectKind kind = ObjectKind::line_bundle;
    Integer count;
};

struct SODSummary {
    SignClass sod_case = SignClass::zero;
    Integer mu;
    Integer torsion;
    std::vector<SODBlock> blocks;
    std::string residual;  // "factorization", "geometry" or "equivalent"
};

SODSummary sod_summary(const GradedRingSpec& spec);

/// prod(d_i - 1) + (prod d_i) * mu_bar. The collection is only known to exist
/// for mu_bar >= 0 (see exceptional_count_applies) but the value is an integer
/// for every sequence and is reported regardless, e.g. (3,3) -> 1.
Integer exceptional_count(const WeightSequence& d);
bool exceptional_count_applies(const WeightSequence& d);

/// |mu| * torsion order of B_d.
Integer complement_count(const WeightSequence& d);

/// Adds two variables of weight 2: grading A ⊟ (Z,2) ⊟ (Z,2), potential w + x^2 + y^2.
GradedRingSpec knoerrer_double(const GradedRingSpec& spec);

}  // namespace hsing
