#include "hsing/weightcalc.hpp"

#include <stdexcept>

namespace hsing {

std::string to_string(SignClass s) {
    switch (s) {
        case SignClass::negative: return "negative";
        case SignClass::zero: return "zero";
        case SignClass::positive: return "positive";
    }
    return "?";
}

std::string to_string(ObjectKind k) {
    return k == ObjectKind::line_bundle ? "line_bundle" : "stabilized_residue";
}

static SignClass sign_of(const Integer& x) {
    if (x > 0) return SignClass::positive;
    if (x < 0) return SignClass::negative;
    return SignClass::zero;
}

MuValues mu_values(const WeightSequence& d) {
    MuValues out;
    out.mu_bar = d.mu_bar();
    const auto mu = as_integer(out.mu_bar * Rational(d.lcm()));
    if (!mu) throw std::logic_error("lcm * mu_bar is not integral for " + d.to_string());
    out.mu = *mu;
    out.sign = sign_of(out.mu);
    if (sgn(out.mu_bar) != sgn(out.mu)) throw std::logic_error("sign of mu and mu_bar disagree");
    return out;
}

void GradedRingSpec::validate() const {
    if (!grading.has_degree())
        throw std::invalid_argument("grading group must have free rank 1, got " +
                                    std::to_string(grading.group().free_rank()));
    for (std::size_t i = 0; i < generator_degrees.size(); ++i)
        if (grading.degree(generator_degrees[i]) <= 0)
            throw std::invalid_argument("variable " + std::to_string(i) + " does not have positive degree");
    if (grading.degree(potential_degree) <= 0) throw std::invalid_argument("potential degree must be positive");
}

GradedRingSpec make_spec(PointedAbelianGroup grading, std::vector<IntVector> generator_degrees,
                         IntVector potential_degree) {
    GradedRingSpec spec;
    for (auto& a : generator_degrees) spec.generator_degrees.push_back(grading.group().element(std::move(a)));
    spec.potential_degree = grading.group().element(std::move(potential_degree));
    spec.grading = std::move(grading);
    spec.validate();
    return spec;
}

GradedRingSpec fermat_spec(const WeightSequence& d) {
    auto grading = weight_group(d);
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < d.size(); ++i) gens.push_back(grading.group().generator(i).coordinates);
    IntVector marked = grading.marked().coordinates;
    return make_spec(std::move(grading), std::move(gens), std::move(marked));
}

GorensteinData gorenstein_parameter(const GradedRingSpec& spec) {
    const auto& g = spec.grading.group();
    GroupElement eta = g.negate(spec.potential_degree);
    for (const auto& a : spec.generator_degrees) eta = g.add(eta, a);
    GorensteinData out;
    out.mu = spec.grading.degree(eta);
    out.eta = std::move(eta);
    return out;
}

SODSummary sod_summary(const GradedRingSpec& spec) {
    const auto gd = gorenstein_parameter(spec);
    SODSummary out;
    out.mu = gd.mu;
    out.torsion = spec.grading.group().torsion_order();
    out.sod_case = sign_of(gd.mu);
    if (gd.mu > 0) {
        // Line bundles O_Z(a) for deg a in [-mu, -1], orthogonal to the factorization category.
        for (Integer k = -gd.mu; k <= -1; ++k) out.blocks.push_back({k, ObjectKind::line_bundle, out.torsion});
        out.residual = "factorization";
    } else if (gd.mu < 0) {
        // Stabilized residue fields k(c) for deg c in [0, -mu-1], orthogonal to coherent sheaves.
        for (Integer k = 0; k <= -gd.mu - 1; ++k)
            out.blocks.push_back({k, ObjectKind::stabilized_residue, out.torsion});
        out.residual = "geometry";
    } else {
        out.residual = "equivalent";
    }
    return out;
}

Integer exceptional_count(const WeightSequence& d) {
    const Rational mb = d.mu_bar();
    Integer p = 1;
    for (long x : d.entries()) p *= (x - 1);
    const auto tail = as_integer(Rational(d.product()) * mb);
    if (!tail) throw std::logic_error("prod(d) * mu_bar not integral");
    return p + *tail;
}

bool exceptional_count_applies(const WeightSequence& d) { return d.mu_bar() >= 0; }

Integer complement_count(const WeightSequence& d) {
    const auto mv = mu_values(d);
    return abs(mv.mu) * weight_group(d).group().torsion_order();
}

GradedRingSpec knoerrer_double(const GradedRingSpec& spec) {
    spec.validate();
    const std::size_t n = spec.grading.group().num_generators();
    // Pointed by the potential degree, so both new squares share its image.
    PointedAbelianGroup base(spec.grading.group(), spec.potential_degree.coordinates, spec.grading.embeddings());
    auto once = boxminus(base, pointed_integers(2));
    auto twice = boxminus(once, pointed_integers(2));

    auto lift = [&](const IntVector& v) {
        IntVector w(n + 2, Integer(0));
        std::copy(v.begin(), v.end(), w.begin());
        return w;
    };
    std::vector<IntVector> gens;
    for (const auto& a : spec.generator_degrees) gens.push_back(lift(a.coordinates));
    IntVector x(n + 2, Integer(0)), y(n + 2, Integer(0));
    x[n] = 1;
    y[n + 1] = 1;
    gens.push_back(x);
    gens.push_back(y);
    IntVector d = twice.marked().coordinates;
    return make_spec(std::move(twice), std::move(gens), std::move(d));
}

}  // namespace hsing
