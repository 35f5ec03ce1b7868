#include "hsing/verify.hpp"

#include "hsing/abgroup.hpp"
#include "hsing/decompose.hpp"
#include "hsing/mfengine.hpp"
#include "hsing/quiverlab.hpp"
#include "hsing/weightcalc.hpp"

#include <functional>
#include <future>
#include <map>
#include <random>
#include <stdexcept>

namespace hsing {

namespace {

struct Check {
    std::string name;
    long cases = 0;
    Json counterexamples = Json::array();

    void expect(bool ok, const std::function<Json()>& detail) {
        ++cases;
        // Cap the payload; the count of failures is still exact via `failures`.
        if (!ok) {
            ++failures;
            if (counterexamples.size() < 20) counterexamples.push_back(detail());
        }
    }
    long failures = 0;

    Json to_json() const {
        return {{"name", name}, {"passed", failures == 0}, {"cases", cases}, {"failures", failures},
                {"counterexamples", counterexamples}};
    }
};

Json finish(const std::string& suite, const std::vector<Check>& checks) {
    Json arr = Json::array();
    bool ok = true;
    for (const auto& c : checks) {
        arr.push_back(c.to_json());
        ok = ok && c.failures == 0;
    }
    return {{"suite", suite}, {"passed", ok}, {"checks", arr}};
}

void for_each_sequence(std::size_t max_len, long max_entry, const std::function<void(const WeightSequence&)>& f) {
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long lo) {
        if (!cur.empty()) f(WeightSequence(cur));
        if (cur.size() == max_len) return;
        for (long x = lo; x <= max_entry; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(1);
}

std::size_t max_len(const Config& cfg) { return static_cast<std::size_t>(std::max(0L, cfg.max_n) + 1); }

Json suite_groups(const Config& cfg) {
    Check torsion{"torsion order equals prod(d)/lcm(d)"};
    Check rank{"weight group has free rank 1"};
    Check snf{"U * M * V = S with divisibility chain"};
    for_each_sequence(max_len(cfg), cfg.max_entry, [&](const WeightSequence& d) {
        const auto b = weight_group(d);
        const auto& g = b.group();
        const Integer expect = d.product() / d.lcm();
        torsion.expect(g.torsion_order() == expect, [&] {
            return Json{{"sequence", sequence_json(d)}, {"snf", integer_json(g.torsion_order())},
                        {"formula", integer_json(expect)}};
        });
        rank.expect(g.free_rank() == 1, [&] { return Json{{"sequence", sequence_json(d)}, {"free_rank", g.free_rank()}}; });
        const auto& s = g.normal_form();
        bool chain = true;
        for (std::size_t i = 1; i < s.diagonal.size(); ++i) chain = chain && s.diagonal[i] % s.diagonal[i - 1] == 0;
        snf.expect(s.U * g.relations() * s.V == s.S && chain, [&] { return Json{{"sequence", sequence_json(d)}}; });
    });
    return finish("groups", {torsion, rank, snf});
}

Json suite_counts(const Config& cfg) {
    Check formula{"exceptional count = prod(d_i - 1) + mu * torsion"};
    Check dynkin{"Dynkin triples: count = sum(d_i - 1) + 2"};
    Check spots{"spot values"};
    for_each_sequence(max_len(cfg), cfg.max_entry, [&](const WeightSequence& d) {
        if (d.mu_bar() < 0) return;
        Integer p = 1;
        for (long x : d.entries()) p *= x - 1;
        const Integer rhs = p + mu_values(d).mu * weight_group(d).group().torsion_order();
        formula.expect(exceptional_count(d) == rhs, [&] {
            return Json{{"sequence", sequence_json(d)}, {"count", integer_json(exceptional_count(d))},
                        {"formula", integer_json(rhs)}};
        });
    });
    for (long p = 1; p <= 12; ++p)
        for (long q = p; q <= 12; ++q)
            for (long r = q; r <= 12; ++r) {
                // 1/p + 1/q + 1/r > 1
                if (q * r + p * r + p * q <= p * q * r) continue;
                const WeightSequence d({p, q, r});
                const Integer expect = (p - 1) + (q - 1) + (r - 1) + 2;
                dynkin.expect(exceptional_count(d) == expect, [&] {
                    return Json{{"sequence", sequence_json(d)}, {"count", integer_json(exceptional_count(d))},
                                {"vertices", integer_json(expect)}};
                });
            }
    spots.expect(exceptional_count(WeightSequence({2, 3, 5})) == 9, [] { return Json{{"sequence", {2, 3, 5}}}; });
    spots.expect(exceptional_count(WeightSequence({3, 3})) == 1, [] { return Json{{"sequence", {3, 3}}}; });
    spots.expect(complement_count(WeightSequence({3, 3})) == 3, [] { return Json{{"sequence", {3, 3}}, {"field", "complement"}}; });
    return finish("counts", {formula, dynkin, spots});
}

Json suite_quiver(const Config&) {
    Check cox{"Coxeter polynomials of tensor products match Dynkin types"};
    const std::vector<std::pair<long, char>> cases = {{2, 'D'}, {3, 'E'}, {4, 'E'}};
    for (const auto& [m, fam] : cases) {
        const ADEType target{fam, fam == 'D' ? 4L : (m == 3 ? 6L : 8L)};
        const IntMatrix t = tensor_cartan(cartan_matrix(ade_quiver({'A', 2})), cartan_matrix(ade_quiver({'A', m})));
        const auto lhs = coxeter_polynomial(t);
        const auto rhs = coxeter_polynomial(cartan_matrix(ade_quiver(target)));
        cox.expect(lhs == rhs, [&] {
            return Json{{"product", "A2xA" + std::to_string(m)}, {"target", target.to_string()},
                        {"product_polynomial", polynomial_to_string(lhs)}, {"target_polynomial", polynomial_to_string(rhs)}};
        });
    }
    Check d4{"A2xA2 Coxeter polynomial is x^4 + x^3 + x + 1"};
    const auto p = polynomial_to_string(coxeter_polynomial(tensor_cartan(cartan_matrix(ade_quiver({'A', 2})),
                                                                         cartan_matrix(ade_quiver({'A', 2})))));
    d4.expect(p == "x^4 + x^3 + x + 1", [&] { return Json{{"got", p}}; });
    return finish("quiver", {cox, d4});
}

Json suite_mf(const Config& cfg) {
    Check endo{"H^0 of standard objects equals the A_{d-1} Cartan matrix, nothing else"};
    Check exc{"k(a) is exceptional"};
    std::vector<std::future<EndoAlgebraReport>> jobs;
    for (long d = 2; d <= cfg.max_d; ++d) jobs.push_back(std::async(std::launch::async, endo_algebra_check, d));
    for (auto& j : jobs) {
        const auto r = j.get();
        endo.expect(r.matches && r.other_cohomology_vanishes && r.certified,
                    [&] { return Json{{"d", r.d}, {"h0", r.h0}, {"diff", r.diff}, {"certified", r.certified}}; });
    }
    for (long d = 2; d <= cfg.max_d; ++d)
        for (long a = -d; a <= d; ++a) {
            const auto k = k_object(d, a);
            const auto s = strand_cohomology(k, k);
            exc.expect(s.certified && s.at(0, 0) == 1 && s.total() == 1, [&] {
                return Json{{"d", d}, {"twist", a}, {"total", s.total()}, {"certification", s.certification()}};
            });
        }
    return finish("mf", {endo, exc});
}

Json suite_orbit(const Config& cfg) {
    Check orbit{"orbit identity for x^3 + y^3 on the standard battery"};
    const Json r = orbit_results(3, cfg);
    for (const auto& pair : r["pairs"]) orbit.expect(pair["holds"].get<bool>(), [&] { return pair; });
    Check nontrivial{"battery has nonzero strands"};
    nontrivial.expect(r["nonzero_strands"].get<long>() > 0, [&] { return Json{{"nonzero_strands", r["nonzero_strands"]}}; });
    Json out = finish("orbit", {orbit, nontrivial});
    out["window"] = cfg.window;
    return out;
}

Json suite_partitions(const Config& cfg) {
    Check h{"branch-and-bound h equals exhaustive enumeration"};
    Check q{"branch-and-bound q equals exhaustive enumeration"};
    for_each_sequence(max_len(cfg), cfg.max_entry, [&](const WeightSequence& d) {
        for (auto pred : {PartPredicate::ade, PartPredicate::nonpositive}) {
            const auto cert = min_partition(d, pred, cfg.node_limit);
            const auto brute = exhaustive_min_parts(d, pred);
            (pred == PartPredicate::ade ? h : q).expect(cert.size == brute, [&] {
                return Json{{"sequence", sequence_json(d)}, {"search", cert.size}, {"exhaustive", brute}};
            });
        }
    });
    return finish("partitions", {h, q});
}

Json suite_ghost(const Config&) {
    Check accept{"A2 certificate yields lower bound 1"};
    Check reject{"corrupted certificates are rejected"};
    const Quiver a2 = ade_quiver({'A', 2});
    const auto s1 = simple_rep(a2, 0), s2 = simple_rep(a2, 1);
    DerivedObject gen;
    gen.summands = {{projective_rep(a2, 0), 0}, {projective_rep(a2, 1), 0}};
    auto ext_map = [&](bool zero) {
        DerivedMorphism f;
        f.source.summands = {{s2, 0}};
        f.target.summands = {{s1, 1}};
        DerivedBlock b;
        b.kind = DerivedBlock::Kind::ext;
        b.ext = ext1(s2, s1).basis.at(0);
        if (zero)
            for (auto& m : b.ext) m = m.scaled(0);
        f.blocks = {{b}};
        return f;
    };
    auto attempt = [](const GhostCertificate& c) -> std::optional<long> {
        try {
            return ghost_lower_bound(c);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    };
    const auto good = attempt({gen, {ext_map(false)}});
    accept.expect(good && *good == 1, [&] { return Json{{"bound", good ? Json(*good) : Json(nullptr)}}; });
    reject.expect(!attempt({gen, {ext_map(true)}}), [] { return Json{{"case", "zero composite"}}; });
    DerivedMorphism id;
    id.source.summands = {{s2, 0}};
    id.target.summands = {{s2, 0}};
    DerivedBlock b;
    b.kind = DerivedBlock::Kind::hom;
    b.hom = {QMatrix(0, 0), QMatrix::identity(1)};
    id.blocks = {{b}};
    reject.expect(!attempt({gen, {id}}), [] { return Json{{"case", "non-ghost map"}}; });
    reject.expect(!attempt({gen, {}}), [] { return Json{{"case", "empty chain"}}; });
    return finish("ghost", {accept, reject});
}

Json suite_knoerrer(const Config&) {
    Check pos{"Knoerrer doubling has positive Gorenstein degree"};
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<long> deg(1, 12), nvar(1, 4), entry(1, 6), coin(0, 1);
    for (int t = 0; t < 200; ++t) {
        GradedRingSpec spec;
        Json desc;
        if (coin(rng) == 0) {
            const long d = deg(rng);
            std::vector<IntVector> gens;
            Json g = Json::array();
            for (long i = 0, n = nvar(rng); i < n; ++i) {
                gens.push_back({deg(rng)});
                g.push_back(to_int64(gens.back()[0]));
            }
            spec = make_spec(pointed_integers(d), gens, {d});
            desc = {{"grading", "Z"}, {"d", d}, {"generator_degrees", g}};
        } else {
            std::vector<long> e;
            for (long i = 0, n = nvar(rng); i < n; ++i) e.push_back(entry(rng));
            const WeightSequence w(e);
            spec = fermat_spec(w);
            desc = {{"grading", "fermat"}, {"sequence", sequence_json(w)}};
        }
        const auto mu = gorenstein_parameter(knoerrer_double(spec)).mu;
        pos.expect(mu > 0, [&] {
            desc["mu"] = integer_json(mu);
            return desc;
        });
    }
    return finish("knoerrer", {pos});
}

using SuiteFn = Json (*)(const Config&);

const std::map<std::string, SuiteFn>& suites() {
    static const std::map<std::string, SuiteFn> m = {
        {"groups", suite_groups},         {"counts", suite_counts}, {"quiver", suite_quiver},
        {"mf", suite_mf},                 {"orbit", suite_orbit},   {"partitions", suite_partitions},
        {"ghost", suite_ghost},           {"knoerrer", suite_knoerrer}};
    return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"groups", "counts", "quiver", "mf", "orbit", "partitions", "ghost", "knoerrer"};
    return names;
}

Json run_suite(const std::string& suite, const Config& cfg) {
    if (suite == "all") {
        std::vector<std::future<Json>> jobs;
        for (const auto& name : suite_names())
            jobs.push_back(std::async(std::launch::async, suites().at(name), std::cref(cfg)));
        Json all = Json::array();
        bool ok = true;
        for (auto& j : jobs) {
            Json r = j.get();
            ok = ok && r["passed"].get<bool>();
            all.push_back(std::move(r));
        }
        return {{"suite", "all"}, {"passed", ok}, {"suites", all}};
    }
    auto it = suites().find(suite);
    if (it == suites().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
    return it->second(cfg);
}

}  // namespace hsing
