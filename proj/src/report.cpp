#include "hsing/report.hpp"

#include "hsing/abgroup.hpp"
#include "hsing/mfengine.hpp"
#include "hsing/quiverlab.hpp"
#include "hsing/weightcalc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hsing {

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("config is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    Config c;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer()) throw std::invalid_argument("config key '" + key + "' must be an integer");
        if (key == "node_limit") {
            if (value.get<long long>() < 0) throw std::invalid_argument("node_limit must be >= 0");
            c.node_limit = value.get<std::uint64_t>();
        } else if (key == "window")
            c.window = value.get<long>();
        else if (key == "max_n")
            c.max_n = value.get<long>();
        else if (key == "max_entry")
            c.max_entry = value.get<long>();
        else if (key == "max_d")
            c.max_d = value.get<long>();
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
    return c;
}

Json config_json(const Config& c) {
    return {{"node_limit", c.node_limit}, {"window", c.window}, {"max_n", c.max_n},
            {"max_entry", c.max_entry},   {"max_d", c.max_d}};
}

Json integer_json(const Integer& a) {
    if (fits_int64(a)) return to_int64(a);
    return a.get_str();
}

Json rational_json(const Rational& q) { return to_string(q); }

Json sequence_json(const WeightSequence& d) { return d.entries(); }

Json certificate_json(const PartitionCertificate& c) {
    Json parts = Json::array();
    for (const auto& p : c.parts) parts.push_back(sequence_json(p));
    return {{"predicate", to_string(c.predicate)},
            {"parts", parts},
            {"size", c.size},
            {"minimal", c.minimal},
            {"search", {{"nodes", c.stats.nodes},
                        {"memo_states", c.stats.memo_states},
                        {"root_lower_bound", c.stats.root_lower_bound},
                        {"exhausted", c.stats.exhausted}}}};
}

static Json verdict_json(const RouquierVerdict& v) {
    Json j = {{"n_plus_1", v.n_plus_1},
              {"h", v.h},
              {"q", v.q},
              {"lower", v.lower},
              {"upper", v.upper},
              {"exact", v.exact ? Json(*v.exact) : Json(nullptr)},
              {"conjecture_holds", v.conjecture_holds},
              {"h_certificate", certificate_json(v.h_certificate)},
              {"q_certificate", certificate_json(v.q_certificate)}};
    return j;
}

static Json group_json(const FGAbelianGroup& g) {
    Json inv = Json::array();
    for (const auto& t : g.invariant_factors()) inv.push_back(integer_json(t));
    return {{"generators", g.num_generators()},
            {"free_rank", g.free_rank()},
            {"invariant_factors", inv},
            {"torsion_order", integer_json(g.torsion_order())}};
}

static Json sod_json(const SODSummary& s) {
    Json blocks = Json::array();
    for (const auto& b : s.blocks)
        blocks.push_back({{"degree", integer_json(b.degree)}, {"kind", to_string(b.kind)}, {"count", integer_json(b.count)}});
    return {{"case", to_string(s.sod_case)},
            {"mu", integer_json(s.mu)},
            {"torsion", integer_json(s.torsion)},
            {"blocks", blocks},
            {"residual", s.residual}};
}

Json group_results(const WeightSequence& d) {
    const PointedAbelianGroup b = weight_group(d);
    Json degs = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i) degs.push_back(integer_json(b.degree(b.group().generator(i))));
    Json j = group_json(b.group());
    j["generator_degrees"] = degs;
    j["marked_degree"] = integer_json(b.degree(b.marked()));
    j["torsion_formula"] = integer_json(d.product() / d.lcm());
    return j;
}

Json sod_results(const WeightSequence& d) { return sod_json(sod_summary(fermat_spec(d))); }

Json decompose_results(const WeightSequence& d, const Config& cfg) {
    const auto ade = classify_ade(d);
    return {{"ade_type", ade ? Json(ade->to_string()) : Json(nullptr)},
            {"nonpositive", is_nonpositive(d)},
            {"verdict", verdict_json(rouquier_verdict(d, cfg.node_limit))}};
}

Json analyze_results(const WeightSequence& d, const Config& cfg) {
    const MuValues mu = mu_values(d);
    const GradedRingSpec spec = fermat_spec(d);
    const GorensteinData gor = gorenstein_parameter(spec);
    const auto ade = classify_ade(d);
    Json j;
    j["mu_bar"] = rational_json(mu.mu_bar);
    j["mu"] = integer_json(mu.mu);
    j["sign_class"] = to_string(mu.sign);
    j["gorenstein_degree"] = integer_json(gor.mu);
    j["group"] = group_results(d);
    j["torsion"] = integer_json(weight_group(d).group().torsion_order());
    j["exceptional_count"] = integer_json(exceptional_count(d));
    j["exceptional_count_applies"] = exceptional_count_applies(d);
    j["complement_count"] = integer_json(complement_count(d));
    j["ade_type"] = ade ? Json(ade->to_string()) : Json(nullptr);
    j["nonpositive"] = is_nonpositive(d);
    j["sod"] = sod_json(sod_summary(spec));
    j["verdict"] = verdict_json(rouquier_verdict(d, cfg.node_limit));
    j["degenerate"] = d.has_unit_weight();
    if (d.has_unit_weight())
        j["degenerate_note"] = "a weight-1 variable makes the factorization category zero (point geometry)";
    return j;
}

std::vector<ADEType> parse_quiver_spec(const std::string& text) {
    std::vector<ADEType> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, 'x')) {
        if (tok.size() < 2) throw std::invalid_argument("bad quiver type '" + tok + "'");
        ADEType t;
        t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        const std::string num = tok.substr(1);
        if (!std::all_of(num.begin(), num.end(), ::isdigit)) throw std::invalid_argument("bad quiver type '" + tok + "'");
        t.index = std::stol(num);
        if (!t.is_legal() || t.index < 1) throw std::invalid_argument("unsupported quiver type '" + tok + "'");
        out.push_back(t);
    }
    if (out.empty()) throw std::invalid_argument("empty quiver spec");
    return out;
}

static Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(integer_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

Json quiver_results(const std::string& text) {
    const auto types = parse_quiver_spec(text);
    IntMatrix c;
    std::vector<long> loewy;
    Json factors = Json::array();
    for (std::size_t k = 0; k < types.size(); ++k) {
        const Quiver q = ade_quiver(types[k]);
        const IntMatrix ck = cartan_matrix(q);
        c = k == 0 ? ck : tensor_cartan(c, ck);
        loewy.push_back(loewy_length(q));
        Json arrows = Json::array();
        for (const auto& [s, t] : q.arrows) arrows.push_back({s, t});
        factors.push_back({{"type", types[k].to_string()}, {"vertices", q.num_vertices}, {"arrows", arrows},
                           {"loewy_length", loewy.back()}});
    }
    const auto poly = coxeter_polynomial(c);
    Json coeffs = Json::array();
    for (const auto& a : poly) coeffs.push_back(integer_json(a));
    return {{"factors", factors},
            {"vertices", c.rows()},
            {"cartan", matrix_json(c)},
            {"coxeter_polynomial", polynomial_to_string(poly)},
            {"coxeter_coefficients_ascending", coeffs},
            {"loewy_length", loewy_length_tensor(loewy)}};
}

static Json strand_json(const StrandCohomology& s) {
    Json nz = Json::array();
    for (const auto& [key, dim] : s.dims)
        if (dim != 0) nz.push_back({{"parity", key.first}, {"l", key.second}, {"dim", dim}});
    return {{"certification", s.certification()},
            {"window_lo", s.window_lo},
            {"window_hi", s.window_hi},
            {"nonzero", nz},
            {"total", s.total()}};
}

Json mf_results(long d, const Config& cfg) {
    const EndoAlgebraReport r = endo_algebra_check(d);
    Json perm = Json::array();
    for (auto p : r.permutation) perm.push_back(p);
    const auto objs = standard_objects(d);
    Json strands = Json::array();
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j) {
            Json s = strand_json(strand_cohomology(objs[i], objs[j], cfg.window));
            s["source"] = "E_" + std::to_string(i + 1);
            s["target"] = "E_" + std::to_string(j + 1);
            strands.push_back(s);
        }
    const auto k = k_object(d, 0);
    return {{"d", d},
            {"h0", r.h0},
            {"cartan", r.cartan},
            {"permutation", perm},
            {"transposed", r.transposed},
            {"matches", r.matches},
            {"other_cohomology_vanishes", r.other_cohomology_vanishes},
            {"certified", r.certified},
            {"diff", r.diff},
            {"strands", strands},
            {"k_object_self", strand_json(strand_cohomology(k, k, cfg.window))}};
}

Json orbit_results(long d, const Config& cfg) {
    if (d < 2) throw std::invalid_argument("orbit check needs d >= 2");
    const GradedPotential r1 = one_variable_potential(d);
    const GradedPotential ring = boxplus(r1, r1);
    const OrbitSpec psi = make_orbit_spec(ring.grading(), {{Integer(1), Integer(-1)}});
    const auto objs = standard_objects(d);
    struct Item {
        std::string name;
        Factorization f;
    };
    std::vector<Item> battery;
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j) {
            const auto p = exterior_product(objs[i], objs[j], ring);
            for (std::size_t g = 0; g < psi.kernel.size(); ++g)
                battery.push_back({"E_" + std::to_string(i + 1) + "xE_" + std::to_string(j + 1) + "(g" +
                                       std::to_string(g) + ")",
                                   twist(p, psi.kernel[g])});
        }
    const std::size_t n = battery.size();
    std::vector<OrbitHomReport> reports(n * n);
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t k = w; k < n * n; k += workers)
                reports[k] = orbit_hom_check(battery[k / n].f, battery[k % n].f, psi, cfg.window);
        }));
    for (auto& j : jobs) j.get();

    Json pairs = Json::array();
    Json counterexamples = Json::array();
    bool holds = true;
    long nonzero_rows = 0;
    for (std::size_t k = 0; k < n * n; ++k) {
        long lhs = 0, rhs = 0;
        for (const auto& row : reports[k].rows) {
            lhs += row.restricted;
            rhs += row.orbit_sum;
            if (row.restricted != 0) ++nonzero_rows;
        }
        pairs.push_back({{"source", battery[k / n].name}, {"target", battery[k % n].name},
                         {"restricted_total", lhs}, {"orbit_total", rhs}, {"holds", reports[k].holds}});
        holds = holds && reports[k].holds;
        for (const auto& row : reports[k].counterexamples)
            counterexamples.push_back({{"source", battery[k / n].name}, {"target", battery[k % n].name},
                                       {"parity", row.parity}, {"l", row.l}, {"restricted", row.restricted},
                                       {"orbit_sum", row.orbit_sum}});
    }
    Json kernel = Json::array();
    for (const auto& g : psi.kernel) {
        Json c = Json::array();
        for (const auto& x : g.coordinates) c.push_back(integer_json(x));
        kernel.push_back(c);
    }
    return {{"d", d},
            {"window", cfg.window},
            {"gamma_order", psi.kernel.size()},
            {"gamma", kernel},
            {"battery_size", n},
            {"pairs", pairs},
            {"nonzero_strands", nonzero_rows},
            {"holds", holds},
            {"counterexamples", counterexamples}};
}

Json make_report(const std::string& command, Json input, Json results, Json provenance) {
    provenance["version"] = kVersion;
    provenance["arithmetic"] = "GMP exact integers and rationals";
    return {{"schema_version", kSchemaVersion},
            {"command", command},
            {"input", std::move(input)},
            {"results", std::move(results)},
            {"provenance", std::move(provenance)}};
}

static bool is_scalar_array(const Json& j) {
    return std::all_of(j.begin(), j.end(), [](const Json& x) {
        return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); }));
    });
}

static void render(const Json& j, int indent, std::ostringstream& out) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        out << pad << key << ":";
        if (value.is_object()) {
            out << "\n";
            render(value, indent + 2, out);
        } else if (value.is_array() && !is_scalar_array(value)) {
            out << "\n";
            for (const auto& item : value) {
                if (item.is_object()) {
                    out << pad << "  -\n";
                    render(item, indent + 4, out);
                } else {
                    out << pad << "  - " << item.dump() << "\n";
                }
            }
        } else if (value.is_string()) {
            out << " " << value.get<std::string>() << "\n";
        } else {
            out << " " << value.dump() << "\n";
        }
    }
}

std::string render_text(const Json& report) {
    std::ostringstream out;
    render(report, 0, out);
    return out.str();
}

}  // namespace hsing
