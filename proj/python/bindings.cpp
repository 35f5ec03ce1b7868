// Python module: thin wrappers returning JSON text, decoded by hsing/__init__.py.

#include "hsing/abgroup.hpp"
#include "hsing/decompose.hpp"
#include "hsing/quiverlab.hpp"
#include "hsing/report.hpp"
#include "hsing/verify.hpp"
#include "hsing/weightcalc.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hsing;

namespace {

Config make_config(std::uint64_t node_limit, long window, long max_n, long max_entry, long max_d) {
    Config c;
    c.node_limit = node_limit;
    c.window = window;
    c.max_n = max_n;
    c.max_entry = max_entry;
    c.max_d = max_d;
    return c;
}

IntMatrix to_matrix(const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    return IntMatrix::from_rows(rows, cols);
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(integer_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_hsing, m) {
    m.doc() = "Graded hypersurface singularity calculator (native core)";
    m.attr("__version__") = kVersion;

    m.def("analyze", [](const std::vector<long>& w, std::uint64_t node_limit) {
        Config c;
        c.node_limit = node_limit;
        return analyze_results(WeightSequence(w), c).dump();
    }, py::arg("weights"), py::arg("node_limit") = 0);
    m.def("group", [](const std::vector<long>& w) { return group_results(WeightSequence(w)).dump(); });
    m.def("decompose", [](const std::vector<long>& w, std::uint64_t node_limit) {
        Config c;
        c.node_limit = node_limit;
        return decompose_results(WeightSequence(w), c).dump();
    }, py::arg("weights"), py::arg("node_limit") = 0);
    m.def("sod", [](const std::vector<long>& w) { return sod_results(WeightSequence(w)).dump(); });
    m.def("quiver", [](const std::string& spec) { return quiver_results(spec).dump(); });
    m.def("mf", [](long d, long window) {
        Config c;
        c.window = window;
        return mf_results(d, c).dump();
    }, py::arg("d"), py::arg("window") = 6);
    m.def("orbit", [](long d, long window) {
        Config c;
        c.window = window;
        py::gil_scoped_release release;
        return orbit_results(d, c).dump();
    }, py::arg("d") = 3, py::arg("window") = 6);
    m.def("verify", [](const std::string& suite, std::uint64_t node_limit, long window, long max_n, long max_entry,
                       long max_d) {
        const Config c = make_config(node_limit, window, max_n, max_entry, max_d);
        py::gil_scoped_release release;
        return run_suite(suite, c).dump();
    }, py::arg("suite"), py::arg("node_limit") = 0, py::arg("window") = 6, py::arg("max_n") = 3,
          py::arg("max_entry") = 6, py::arg("max_d") = 8);
    m.def("smith_normal_form", [](const std::vector<std::vector<long>>& rows) {
        const SmithForm s = smith_normal_form(to_matrix(rows));
        Json diag = Json::array();
        for (const auto& x : s.diagonal) diag.push_back(integer_json(x));
        return Json{{"U", matrix_json(s.U)}, {"S", matrix_json(s.S)}, {"V", matrix_json(s.V)}, {"diagonal", diag},
                    {"rank", s.rank}}.dump();
    });
    m.def("min_partition", [](const std::vector<long>& w, const std::string& predicate, std::uint64_t node_limit) {
        PartPredicate p;
        if (predicate == "ADE" || predicate == "ade")
            p = PartPredicate::ade;
        else if (predicate == "nonpositive")
            p = PartPredicate::nonpositive;
        else
            throw std::invalid_argument("predicate must be 'ADE' or 'nonpositive'");
        return certificate_json(min_partition(WeightSequence(w), p, node_limit)).dump();
    }, py::arg("weights"), py::arg("predicate"), py::arg("node_limit") = 0);
    m.def("coxeter_polynomial", [](const std::vector<std::vector<long>>& cartan) {
        Json out = Json::array();
        for (const auto& a : coxeter_polynomial(to_matrix(cartan))) out.push_back(integer_json(a));
        return out.dump();
    });
    m.def("exceptional_count", [](const std::vector<long>& w) {
        return Json(integer_json(exceptional_count(WeightSequence(w)))).dump();
    });
    m.def("suite_names", [] { return suite_names(); });
}
