// Python bindings. JSON-shaped results cross the boundary as strings and are decoded
// by the pure-Python wrapper in linrel/__init__.py.

#include "linrel/canonical_forms.hpp"
#include "linrel/classify.hpp"
#include "linrel/errors.hpp"
#include "linrel/relation_io.hpp"
#include "linrel/spider.hpp"
#include "linrel/szymczak.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace linrel;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

Matrix matrix_from_rows(std::uint32_t p, const Rows& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(Prime(p), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Prime(p).reduce(rows[i][j]);
    }
    return m;
}

std::vector<std::vector<Residue>> rows_of(const Subspace& s) {
    std::vector<std::vector<Residue>> out;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        auto row = s.basis().row(r);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

LinearRelation from_generators(std::uint32_t p, std::size_t dom, std::size_t cod, const Rows& gens) {
    const Prime prime(p);
    std::vector<Vector> vs;
    for (const auto& g : gens) {
        std::vector<Residue> c;
        for (auto x : g) c.push_back(prime.reduce(x));
        vs.emplace_back(prime, std::move(c));
    }
    return LinearRelation::from_generators(prime, dom, cod, vs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Linear relations over GF(p): composition, Leray forms and Szymczak classes";

    auto base = py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_OverflowError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    (void)base;

    py::class_<LinearRelation>(m, "Relation")
        .def(py::init(&from_generators), py::arg("p"), py::arg("dim_dom"), py::arg("dim_cod"),
             py::arg("generators"))
        .def_static(
            "from_matrix", [](std::uint32_t p, const Rows& rows) { return LinearRelation::from_matrix(matrix_from_rows(p, rows)); },
            py::arg("p"), py::arg("rows"), "Graph of x -> M x for a cod x dom matrix given by rows.")
        .def_static(
            "from_json", [](const std::string& text) {
                nlohmann::json doc;
                try {
                    doc = nlohmann::json::parse(text);
                } catch (const nlohmann::json::exception& e) {
                    throw FormatError(e.what());
                }
                return relation_from_json(doc);
            },
            py::arg("text"))
        .def_static("identity", [](std::uint32_t p, std::size_t n) { return LinearRelation::identity(Prime(p), n); })
        .def_static("top", [](std::uint32_t p, std::size_t dom,
                              std::size_t cod) { return LinearRelation::top(Prime(p), dom, cod); })
        .def_static("bottom", [](std::uint32_t p, std::size_t dom,
                                 std::size_t cod) { return LinearRelation::bottom(Prime(p), dom, cod); })
        .def_property_readonly("p", [](const LinearRelation& r) { return r.prime().value(); })
        .def_property_readonly("dim_dom", &LinearRelation::dim_dom)
        .def_property_readonly("dim_cod", &LinearRelation::dim_cod)
        .def_property_readonly("generators", [](const LinearRelation& r) { return rows_of(r.graph()); })
        .def("to_json", [](const LinearRelation& r) { return relation_to_json(r).dump(); })
        .def("inverse", [](const LinearRelation& r) { return inverse(r); })
        .def("power", [](const LinearRelation& r, std::int64_t k) { return power(r, k); }, py::arg("k"))
        .def("then", [](const LinearRelation& phi, const LinearRelation& psi) { return compose(psi, phi); },
             py::arg("psi"), "psi o self")
        .def("__matmul__", [](const LinearRelation& psi, const LinearRelation& phi) { return compose(psi, phi); })
        .def("is_single_valued", &is_single_valued)
        .def("is_total", &is_total)
        .def("is_injective", &is_injective)
        .def("is_surjective", &is_surjective)
        .def("is_isomorphism", &is_isomorphism)
        .def("to_matrix",
             [](const LinearRelation& r) {
                 auto mat = to_matrix(r);
                 std::vector<std::vector<Residue>> rows;
                 for (std::size_t i = 0; i < mat.rows(); ++i) {
                     auto row = mat.row(i);
                     rows.emplace_back(row.begin(), row.end());
                 }
                 return rows;
             })
        .def(py::self == py::self)
        .def("__hash__", [](const LinearRelation& r) { return std::hash<Subspace>{}(r.graph()) ^ r.dim_dom(); })
        .def("__repr__", [](const LinearRelation& r) { return "Relation(" + relation_to_json(r).dump() + ")"; });

    m.def("gker", [](const LinearRelation& a) { return rows_of(gker(EndoObject(a))); });
    m.def("gim", [](const LinearRelation& a) { return rows_of(gim(EndoObject(a))); });
    m.def("leray", [](const LinearRelation& a) { return leray_form_to_json(leray(EndoObject(a))).dump(); });
    m.def("szym_label", [](const LinearRelation& a) { return label_to_json(szym_label(EndoObject(a))).dump(); });
    m.def("szym_equiv", [](const LinearRelation& a, const LinearRelation& b) {
        return szym_equiv(EndoObject(a), EndoObject(b));
    });
    m.def("oracle_szym_equiv", [](const LinearRelation& a, const LinearRelation& b) {
        return oracle_szym_equiv(EndoObject(a), EndoObject(b));
    });
    m.def("invariant_factors", [](std::uint32_t p, const Rows& rows) {
        std::vector<std::vector<Residue>> out;
        for (const auto& f : invariant_factors(matrix_from_rows(p, rows)).factors) out.push_back(f.coeffs());
        return out;
    });
    m.def("similar", [](std::uint32_t p, const Rows& a, const Rows& b) {
        return similar(matrix_from_rows(p, a), matrix_from_rows(p, b));
    });
    m.def("enumerate", [](std::uint32_t p, std::size_t n) { return enumerate_relations(Prime(p), n); });
    m.def(
        "classify",
        [](std::uint32_t p, std::size_t n, const std::string& format, unsigned workers, bool include_zero) {
            ClassifyOptions opt;
            opt.workers = workers;
            opt.include_zero_object = include_zero;
            ClassTable table;
            {
                py::gil_scoped_release release;
                table = classify(Prime(p), n, opt);
            }
            if (format == "csv") return export_csv(table);
            if (format == "dot") return export_dot(table);
            if (format == "json") return export_json(table);
            throw std::invalid_argument("format must be json, csv or dot");
        },
        py::arg("p"), py::arg("dim"), py::arg("format") = "json", py::arg("workers") = 1,
        py::arg("include_zero_object") = false);
    m.def(
        "spider_report",
        [](std::size_t orbits, std::optional<std::size_t> max_power) {
            return verify_spider(orbits, max_power.value_or(orbits)).to_json().dump();
        },
        py::arg("orbits"), py::arg("max_power") = py::none());
}
