#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hq/report.hpp"

namespace py = pybind11;

namespace {

std::vector<py::dict> failures(const hq::AxiomReport& r) {
    std::vector<py::dict> out;
    for (const auto& c : r.failures())
        out.push_back(py::dict(py::arg("axiom") = c.axiom, py::arg("location") = c.location,
                               py::arg("status") = c.status, py::arg("detail") = c.detail));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hopf algebra computations: integrals, Nakayama automorphisms, twisted Hochschild (co)homology";

    py::register_exception<hq::Error>(m, "HopfError", PyExc_RuntimeError);

    m.def(
        "run",
        [](const std::string& command, const std::string& algebra, const std::string& method, const std::string& twist,
           const std::string& twist_file, int degree_bound, int truncate, int window, uint64_t seed, int jobs) {
            hq::CommandOptions o;
            o.method = method;
            o.twist = twist;
            o.twist_file = twist_file;
            o.degree_bound = degree_bound;
            o.truncate = truncate;
            o.window = window;
            o.seed = seed;
            o.jobs = jobs;
            hq::Json r;
            {
                py::gil_scoped_release release;
                r = hq::run_command(command, algebra, o);
            }
            return py::make_tuple(hq::dump_report(r), hq::exit_code(r));
        },
        py::arg("command"), py::arg("algebra") = "", py::arg("method") = "auto", py::arg("twist") = "identity",
        py::arg("twist_file") = "", py::arg("degree_bound") = 6, py::arg("truncate") = 8, py::arg("window") = 3,
        py::arg("seed") = 0, py::arg("jobs") = 1,
        "Runs a command and returns (canonical JSON report, exit code).");

    m.def("catalog_names", [] {
        std::vector<std::string> out;
        for (const auto& e : hq::catalog()) out.push_back(e.name);
        return out;
    });

    py::class_<hq::HopfPresentation>(m, "Presentation")
        .def_static(
            "from_catalog",
            [](const std::string& name, int degree_bound) {
                return hq::build_presentation(hq::find_entry(name), degree_bound);
            },
            py::arg("name"), py::arg("degree_bound") = 6)
        .def_static("read", &hq::read_presentation, py::arg("text"))
        .def("write", &hq::write_presentation)
        .def_property_readonly("name", &hq::HopfPresentation::name)
        .def_property_readonly("generators", [](const hq::HopfPresentation& h) { return h.sys().names(); })
        .def_property_readonly("field", [](const hq::HopfPresentation& h) { return h.field().str(); })
        .def("normal_form",
             [](const hq::HopfPresentation& h, const std::string& p) {
                 return h.nf(h.parse(p)).str(h.sys().names(), h.sys().order());
             })
        .def(
            "verify_axioms",
            [](const hq::HopfPresentation& h, int degree_bound) {
                hq::AxiomReport r = hq::verify_hopf_axioms(h, degree_bound);
                return py::make_tuple(r.passed, failures(r));
            },
            py::arg("degree_bound") = 6);

    m.def("fd_structure", [](const std::string& name) { return hq::write_fd(hq::build_fd(name)); }, py::arg("name"),
          "Structure-tensor text of a finite-dimensional catalog entry.");
    m.def(
        "export_complex",
        [](const std::string& name) {
            const hq::CatalogEntry& e = hq::find_entry(name);
            hq::HopfPresentation h = hq::build_presentation(e, e.degree_bound);
            return hq::export_complex(hq::resolution(e, h), h);
        },
        py::arg("name"), "Resolution of the trivial module in the complex text format.");
}
