#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "statesurf/certify.hpp"
#include "statesurf/json.hpp"
#include "statesurf/surface.hpp"
#include "statesurf/table.hpp"

namespace py = pybind11;
using namespace statesurf;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

State state_arg(const LinkDiagram& d, const std::string& spec) { return resolve_state(d, spec); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "State surfaces of link diagrams";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SearchLimitError>(m, "SearchLimitError", PyExc_RuntimeError);

  py::class_<LinkDiagram>(m, "Diagram")
      .def_static("from_pd", [](const std::string& text) { return parse_pd(text); }, py::arg("text"))
      .def_static("from_dt", [](const std::string& text) { return parse_dt(text); }, py::arg("text"))
      .def_static("parse", [](const std::string& text) { return parse_diagram(text); }, py::arg("text"))
      .def_static("from_braid", [](const std::vector<int>& word) { return from_braid(word); }, py::arg("word"))
      .def_property_readonly("name", &LinkDiagram::name)
      .def_property_readonly("crossings", &LinkDiagram::crossing_count)
      .def_property_readonly("components", &LinkDiagram::link_component_count)
      .def_property_readonly("free_loops", &LinkDiagram::free_loop_count)
      .def_property_readonly("writhe", [](const LinkDiagram& d) { return writhe(d); })
      .def_property_readonly("faces", [](const LinkDiagram& d) { return faces(d).face_count(); })
      .def_property_readonly("fingerprint", [](const LinkDiagram& d) { return fingerprint_hex(d); })
      .def("pd", &LinkDiagram::to_pd)
      .def("mirror", [](const LinkDiagram& d) { return mirror(d); })
      .def("nugatory", [](const LinkDiagram& d) { return nugatory_crossings(d); })
      .def("is_alternating", [](const LinkDiagram& d) { return is_alternating(d); })
      .def("is_positive", [](const LinkDiagram& d) { return is_positive(d); })
      .def("state", [](const LinkDiagram& d, const std::string& spec) { return state_arg(d, spec).to_string(); },
           py::arg("spec"))
      .def("loops", [](const LinkDiagram& d, const std::string& spec) { return smooth(d, state_arg(d, spec)).loop_count; },
           py::arg("state") = "seifert")
      .def("__eq__", [](const LinkDiagram& a, const LinkDiagram& b) { return a == b; })
      .def("__repr__", [](const LinkDiagram& d) { return "<Diagram " + d.to_pd() + ">"; });

  m.def("surface", [](const LinkDiagram& d, const std::string& state) {
    return to_python(to_json(build_state_surface(d, state_arg(d, state))));
  }, py::arg("diagram"), py::arg("state") = "seifert");

  m.def("invariants", [](const LinkDiagram& d, const std::string& state) {
    return to_python(to_json(invariants(build_state_surface(d, state_arg(d, state)))));
  }, py::arg("diagram"), py::arg("state") = "seifert");

  m.def("certify", [](const LinkDiagram& d, const std::string& state) {
    return to_python(to_json(certify_essential(d, state_arg(d, state))));
  }, py::arg("diagram"), py::arg("state") = "seifert");

  m.def("search", [](const LinkDiagram& d, bool exhaustive, bool exclude_seifert, int threads) {
    SearchOptions opt;
    opt.exhaustive = exhaustive;
    opt.exclude_seifert = exclude_seifert;
    opt.threads = threads;
    return to_python(to_json(find_certifying_states(d, opt)));
  }, py::arg("diagram"), py::arg("exhaustive") = false, py::arg("exclude_seifert") = false, py::arg("threads") = 1);

  m.def("classify", [](const LinkDiagram& d) { return to_python(to_json(classify(d))); }, py::arg("diagram"));

  m.def("decide_trivial", [](const LinkDiagram& d) { return to_python(to_json(decide_trivial(d))); },
        py::arg("diagram"));
  m.def("decide_split", [](const LinkDiagram& d) { return to_python(to_json(decide_split(d))); },
        py::arg("diagram"));

  m.def("remark_check", [](const std::string& table_path, const std::string& which, int threads) {
    const auto kind = remark_table_from_name(which);
    if (!kind) throw py::value_error("unknown check: " + which);
    BatchReport report;
    {
      py::gil_scoped_release release;
      report = run_remark_check(load_table(table_path), *kind, threads);
    }
    return to_python(to_json(report));
  }, py::arg("table"), py::arg("which"), py::arg("threads") = 1);
}
