#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "fourmove/catalog.hpp"
#include "fourmove/errors.hpp"
#include "fourmove/magnus.hpp"
#include "fourmove/milnor.hpp"
#include "fourmove/obstruction.hpp"
#include "fourmove/underpass.hpp"

namespace py = pybind11;
using namespace fourmove;

PYBIND11_MODULE(_fourmove, m) {
  m.doc() = "Magnus-expansion obstruction to trivializing a (welded) link by 4-moves";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<UnderpassCode>(m, "UnderpassCode")
      .def_property_readonly("name", &UnderpassCode::name)
      .def_property_readonly("m", &UnderpassCode::m)
      .def("r", &UnderpassCode::r, py::arg("i"))
      .def("arc_count", &UnderpassCode::arc_count, py::arg("i"))
      .def("__repr__", [](const UnderpassCode& c) {
        return "<UnderpassCode '" + c.name() + "', m=" + std::to_string(c.m()) + ">";
      });

  m.def("parse_link_file", &parse_link_file, py::arg("text"),
        "parse the JSON link document format");
  m.def("serialize_link", &serialize_link, py::arg("code"));
  m.def("import_gauss", &import_gauss, py::arg("text"), py::arg("name") = "gauss",
        "import a signed Gauss code, one line per component");

  m.def("linking_number", &linking_number, py::arg("code"), py::arg("i"), py::arg("j"));
  m.def("writhe", &writhe, py::arg("code"), py::arg("i"));
  m.def("linking_matrix", &linking_matrix, py::arg("code"));

  m.def(
      "longitude_words",
      [](const UnderpassCode& code) {
        LongitudeData data = longitudes(code);
        std::vector<std::string> out;
        for (const Word& w : data.lambda) out.push_back(to_string(w));
        return out;
      },
      py::arg("code"), "longitude words over the arc alphabet, one per component");

  m.def(
      "expand_word",
      [](const std::string& word, int m_vars, int D) {
        Word w = parse_word(Alphabet::meridians(m_vars), word);
        return to_string(expand_word(w, m_vars, D));
      },
      py::arg("word"), py::arg("m"), py::arg("D") = 4,
      "Magnus Z2-expansion of a meridian word, printed in graded lex order");

  m.def("mu_mod2", &mu_mod2, py::arg("code"), py::arg("seq"), py::arg("i"),
        py::arg("q") = 5, "diagram-level Milnor invariant mod 2");

  m.def(
      "commutator_series",
      [](const UnderpassCode& code, int i, int q, int D) {
        return to_string(commutator_series(code, i, q, D));
      },
      py::arg("code"), py::arg("i"), py::arg("q") = 5, py::arg("D") = 4);

  m.def(
      "check_link_json",
      [](const UnderpassCode& code, int q, std::optional<int> D) {
        return report_json(check_link(code, q, D));
      },
      py::arg("code"), py::arg("q") = 5, py::arg("D") = py::none(),
      "full obstruction report as a JSON string");

  m.def("catalog_list", &catalog_list);
  m.def(
      "catalog_get", [](const std::string& name) { return catalog_get(name).code; },
      py::arg("name"));
  m.def(
      "catalog_note", [](const std::string& name) { return catalog_get(name).note; },
      py::arg("name"));
}
