// Python bindings; structured results cross the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acta/act.hpp"
#include "acta/classify.hpp"
#include "acta/cogeneration.hpp"
#include "acta/congruence.hpp"
#include "acta/io.hpp"
#include "acta/monoid.hpp"
#include "acta/structure.hpp"
#include "acta/universe.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite monoid acts";

  py::register_exception<acta::Error>(m, "ActaError", PyExc_ValueError);

  py::class_<acta::Monoid>(m, "Monoid")
      .def(py::init(&acta::Monoid::from_table), py::arg("table"),
           py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("size", &acta::Monoid::size)
      .def_property_readonly("identity", &acta::Monoid::identity)
      .def_property_readonly("zero", &acta::Monoid::zero)
      .def_property_readonly("table", &acta::Monoid::table)
      .def_property_readonly("names", &acta::Monoid::names)
      .def("product", &acta::Monoid::product)
      .def("is_commutative", &acta::Monoid::is_commutative)
      .def("__len__", &acta::Monoid::size)
      .def("__eq__", &acta::Monoid::operator==);

  py::class_<acta::Act>(m, "Act")
      .def(py::init(&acta::Act::from_table), py::arg("monoid"), py::arg("table"),
           py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("monoid", &acta::Act::monoid)
      .def_property_readonly("size", &acta::Act::size)
      .def_property_readonly("table", &acta::Act::table)
      .def_property_readonly("names", &acta::Act::names)
      .def("act", &acta::Act::act)
      .def("fixed_points", &acta::Act::fixed_points)
      .def("__len__", &acta::Act::size)
      .def("__eq__", &acta::Act::operator==);

  m.def("semilattice_1oef", &acta::semilattice_1oef);
  m.def("regular_act", &acta::regular_act);
  m.def("load_monoid", [](std::string const& path) { return acta::io::load_monoid(path); });
  m.def("load_act", [](std::string const& path) { return acta::io::load_act(path); });
  m.def("to_json", [](acta::Act const& A) { return acta::io::to_json(A).dump(); });

  m.def("all_congruences", [](acta::Act const& A) {
    std::vector<std::vector<acta::index_t>> result;
    for (auto const& c : acta::all_congruences(A)) {
      result.push_back(c.labels());
    }
    return result;
  });
  m.def("cotrace", [](acta::Act const& A, std::vector<acta::Act> const& Cs) {
    return acta::cotrace(A, Cs).labels();
  });
  m.def("is_cogenerated", [](std::vector<acta::Act> const& Cs, acta::Act const& A) {
    return acta::is_cogenerated(Cs, A);
  });
  m.def("count_homs", &acta::count_homs);
  m.def("right_annihilator", [](acta::Act const& A, std::vector<acta::index_t> const& subset) {
    return acta::right_annihilator(A, subset).labels();
  });
  m.def("structure_report", [](acta::Act const& A) {
    return acta::io::to_json(acta::structure_report(A), A).dump();
  });
  m.def("classification_report", [](acta::Act const& A) {
    return acta::io::to_json(acta::classification_report(A), A).dump();
  });

  m.def("enumerate_monoids", [](std::size_t n) { return acta::enumerate_monoids(n); });
  m.def("enumerate_acts",
        [](acta::Monoid const& M, std::size_t size) { return acta::enumerate_acts(M, size); });
  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (auto const& c : acta::claim_registry()) {
      ids.push_back(c.id);
    }
    return ids;
  });
  m.def(
      "run_claims",
      [](std::size_t max_monoid, std::size_t max_act, std::vector<std::string> const& claims,
         std::size_t jobs) {
        acta::UniverseOptions options;
        options.max_monoid = max_monoid;
        options.max_act    = max_act;
        std::vector<acta::ClaimResult> results;
        acta::Universe                 U;
        {
          py::gil_scoped_release release;
          U       = acta::build_universe(options);
          results = acta::run_claims(U, claims, jobs);
        }
        return acta::io::report_json(U, results).dump();
      },
      py::arg("max_monoid") = 3, py::arg("max_act") = 4,
      py::arg("claims") = std::vector<std::string>{}, py::arg("jobs") = 1);
}
