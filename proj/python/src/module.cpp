// Thin pybind11 layer. Rationals cross the boundary as "p/q" text and
// structured results as JSON text; the Python package turns both into
// Fraction and dict.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "susa/algorithms.hpp"
#include "susa/cli.hpp"
#include "susa/error.hpp"
#include "susa/expression.hpp"
#include "susa/figures.hpp"
#include "susa/report.hpp"
#include "susa/tablet.hpp"

namespace py = pybind11;
using namespace susa;

namespace {

std::string area_json(const std::string& figure, const std::string& profile_id,
                      const std::optional<std::string>& sqrt21, std::size_t places) {
  ApproximationProfile profile = profile_from_id(profile_id);
  if (sqrt21) profile = profile.with_root(21, resolve_sqrt21(*sqrt21).value);
  const BabylonianArea area = babylonian_area(make_figure(figure_from_id(figure)), profile, places);
  Json j{{"figure", figure},
         {"profile", profile.name},
         {"sexagesimal", area.truncated.value.str()},
         {"exact", area.truncated.exact},
         {"rational", area.exact.str()}};
  return j.dump();
}

std::string verify_json(const std::string& id, const std::optional<std::string>& profile,
                        const std::optional<std::string>& sqrt21) {
  ReconstructionOptions options;
  options.profile = profile;
  if (sqrt21) options.sqrt21 = resolve_sqrt21(*sqrt21);
  return to_json(verify(find_record(id), options)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> domain_error(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(domain_error)(e.what());
      instance.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(domain_error.ptr(), instance.ptr());
    }
  });

  py::class_<Sexagesimal>(m, "Sexagesimal")
      .def(py::init([](const std::string& text) { return parse_absolute(text); }), py::arg("text"))
      .def_static("from_fraction",
                  [](const std::string& r, std::size_t places) { return from_rational(Rational::parse(r), places).value; },
                  py::arg("fraction"), py::arg("places") = 64)
      .def("rational", [](const Sexagesimal& s) { return s.to_rational().str(); })
      .def_property_readonly("places", &Sexagesimal::places)
      .def("reciprocal", [](const Sexagesimal& s) { return reciprocal(s); })
      .def("truncate", [](const Sexagesimal& s, std::size_t p) { return truncate(s, p).value; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &Sexagesimal::str)
      .def("__repr__", [](const Sexagesimal& s) { return "Sexagesimal('" + s.str() + "')"; });

  m.def("evaluate", [](const std::string& text, long exponent) { return evaluate_expression(text, exponent); },
        py::arg("expression"), py::arg("exponent") = 0);
  m.def("sqrt_trace",
        [](const std::string& n, int steps, std::optional<std::size_t> trunc, std::size_t places) {
          const Rational target = Rational::parse(n);
          IterationTrace t = trunc ? truncated_iteration(target, steps, *trunc) : babylonian_sqrt(target, steps);
          return to_json(t, places).dump();
        },
        py::arg("n"), py::arg("steps") = 5, py::arg("trunc") = std::nullopt, py::arg("places") = 4);
  m.def("solve_quadratic",
        [](const std::string& p, const std::string& q) {
          return to_json(solve_quadratic(parse_surd(p), parse_surd(q))).dump();
        },
        py::arg("p"), py::arg("q"));
  m.def("babylonian_area", &area_json, py::arg("figure"), py::arg("profile") = "coarse",
        py::arg("sqrt21") = std::nullopt, py::arg("places") = 4);
  m.def("verify", &verify_json, py::arg("id"), py::arg("profile") = std::nullopt, py::arg("sqrt21") = std::nullopt);
  m.def("report", [](bool json) { return emit_report(json ? ReportFormat::json : ReportFormat::text); },
        py::arg("json") = false);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
