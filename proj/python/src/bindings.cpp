#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ncsurf/conecalc.hpp"
#include "ncsurf/errors.hpp"
#include "ncsurf/family_parser.hpp"
#include "ncsurf/geomcheck.hpp"
#include "ncsurf/logres.hpp"
#include "ncsurf/monideal.hpp"
#include "ncsurf/scenario.hpp"

namespace py = pybind11;
using namespace ncsurf;

namespace {

std::vector<std::string> monomial_strings(const std::vector<ExponentVector>& monos, const VarList& vars) {
  std::vector<std::string> out;
  for (const auto& e : monos) out.push_back(to_string(e, vars));
  return out;
}

VarList xy() { return VarList{"x", "y"}; }

WeightedHyperellipticCurve curve(const std::string& form) {
  return WeightedHyperellipticCurve(BinaryForm::parse(xy(), form));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks for log pluricanonical sections on normal crossing surfaces.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<MultiplicativityViolation>(m, "MultiplicativityViolation", error.ptr());
  py::register_exception<IllegalPole>(m, "IllegalPole", error.ptr());

  m.def("canonical_family", [](const std::string& src) { return parse_family(src).to_string(); },
        py::arg("src"));

  m.def(
      "rees_report",
      [](const std::string& src, int n) {
        GradedMonomialFamily family = parse_family(src, n);
        ReesGenerationReport report = rees_report(family, n);
        py::list rows;
        for (const auto& row : report.rows)
          rows.append(py::make_tuple(row.degree, monomial_strings(row.new_generators, family.vars())));
        return py::make_tuple(rows, report.witness_flag);
      },
      py::arg("family"), py::arg("max_degree"),
      "Rows (m, new generators) and the witness flag.");

  m.def(
      "gluing_ideal", [](int deg) { return monomial_strings(gluing_ideal(deg).generators(), xy()); },
      py::arg("m"));

  m.def(
      "glues",
      [](int weight, const std::string& f, const std::string& fu, const std::string& fv) {
        return glues(PluriSection(ChartKind::NcPair, weight, f),
                     PluriSection(ChartKind::HalfPlaneU, weight, fu),
                     PluriSection(ChartKind::HalfPlaneV, weight, fv));
      },
      py::arg("m"), py::arg("nc"), py::arg("half_u"), py::arg("half_v"));

  m.def(
      "restrict_cone",
      [](int half_weight, const std::string& coeff) {
        BranchRestriction r = restrict_cone(ConeSection(2 * half_weight, ConeElement::parse(coeff)));
        return py::make_tuple(r.to_string(), r.pole_order);
      },
      py::arg("m"), py::arg("coeff") = "1");
  m.def(
      "mult_along_C2", [](const std::string& e) { return mult_along_C2(ConeElement::parse(e)); },
      py::arg("element"));
  m.def("pole_bound_s2", [](int deg, int cutoff) { return pole_bound_s2(deg, ConeOptions{cutoff}); },
        py::arg("m"), py::arg("cutoff") = 12);
  m.def(
      "glued_pole_bound", [](int deg, int cutoff) { return glued_pole_bound(deg, ConeOptions{cutoff}); },
      py::arg("m"), py::arg("cutoff") = 12);

  m.def("embed_search", []() -> std::optional<std::string> {
    auto found = embed_search();
    if (!found) return std::nullopt;
    return found->to_string();
  });

  m.def(
      "fixed_points", [](const std::string& form) { return fixed_points(curve(form)); },
      py::arg("form"));
  m.def(
      "node_count",
      [](const std::string& c, const std::string& e) { return node_count(curve(c), curve(e)); },
      py::arg("c"), py::arg("e"));

  m.def(
      "run_report",
      [](const std::string& task, int max_degree, std::optional<std::string> family,
         bool structured) {
        auto t = parse_task(task);
        if (!t) throw py::value_error("unknown task: " + task);
        Scenario sc{*t, max_degree, std::move(family),
                    structured ? OutputFormat::Structured : OutputFormat::Table};
        Report report = run(sc);
        std::ostringstream out;
        write_report(out, report);
        return py::make_tuple(out.str(), report.passed());
      },
      py::arg("task") = "all", py::arg("max_degree") = 20, py::arg("family") = py::none(),
      py::arg("structured") = true);
}
