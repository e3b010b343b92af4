#include <optional>
#include <string>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gridhfk/alexander.hpp"
#include "gridhfk/complex.hpp"
#include "gridhfk/errors.hpp"
#include "gridhfk/invariants.hpp"
#include "gridhfk/model.hpp"
#include "gridhfk/surgery.hpp"

namespace py = pybind11;
using namespace gridhfk;

namespace {

py::dict ranks_dict(const BigradedRanks& r) {
  py::dict out;
  for (const auto& [g, k] : r) out[py::make_tuple(g.M, g.A)] = k;
  return out;
}

py::dict module_dict(const UModuleSummary& m) {
  py::list towers, torsions;
  for (const auto& t : m.towers) towers.append(py::make_tuple(t.M, t.A));
  for (const auto& t : m.torsions) torsions.append(py::make_tuple(t.at.M, t.at.A, t.order));
  py::dict out;
  out["towers"] = towers;
  out["torsions"] = torsions;
  return out;
}

ComputeOptions options(int jobs, int cap) {
  ComputeOptions opt;
  opt.jobs = jobs;
  opt.cap = cap;
  opt.homology.jobs = jobs;
  return opt;
}

Flavor flavor_of(const std::string& s) {
  if (s == "hat") return Flavor::hat;
  if (s == "plus") return Flavor::plus;
  throw InputError("flavor must be 'hat' or 'plus'");
}

// A bundled name, a model document, or an Alexander polynomial string for a
// staircase ("delta:-1:1,0:-1,1:1").
ModelComplex model_of(const std::string& source) {
  if (source.rfind("delta:", 0) == 0) return staircase_model(parse_laurent(source.substr(6)));
  if (source.find('{') != std::string::npos) return load_model(source);
  return bundled_model(source);
}

py::dict summary_dict(const HomologySummary& h) {
  py::dict out;
  if (h.flavor == Flavor::hat) {
    out["rank"] = h.hat_rank;
  } else {
    out["towers"] = h.towers;
    out["excess"] = h.excess;
  }
  out["degree_ranks"] = h.degree_ranks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_gridhfk, m) {
  m.doc() = "Knot Floer homology from grid diagrams";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const CapExceeded& e) {
      py::set_error(cap_exceeded, e.what());
    } catch (const InvariantViolation& e) {
      py::set_error(invariant, e.what());
    }
  });

  py::class_<GridDiagram>(m, "Grid")
      .def(py::init<std::vector<int>, std::vector<int>>(), py::arg("O"), py::arg("X"))
      .def_property_readonly("n", &GridDiagram::size)
      .def_property_readonly("O", &GridDiagram::o_cols)
      .def_property_readonly("X", &GridDiagram::x_cols)
      .def_property_readonly("components", [](const GridDiagram& g) { return link_components(g).count; })
      .def("mirror", [](const GridDiagram& g) { return mirror(g); })
      .def("__str__", [](const GridDiagram& g) { return serialize_grid(g); })
      .def("__repr__", [](const GridDiagram& g) { return "Grid(" + serialize_grid(g) + ")"; })
      .def(py::self == py::self);

  m.def("parse_grid", [](const std::string& text) { return parse_grid(text); }, py::arg("text"));

  m.def(
      "alexander_polynomial",
      [](const GridDiagram& g) { return alexander_polynomial(g).terms(); }, py::arg("grid"),
      "Coefficients {exponent: coefficient} of the symmetrized Alexander polynomial.");

  m.def(
      "hfk_hat",
      [](const GridDiagram& g, int jobs, int cap) {
        py::gil_scoped_release release;
        auto r = hfk_hat(g, options(jobs, cap));
        py::gil_scoped_acquire acquire;
        return ranks_dict(r);
      },
      py::arg("grid"), py::arg("jobs") = 0, py::arg("cap") = kDefaultGeneratorCap);

  m.def(
      "knot_report",
      [](const GridDiagram& g, int jobs, int cap) {
        std::optional<KnotReport> held;
        {
          py::gil_scoped_release release;
          held.emplace(knot_report(g, options(jobs, cap)));
        }
        const KnotReport& r = *held;
        py::dict out;
        out["generators"] = r.generators;
        out["alexander"] = r.delta.terms();
        out["hfk_hat"] = ranks_dict(r.hfk_hat);
        out["hfk_minus"] = module_dict(r.hfk_minus);
        out["genus"] = r.genus;
        out["fibered"] = r.fibered;
        out["tau"] = r.tau;
        out["unknot"] = r.unknot;
        out["checks"] = r.checks;
        return out;
      },
      py::arg("grid"), py::arg("jobs") = 0, py::arg("cap") = kDefaultGeneratorCap);

  m.def("bundled_model_names", &bundled_model_names);

  m.def(
      "staircase_model", [](const std::string& delta) { return model_to_json(staircase_model(parse_laurent(delta))); },
      py::arg("delta"), "Model document for the staircase of `exp:coef,...`.");

  m.def(
      "model_check",
      [](const std::string& source) {
        try {
          model_of(source);
          return std::vector<std::string>{};
        } catch (const ModelError& e) {
          return e.errors();
        }
      },
      py::arg("source"), "Every violated model invariant; empty when valid.");

  m.def(
      "large_surgery",
      [](const std::string& source, int s, const std::string& flavor) {
        return summary_dict(large_surgery(model_of(source), s, flavor_of(flavor)));
      },
      py::arg("model"), py::arg("s"), py::arg("flavor") = "plus");

  m.def(
      "surgery",
      [](const std::string& source, int p, const std::string& flavor, std::optional<int> smax) {
        const ModelComplex mc = model_of(source);
        const auto cone = surgery_cone(mc, p, flavor_of(flavor), smax ? *smax : default_smax(mc, p));
        py::list out;
        for (const auto& h : surgery_homology(cone)) out.append(summary_dict(h));
        return out;
      },
      py::arg("model"), py::arg("p"), py::arg("flavor") = "plus", py::arg("smax") = py::none(),
      "Per Spin^c class summaries of the mapping cone, indexed by s mod |p|.");
}
