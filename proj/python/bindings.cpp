#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "campanato/carleson.hpp"
#include "campanato/composition.hpp"
#include "campanato/harness.hpp"

namespace py = pybind11;
using namespace campanato;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
  return parse_json(py::module_::import("json").attr("dumps")(o).cast<std::string>(), "python");
}

FunctionSpec spec_from(const py::object& o) { return function_from_json(JsonReader(from_python(o), "function")); }

py::dict report_dict(const SeminormReport& r) { return to_python(to_json(r)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Campanato space seminorms, Carleson measures and composition criteria";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<ConfigError> config_error(m, "ConfigError", error.ptr());
  static py::exception<DomainError> domain_error(m, "DomainError", error.ptr());
  static py::exception<ResolutionError> resolution_error(m, "ResolutionError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      config_error(e.what());
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const ResolutionError& e) {
      resolution_error(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<GridConfig>(m, "GridConfig")
      .def(py::init<>())
      .def_readwrite("circle_nodes", &GridConfig::circle_nodes)
      .def_readwrite("radial_panels", &GridConfig::radial_panels)
      .def_readwrite("arc_depth", &GridConfig::arc_depth)
      .def_readwrite("delta_min", &GridConfig::delta_min)
      .def_readwrite("gauss_order", &GridConfig::gauss_order)
      .def_readwrite("w_angles", &GridConfig::w_angles)
      .def_readwrite("disk_angles", &GridConfig::disk_angles)
      .def_readwrite("area_angles", &GridConfig::area_angles)
      .def("refined", &GridConfig::refined)
      .def("validate", &GridConfig::validate)
      .def("to_dict", [](const GridConfig& g) { return to_python(to_json(g)); });

  py::class_<FunctionSpec>(m, "FunctionSpec")
      .def("__call__", [](const FunctionSpec& f, Complex z) { return f(z); })
      .def("derivative", &FunctionSpec::derivative)
      .def("finite_on_boundary", &FunctionSpec::finite_on_boundary)
      .def("to_dict", [](const FunctionSpec& f) { return to_python(to_json(f)); });
  m.def("function", &spec_from, "FunctionSpec from its dict form");
  m.def("monomial", [](int n) { return FunctionSpec::monomial(n); });
  m.def("polynomial", [](const std::vector<Complex>& c) { return FunctionSpec::polynomial(c); });
  m.def("constant", [](Complex c) { return FunctionSpec::constant(c); });
  m.def("cauchy", [](Complex b) { return FunctionSpec::cauchy(b); });
  m.def("log_kernel", [] { return FunctionSpec::log_kernel(); });

  py::class_<SelfMapSpec>(m, "SelfMapSpec")
      .def("__call__", [](const SelfMapSpec& phi, Complex z) { return phi(z); })
      .def("derivative", &SelfMapSpec::derivative)
      .def("to_dict", [](const SelfMapSpec& phi) { return to_python(to_json(phi)); });
  m.def("self_map", [](const py::object& o) { return self_map_from_json(JsonReader(from_python(o), "map")); });
  m.def("identity_map", [] { return SelfMapSpec::identity(); });
  m.def("mobius_map", [](Complex a) { return SelfMapSpec::mobius(a); });
  m.def("polynomial_map", [](const std::vector<Complex>& c) { return SelfMapSpec::polynomial(c); });

  m.def("mobius", [](Complex w, Complex z) { return MobiusMap(w).apply(z); }, py::arg("w"), py::arg("z"));

  m.def("hardy_norm", [](const FunctionSpec& f, double p, const GridConfig& g) {
    return hardy_norm(f, p, CircleGrid(g.circle_nodes), f.finite_on_boundary() ? 0.0 : g.delta_min);
  }, py::arg("f"), py::arg("p") = 2.0, py::arg("grid") = GridConfig{});
  m.def("campanato_seminorm", [](const FunctionSpec& f, double p, double eta, const GridConfig& g) {
    const CircleGrid circle(g.circle_nodes);
    return report_dict(campanato_seminorm(BoundarySamples::of(f, circle), IndexParams(p, eta),
                                          ArcFamily(g.arc_depth, g.circle_nodes)));
  }, py::arg("f"), py::arg("p") = 2.0, py::arg("eta") = 1.0, py::arg("grid") = GridConfig{});
  m.def("mobius_seminorm", [](const FunctionSpec& f, double p, double eta, const GridConfig& g) {
    return report_dict(mobius_seminorm(f, IndexParams(p, eta), WGrid(g), g));
  }, py::arg("f"), py::arg("p") = 2.0, py::arg("eta") = 1.0, py::arg("grid") = GridConfig{});
  m.def("lp_star_seminorm", [](const FunctionSpec& f, double p, double eta, const GridConfig& g) {
    return report_dict(lp_star_seminorm(f, IndexParams(p, eta), ArcFamily(g.arc_depth, g.circle_nodes), RadialGrid(g)));
  }, py::arg("f"), py::arg("p") = 2.0, py::arg("eta") = 1.0, py::arg("grid") = GridConfig{});
  m.def("bloch_norm", [](const FunctionSpec& f, double alpha, const GridConfig& g) {
    return report_dict(bloch_norm(f, alpha, DiskGrid(g, g.disk_angles)));
  }, py::arg("f"), py::arg("alpha") = 1.0, py::arg("grid") = GridConfig{});
  m.def("carleson_norm", [](const py::object& density, double eta, const GridConfig& g) {
    const Density rho = density_from_json(JsonReader(from_python(density), "density"));
    return report_dict(carleson_norm(rho, eta, ArcFamily(g.arc_depth, g.disk_angles), DiskGrid(g, g.disk_angles)));
  }, py::arg("density"), py::arg("eta") = 1.0, py::arg("grid") = GridConfig{});

  m.def("nevanlinna", &nevanlinna, py::arg("phi"), py::arg("w"));
  m.def("preimages", [](const SelfMapSpec& phi, Complex w) {
    std::vector<std::pair<Complex, int>> out;
    for (const auto& r : preimages(phi, w).roots) out.emplace_back(r.z, r.multiplicity);
    return out;
  }, py::arg("phi"), py::arg("w"));
  m.def("stanton_norm", [](const FunctionSpec& f, const SelfMapSpec& phi, double p, const GridConfig& g) {
    return stanton_norm(f, phi, p, DiskGrid(g, g.area_angles)).value;
  }, py::arg("f"), py::arg("phi"), py::arg("p") = 2.0, py::arg("grid") = GridConfig{});
  m.def("thm42_criterion", [](const SelfMapSpec& phi, double p, double eta, double lambda, const GridConfig& g) {
    return report_dict(thm42_criterion(phi, p, eta, lambda, WGrid(g), g));
  }, py::arg("phi"), py::arg("p") = 2.0, py::arg("eta") = 1.0, py::arg("lambda_") = 1.0, py::arg("grid") = GridConfig{});
  m.def("thm43i_criterion", [](const SelfMapSpec& phi, double alpha, double p, double eta, const GridConfig& g) {
    return report_dict(thm43i_criterion(phi, alpha, p, eta, DiskGrid(g, g.disk_angles)));
  }, py::arg("phi"), py::arg("alpha") = 1.0, py::arg("p") = 2.0, py::arg("eta") = 1.0, py::arg("grid") = GridConfig{});

  m.def("run_job", [](const py::object& config, const py::object& grid_overrides) {
    Json doc = from_python(config);
    JobConfig job = job_from_json(doc, "config");
    if (!grid_overrides.is_none()) job.grid = grid_overrides.cast<GridConfig>();
    const Report r = run_job(job);
    return py::make_tuple(to_python(r.body), exit_status(r));
  }, py::arg("config"), py::arg("grid") = py::none());
  m.def("acceptance_criterion", [](int k, const GridConfig& g) { return to_python(to_json(acceptance_criterion(k, g))); },
        py::arg("number"), py::arg("grid") = GridConfig{});
  m.def("suite_names", &suite_names);
  m.attr("__version__") = kVersion;
}
