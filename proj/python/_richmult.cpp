// Python bindings. Reports cross the boundary as JSON text and are decoded
// by the pure-Python wrapper in richmult/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "richmult/engine.hpp"
#include "richmult/quadric.hpp"
#include "richmult/report.hpp"

namespace py = pybind11;
using namespace richmult;

namespace {

AffinePoint chart_point(const Chart& chart, const std::string& point_json) {
  if (point_json.empty()) return chart.origin();
  return parse_point_map(point_json, chart);
}

std::vector<std::string> ideal_lines(const PolyIdeal& ideal, std::span<const std::string> names) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators) out.push_back(to_string(g, names));
  return out;
}

py::dict equations(int d, int n, const std::string& w, const std::string& v, const std::string& tau,
                   const std::string& point_json) {
  GrassShape s(d, n);
  TripleContext ctx = prepare_triple(s, parse_coset_rep(w, s), parse_coset_rep(v, s), parse_coset_rep(tau, s));
  auto names = ctx.chart.variable_names(point_json.empty() ? "x" : "y");
  AffinePoint m = chart_point(ctx.chart, point_json);
  py::dict out;
  std::vector<std::string> indices;
  for (const auto& r : ctx.chart.indices()) indices.push_back(to_string(r));
  out["indices"] = indices;
  out["schubert"] = ideal_lines(translate_to_origin(ctx.schubert, m), names);
  out["opposite"] = ideal_lines(translate_to_origin(ctx.opposite, m), names);
  out["richardson"] = ideal_lines(translate_to_origin(ctx.richardson, m), names);
  return out;
}

std::string mult(int d, int n, const std::string& w, const std::string& v, const std::string& tau,
                 const std::string& point_json, bool samuel) {
  GrassShape s(d, n);
  TripleContext ctx = prepare_triple(s, parse_coset_rep(w, s), parse_coset_rep(v, s), parse_coset_rep(tau, s));
  AnalysisOptions opts;
  opts.samuel_check = samuel;
  MultiplicityReport r;
  {
    py::gil_scoped_release release;
    r = analyze_point(ctx, chart_point(ctx.chart, point_json), opts);
  }
  return report_to_json(r);
}

std::pair<std::string, bool> sweep(int d, int n, const std::string& grid, std::size_t per_instance,
                                   std::size_t max_instances, unsigned workers, bool samuel) {
  GrassShape s(d, n);
  SweepConfig cfg;
  if (!grid.empty()) cfg.grid = parse_grid(grid);
  cfg.points_per_instance = per_instance;
  cfg.max_instances = max_instances;
  cfg.workers = workers;
  cfg.analysis.samuel_check = samuel;
  SweepResult r;
  {
    py::gil_scoped_release release;
    r = verify_theorem(s, cfg);
  }
  return {reports_to_json(r.reports), r.truncated};
}

std::string quadric(int n, int i, int j, const std::string& point_json) {
  QuadricShape s(n);
  return report_to_json(quadric_report(s, SchubertIndex(s, i), SchubertIndex(s, j), parse_quadric_point(point_json)));
}

}  // namespace

PYBIND11_MODULE(_richmult, m) {
  m.doc() = "Exact multiplicities on Richardson varieties";
  py::register_exception<Error>(m, "RichmultError", PyExc_ValueError);

  m.def("equations", &equations, py::arg("d"), py::arg("n"), py::arg("w"), py::arg("v"), py::arg("tau"),
        py::arg("point") = "");
  m.def("mult", &mult, py::arg("d"), py::arg("n"), py::arg("w"), py::arg("v"), py::arg("tau"),
        py::arg("point") = "", py::arg("samuel") = false);
  m.def("sweep", &sweep, py::arg("d"), py::arg("n"), py::arg("grid") = "", py::arg("per_instance") = 200,
        py::arg("max_instances") = 100000, py::arg("workers") = 0, py::arg("samuel") = false);
  m.def("quadric", &quadric, py::arg("n"), py::arg("i"), py::arg("j"), py::arg("point"));
  m.def("multiplicity_at_origin",
        [](const std::vector<std::string>& generators, const std::vector<std::string>& names) {
          std::string text;
          for (const auto& g : generators) text += g + "\n";
          return multiplicity_at_origin(parse_ideal(text, names));
        },
        py::arg("generators"), py::arg("names"));
}
