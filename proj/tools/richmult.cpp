// richmult: multiplicities on Schubert, opposite Schubert and Richardson
// varieties from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "richmult/chart.hpp"
#include "richmult/engine.hpp"
#include "richmult/quadric.hpp"
#include "richmult/report.hpp"

namespace {

using namespace richmult;

constexpr int kExitDisagree = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
  std::string family = "grassmannian";
  int d = 0;
  int n = 0;
  std::string w, v, tau;
  std::string point;  // JSON file path or inline JSON; empty means the fixed point
  std::string grid;
  std::size_t limit = 100000;
  std::size_t max_vars = 12;
  std::size_t per_instance = 200;
  unsigned workers = 0;
  std::string format = "json";
  std::string out;
  bool samuel = false;
};

std::string read_point_text(const std::string& source) {
  auto first = source.find_first_not_of(" \t\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
  std::ifstream in(source);
  if (!in) throw Error("cannot read point file " + source);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const RunConfig& cfg, std::span<const MultiplicityReport> reports) {
  if (cfg.out.empty()) return;
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw Error("cannot write " + cfg.out);
  out << format_reports(reports, parse_report_format(cfg.format));
}

GrassShape grass_shape(const RunConfig& cfg) {
  if (cfg.family != "grassmannian") throw Error("this subcommand needs --family grassmannian");
  return GrassShape(cfg.d, cfg.n);
}

struct ResolvedPoint {
  CosetRep tau;
  AffinePoint point;
  bool given = false;
};

// Resolves tau and the chart point; a matrix point determines its own cell.
ResolvedPoint resolve_point(const RunConfig& cfg, const GrassShape& shape) {
  if (!cfg.point.empty()) {
    std::string text = read_point_text(cfg.point);
    if (point_json_is_matrix(text)) {
      RationalMatrix m = parse_point_matrix(text);
      CosetRep cell = cell_of_point(shape, m);
      if (!cfg.tau.empty() && parse_coset_rep(cfg.tau, shape) != cell)
        throw Error("matrix point lies in the cell of " + to_string(cell) + ", not tau=" + cfg.tau);
      Chart chart(shape, cell);
      return {cell, chart_coordinates(chart, m), true};
    }
    if (cfg.tau.empty()) throw Error("--tau is required with a coordinate-map point");
    CosetRep tau = parse_coset_rep(cfg.tau, shape);
    return {tau, parse_point_map(text, Chart(shape, tau)), true};
  }
  if (cfg.tau.empty()) throw Error("--tau is required");
  CosetRep tau = parse_coset_rep(cfg.tau, shape);
  return {tau, Chart(shape, tau).origin(), false};
}

void print_section(const std::string& title, const PolyIdeal& ideal, std::span<const std::string> names) {
  std::size_t count = ideal.generators.size();
  std::cout << title << ": " << count << (count == 1 ? " generator\n" : " generators\n") << format_ideal(ideal, names);
}

int cmd_equations(const RunConfig& cfg) {
  GrassShape shape = grass_shape(cfg);
  CosetRep w = parse_coset_rep(cfg.w, shape);
  CosetRep v = parse_coset_rep(cfg.v, shape);
  ResolvedPoint rp = resolve_point(cfg, shape);
  TripleContext ctx = prepare_triple(shape, w, v, rp.tau);
  const Chart& chart = ctx.chart;
  auto names = chart.variable_names("x");
  std::cout << "G(" << shape.d() << "," << shape.n() << ") tau=" << to_string(rp.tau) << " w=" << to_string(w)
            << " v=" << to_string(v) << "\n";
  std::cout << "indices:";
  for (const auto& idx : chart.indices()) std::cout << ' ' << to_string(idx);
  std::cout << "\n";
  print_section("schubert", ctx.schubert, names);
  print_section("opposite", ctx.opposite, names);
  print_section("richardson", ctx.richardson, names);
  if (rp.given) {
    if (!ctx.richardson.vanishes_at(rp.point.coords())) throw Error("point does not lie on the Richardson variety");
    auto ynames = chart.variable_names("y");
    std::cout << "point: " << point_to_json(chart, rp.point) << "\n";
    print_section("schubert at point", translate_to_origin(ctx.schubert, rp.point), ynames);
    print_section("opposite at point", translate_to_origin(ctx.opposite, rp.point), ynames);
    print_section("richardson at point", translate_to_origin(ctx.richardson, rp.point), ynames);
  }
  return 0;
}

int finish(const RunConfig& cfg, const SweepResult& result) {
  write_output(cfg, result.reports);
  if (cfg.format == "text" && cfg.out.empty()) std::cout << reports_to_text(result.reports);
  std::cout << summary_line(result) << "\n";
  return result.failed() == 0 ? 0 : kExitDisagree;
}

AnalysisOptions analysis(const RunConfig& cfg) {
  AnalysisOptions a;
  a.samuel_check = cfg.samuel;
  return a;
}

int cmd_mult(const RunConfig& cfg) {
  GrassShape shape = grass_shape(cfg);
  CosetRep w = parse_coset_rep(cfg.w, shape);
  CosetRep v = parse_coset_rep(cfg.v, shape);
  ResolvedPoint rp = resolve_point(cfg, shape);
  TripleContext ctx = prepare_triple(shape, w, v, rp.tau);
  SweepResult result;
  result.reports.push_back(analyze_point(ctx, rp.point, analysis(cfg)));
  std::cout << reports_to_text(result.reports);
  write_output(cfg, result.reports);
  std::cout << summary_line(result) << "\n";
  return result.failed() == 0 ? 0 : kExitDisagree;
}

int cmd_sweep(const RunConfig& cfg) {
  std::vector<Rational> grid = cfg.grid.empty() ? std::vector<Rational>{} : parse_grid(cfg.grid);
  if (cfg.family == "quadric") {
    QuadricShape shape(cfg.n);
    return finish(cfg, quadric_sweep(shape, grid, cfg.limit, cfg.workers, analysis(cfg)));
  }
  GrassShape shape = grass_shape(cfg);
  SweepConfig sc;
  sc.grid = grid;
  sc.max_instances = cfg.limit;
  sc.max_vars = cfg.max_vars;
  sc.points_per_instance = cfg.per_instance;
  sc.workers = cfg.workers;
  sc.analysis = analysis(cfg);
  if (!cfg.w.empty() || !cfg.v.empty() || !cfg.tau.empty()) {
    // Any of --w, --v, --tau restricts the sweep to matching triples.
    auto match = [&](const std::string& want, const CosetRep& c) {
      return want.empty() || parse_coset_rep(want, shape) == c;
    };
    for (auto& t : all_triples(shape))
      if (match(cfg.w, t.w) && match(cfg.v, t.v) && match(cfg.tau, t.tau)) sc.triples.push_back(std::move(t));
    if (sc.triples.empty()) return finish(cfg, SweepResult{});
  }
  return finish(cfg, verify_theorem(shape, sc));
}

int cmd_quadric(const RunConfig& cfg) {
  QuadricShape shape(cfg.n);
  if (cfg.w.empty() || cfg.v.empty()) throw Error("--w (index i) and --v (index j) are required");
  SchubertIndex i(shape, std::stoi(cfg.w));
  SchubertIndex j(shape, std::stoi(cfg.v));
  if (cfg.point.empty()) throw Error("--point is required");
  QuadricPoint x = parse_quadric_point(read_point_text(cfg.point));
  SweepResult result;
  result.reports.push_back(quadric_report(shape, i, j, x, analysis(cfg)));
  std::cout << reports_to_text(result.reports);
  write_output(cfg, result.reports);
  std::cout << summary_line(result) << "\n";
  return result.failed() == 0 ? 0 : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multiplicities on Schubert and Richardson varieties"};
  app.set_config("--config", "", "TOML or INI file with option values");
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "grassmannian or quadric")
        ->check(CLI::IsMember({"grassmannian", "quadric"}));
    sub->add_option("--d", cfg.d, "Subspace dimension d of G(d,n)");
    sub->add_option("--n", cfg.n, "Ambient dimension n of G(d,n), or n of the quadric in P^{2n}");
    sub->add_option("--w", cfg.w, "Schubert index w, e.g. 3,5,6 (quadric: i)");
    sub->add_option("--v", cfg.v, "Opposite Schubert index v (quadric: j)");
    sub->add_option("--tau", cfg.tau, "Cell of the chart");
    sub->add_option("--point", cfg.point, "JSON point: a file path or inline JSON");
    sub->add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
    sub->add_option("--format", cfg.format, "Output file format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "Write machine-readable reports here");
    sub->add_flag("--samuel", cfg.samuel, "Also cross-check with the Hilbert-Samuel oracle");
  };

  auto* equations = app.add_subcommand("equations", "Print chart equations of the three varieties");
  add_common(equations);
  auto* mult = app.add_subcommand("mult", "Multiplicity of one point on X_w^v");
  add_common(mult);
  auto* sweep = app.add_subcommand("sweep", "Check the product formula over many instances");
  add_common(sweep);
  sweep->add_option("--grid", cfg.grid, "Comma-separated distinct rational grid values");
  sweep->add_option("--limit", cfg.limit, "Maximum number of instances")->check(CLI::PositiveNumber);
  sweep->add_option("--max-vars", cfg.max_vars, "Maximum chart variables")->check(CLI::PositiveNumber);
  sweep->add_option("--per-instance", cfg.per_instance, "Maximum grid points per triple")->check(CLI::PositiveNumber);
  auto* quadric = app.add_subcommand("quadric", "Multiplicity of one point on a quadric Richardson variety");
  add_common(quadric);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*equations) return cmd_equations(cfg);
    if (*mult) return cmd_mult(cfg);
    if (*sweep) return cmd_sweep(cfg);
    if (*quadric) {
      cfg.family = "quadric";
      return cmd_quadric(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
