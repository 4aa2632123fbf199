// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "richmult/engine.hpp"
#include "richmult/groebner.hpp"
#include "richmult/quadric.hpp"
#include "richmult/report.hpp"

using namespace richmult;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::string label(const MultiplicityReport& r) {
  return "G(" + std::to_string(r.d) + "," + std::to_string(r.n) + ") w=" + r.w + " v=" + r.v + " tau=" + r.tau;
}

struct Instance {
  int d, n;
  std::vector<int> w, v, tau;
};

// Selected from full grid scans for the widest spread of multiplicities off
// the fixed point (mu up to 3, 2 on every point, and 2/5/6 on strata).
const std::vector<Instance> kInstances{
    {2, 5, {4, 5}, {1, 4}, {4, 5}},
    {2, 5, {3, 5}, {1, 2}, {2, 3}},
    {3, 6, {3, 5, 6}, {1, 3, 5}, {3, 5, 6}},
    {3, 6, {4, 5, 6}, {1, 3, 5}, {4, 5, 6}},
    {3, 6, {4, 5, 6}, {1, 4, 5}, {4, 5, 6}},
};

const std::vector<Rational> kGrid{0, 1, -1, 2, -2};

AnalysisOptions samuel_on() {
  AnalysisOptions o;
  o.samuel_check = true;
  return o;
}

struct ExampleData {
  GrassShape shape{3, 7};
  CosetRep w{shape, {3, 5, 6}}, v{shape, {1, 2, 5}}, tau{shape, {2, 5, 6}};
};

AffinePoint example_m(const Chart& chart) {
  return chart.point(std::vector<std::pair<RootIndex, Rational>>{{{1, 2}, 1}, {{1, 6}, 1}, {{3, 6}, -1}});
}

// Shared state across criteria: the sweeps are run once.
std::vector<MultiplicityReport> fixed_reports;  // criterion 2
std::vector<MultiplicityReport> grid_reports;   // criterion 3
std::vector<MultiplicityReport> quadric_reports;

Outcome criterion_equations() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  ExampleData ex;
  TripleContext ctx = prepare_triple(ex.shape, ex.w, ex.v, ex.tau);
  auto x = ctx.chart.variable_names("x");
  auto y = ctx.chart.variable_names("y");
  AffinePoint m = example_m(ctx.chart);

  // Written as displayed, expanded by hand, with y_16 = x_16 - 1, y_36 = x_36 + 1.
  PolyIdeal sch = parse_ideal("x_7_2\nx_7_5\nx_7_6\nx_4_2\n", x);
  PolyIdeal opp = parse_ideal(
      "x_1_5*x_3_6 - x_3_5*x_1_6\n"
      "x_1_5*x_4_6 - x_4_5*x_1_6\n"
      "x_3_5*x_4_6 - x_4_5*x_3_6\n",
      x);
  PolyIdeal ysch = parse_ideal("y_7_2\ny_7_5\ny_7_6\ny_4_2\n", y);
  PolyIdeal yopp = parse_ideal(
      "y_1_5*y_3_6 - y_1_5 - y_3_5*y_1_6 - y_3_5\n"
      "y_1_5*y_4_6 - y_4_5*y_1_6 - y_4_5\n"
      "y_3_5*y_4_6 - y_4_5*y_3_6 + y_4_5\n",
      y);

  if (ctx.schubert.generators.size() != 4) o.fail("Schubert ideal does not have 4 generators");
  if (ctx.opposite.generators.size() != 3) o.fail("opposite ideal does not have 3 generators");
  for (const auto& g : ctx.schubert.generators)
    if (g.total_degree() != 1) o.fail("non-linear Schubert generator");
  for (const auto& g : ctx.opposite.generators)
    if (g.total_degree() != 2) o.fail("non-quadratic opposite generator");
  if (format_ideal(ctx.schubert, x) != format_ideal(sch, x)) o.fail("Schubert generators differ");
  if (format_ideal(ctx.opposite, x) != format_ideal(opp, x)) o.fail("opposite generators differ");
  if (format_ideal(translate_to_origin(ctx.schubert, m), y) != format_ideal(ysch, y))
    o.fail("translated Schubert generators differ");
  if (format_ideal(translate_to_origin(ctx.opposite, m), y) != format_ideal(yopp, y))
    o.fail("translated opposite generators differ");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  return o;
}

Outcome criterion_fixed_points() {
  Outcome o;
  for (int n : {4, 5}) {
    GrassShape s(2, n);
    SweepConfig cfg;
    cfg.analysis = samuel_on();
    SweepResult r = verify_theorem(s, cfg);
    if (r.truncated) o.fail("sweep truncated");
    for (auto& rep : r.reports) {
      if (rep.mu_wv_oracle != rep.mu_w * rep.mu_v) o.fail(label(rep) + ": oracle != mu_w * mu_v");
      fixed_reports.push_back(std::move(rep));
    }
  }
  if (fixed_reports.size() != 50 + 175) o.fail("expected 225 fixed-point instances");
  o.detail = o.pass ? std::to_string(fixed_reports.size()) + " instances" : o.detail;
  return o;
}

Outcome criterion_grid_points() {
  Outcome o;
  ExampleData ex;
  TripleContext ctx = prepare_triple(ex.shape, ex.w, ex.v, ex.tau);
  grid_reports.push_back(analyze_point(ctx, example_m(ctx.chart), samuel_on()));

  SweepConfig cfg;
  cfg.grid = kGrid;
  cfg.analysis = samuel_on();
  SweepResult g24 = verify_theorem(GrassShape(2, 4), cfg);
  if (g24.truncated) o.fail("G(2,4) sweep truncated");
  for (auto& rep : g24.reports) grid_reports.push_back(std::move(rep));

  for (const auto& in : kInstances) {
    GrassShape s(in.d, in.n);
    SweepConfig c = cfg;
    c.triples = {{CosetRep(s, in.w), CosetRep(s, in.v), CosetRep(s, in.tau)}};
    SweepResult r = verify_theorem(s, c);
    for (auto& rep : r.reports) grid_reports.push_back(std::move(rep));
  }

  std::size_t off_fixed_singular = 0, dim_flags = 0;
  for (const auto& rep : grid_reports) {
    if (rep.mu_wv_fast != rep.mu_wv_oracle) o.fail(label(rep) + ": fast != oracle");
    bool origin = std::all_of(rep.point.begin(), rep.point.end(), [](const Rational& c) { return c == 0; });
    if (!origin && rep.mu_wv_oracle > 1) ++off_fixed_singular;
    if (!rep.dimension_ok) ++dim_flags;
  }
  if (off_fixed_singular == 0) o.fail("no singular non-fixed point was sampled");
  if (dim_flags != 0) o.fail(std::to_string(dim_flags) + " reports with dimension discrepancies");
  if (o.pass)
    o.detail = std::to_string(grid_reports.size()) + " points, " + std::to_string(off_fixed_singular) +
               " singular off the fixed point";
  return o;
}

Outcome criterion_degrees() {
  Outcome o;
  for (const auto& rep : fixed_reports) {
    if (!rep.deg_zw || !rep.deg_zv || !rep.deg_zwv) {
      o.fail(label(rep) + ": missing degree");
      continue;
    }
    if (*rep.deg_zwv != *rep.deg_zw * *rep.deg_zv) o.fail(label(rep) + ": deg Z_w^v != deg Z_w * deg Z^v");
  }
  return o;
}

Outcome criterion_cones() {
  Outcome o;
  for (const auto* set : {&fixed_reports, &grid_reports})
    for (const auto& rep : *set) {
      if (rep.cone_ywv_over_e_tau != true) o.fail(label(rep) + ": ideals not cones over e_tau");
      if (rep.cone_yw_over_m != true) o.fail(label(rep) + ": Y_w not a cone over the sampled point");
    }
  ExampleData ex;
  TripleContext ctx = prepare_triple(ex.shape, ex.w, ex.v, ex.tau);
  for (const auto* I : {&ctx.schubert, &ctx.opposite, &ctx.richardson})
    if (!is_cone_over_origin(*I)) o.fail("example ideal not a cone over e_tau");
  MultiplicityReport r = analyze_point(ctx, example_m(ctx.chart));
  if (r.cone_yv_over_m != false) o.fail("example Y^v reported as a cone over m");
  return o;
}

Outcome criterion_smoothness() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    SweepResult r = quadric_sweep(QuadricShape(n), std::vector<Rational>{-1, 0, 1}, 100000, 0);
    for (auto& rep : r.reports) quadric_reports.push_back(std::move(rep));
  }
  std::size_t n = 0;
  for (const auto* set : {&fixed_reports, &grid_reports, &quadric_reports})
    for (const auto& rep : *set) {
      bool a = rep.mu_wv_oracle == 1;
      bool b = rep.corank_wv == 0;
      bool c = rep.corank_w == 0 && rep.corank_v == 0;
      if (!rep.agreement) o.fail(label(rep) + ": report disagrees");
      if (a != b || b != c) o.fail(label(rep) + ": smoothness criteria disagree");
      ++n;
    }
  if (o.pass) o.detail = std::to_string(n) + " reports";
  return o;
}

// x_i = 1, later coordinates zero, Q(x) = 0, earlier coordinates random.
QuadricPoint random_cell_point(const QuadricShape& s, int i, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  QuadricPoint x(static_cast<std::size_t>(s.size()), 0);
  for (int c = 1; c < i; ++c) x[static_cast<std::size_t>(c - 1)] = Rational(num(rng), den(rng));
  x[static_cast<std::size_t>(i - 1)] = 1;
  if (i > s.n() + 1) {
    auto p = static_cast<std::size_t>(2 * s.n() + 1 - i);
    x[p] = 0;
    x[p] = -q_eval(s, x) / 2;
  }
  for (auto& c : x) c.canonicalize();
  return x;
}

Outcome criterion_quadric() {
  Outcome o;
  const std::vector<Rational> grid{-1, 0, 1};
  std::mt19937 rng(20261016);
  std::size_t points = 0;
  for (int n : {2, 3, 4}) {
    QuadricShape s(n);
    std::string tag = "n=" + std::to_string(n);
    for (int iv = 1; iv <= s.size(); ++iv) {
      if (iv == n + 1) continue;
      SchubertIndex i(s, iv);
      auto sing = singular_locus_index(s, i);
      for (const auto& x : quadric_grid_points(s, 1, iv, grid)) {
        int mu = mult_schubert_quadric(s, i, x);
        if (multiplicity_at_origin(quadric_chart_ideal(s, 1, iv, x)) != mu)
          o.fail(tag + " X_" + std::to_string(iv) + ": closed form != oracle");
        bool jac = quadric_jacobian_singular(s, 1, iv, x);
        bool in_sing = sing && schubert_member(s, SchubertIndex(s, *sing), x);
        if (jac != in_sing) o.fail(tag + " X_" + std::to_string(iv) + ": singular locus != Jacobian");
        ++points;
      }
      auto osing = opposite_singular_locus_index(s, i);
      for (const auto& x : quadric_grid_points(s, iv, s.size(), grid)) {
        int mu = mult_opposite_quadric(s, i, x);
        if (multiplicity_at_origin(quadric_chart_ideal(s, iv, s.size(), x)) != mu)
          o.fail(tag + " X^" + std::to_string(iv) + ": closed form != oracle");
        bool jac = quadric_jacobian_singular(s, iv, s.size(), x);
        bool in_sing = osing && opposite_member(s, SchubertIndex(s, *osing), x);
        if (jac != in_sing) o.fail(tag + " X^" + std::to_string(iv) + ": singular locus != Jacobian");
        ++points;
      }
      for (int jv = 1; jv <= iv; ++jv) {
        if (jv == n + 1) continue;
        if (!verify_disjoint_sing(s, i, SchubertIndex(s, jv), grid))
          o.fail(tag + " singular loci meet for (" + std::to_string(iv) + "," + std::to_string(jv) + ")");
      }
      for (int trial = 0; trial < 100; ++trial) {
        QuadricPoint x = random_cell_point(s, iv, rng);
        if (q_eval(s, x) != 0) {
          o.fail(tag + ": sampled point not on Q");
          continue;
        }
        if (!check_b_matrix(s, i, x, b_matrix(s, i, x)).all())
          o.fail(tag + " i=" + std::to_string(iv) + ": b matrix postcondition");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " grid points";
  return o;
}

Outcome criterion_kernel() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto* set : {&fixed_reports, &grid_reports})
    for (const auto& rep : *set)
      for (const auto* sc : {&rep.samuel_w, &rep.samuel_v, &rep.samuel_wv}) {
        if (!sc->has_value() || !(*sc)->ok) o.fail(label(rep) + ": Samuel fit does not match");
        ++checks;
      }

  auto idempotent = [&](const PolyIdeal& I) {
    if (I.is_unit()) return;
    auto again = groebner_basis(I.generators, I.order);
    if (canonical_generators(again) != I.generators) o.fail("Groebner basis not idempotent");
    ++checks;
  };
  for (int n : {4, 5}) {
    GrassShape s(2, n);
    for (const auto& t : all_triples(s)) {
      TripleContext ctx = prepare_triple(s, t.w, t.v, t.tau);
      for (const auto* I : {&ctx.schubert, &ctx.opposite, &ctx.richardson}) idempotent(*I);
    }
  }
  for (const auto& in : kInstances) {
    GrassShape s(in.d, in.n);
    TripleContext ctx = prepare_triple(s, CosetRep(s, in.w), CosetRep(s, in.v), CosetRep(s, in.tau));
    for (const auto* I : {&ctx.schubert, &ctx.opposite, &ctx.richardson}) idempotent(*I);
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks";
  return o;
}

}  // namespace

int main() {
  run(1, "example chart equations", criterion_equations);
  run(2, "multiplicity product at fixed points of G(2,4), G(2,5)", criterion_fixed_points);
  run(3, "multiplicity product at grid points", criterion_grid_points);
  run(4, "degree identity", criterion_degrees);
  run(5, "cone properties", criterion_cones);
  run(6, "smoothness equivalence", criterion_smoothness);
  run(7, "odd quadric", criterion_quadric);
  run(8, "kernel self-consistency", criterion_kernel);
  return failures == 0 ? 0 : 1;
}
