#include "richmult/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "richmult/hilbert.hpp"

namespace richmult {

namespace {

void require_on(const PolyIdeal& ideal, const AffinePoint& m, const char* what) {
  if (ideal.is_unit() || !ideal.vanishes_at(m.coords()))
    throw Error(std::string("point does not lie on ") + what);
}

SamuelCheck samuel_check(const PolyIdeal& translated, const LocalData& local, const SamuelBudget& budget) {
  SamuelFit fit = fit_samuel_multiplicity(translated, local.dimension, budget);
  return {fit.fitted, fit.stable, fit.stable && fit.fitted == local.multiplicity};
}

}  // namespace

TripleContext prepare_triple(const GrassShape& shape, const CosetRep& w, const CosetRep& v, const CosetRep& tau) {
  if (!bruhat_leq(v, tau)) throw Error("invalid triple: need v <= tau, got v=" + to_string(v) + " tau=" + to_string(tau));
  if (!bruhat_leq(tau, w)) throw Error("invalid triple: need tau <= w, got tau=" + to_string(tau) + " w=" + to_string(w));
  Chart chart(shape, tau);
  TripleContext ctx{chart, w, v, schubert_ideal(chart, w), opposite_ideal(chart, v), richardson_ideal(chart, w, v), 0, 0, 0, false, {}};
  ctx.deg_zw = projective_degree(ctx.schubert);
  ctx.deg_zv = projective_degree(ctx.opposite);
  ctx.deg_zwv = projective_degree(ctx.richardson);
  ctx.cones_at_e_tau = is_cone_over_origin(ctx.schubert) && is_cone_over_origin(ctx.opposite) &&
                       is_cone_over_origin(ctx.richardson);
  ctx.schubert_at_e_tau = local_data_at_origin(ctx.schubert);
  return ctx;
}

MultiplicityReport analyze_point(const TripleContext& ctx, const AffinePoint& m, const AnalysisOptions& options) {
  const Chart& chart = ctx.chart;
  if (!in_cell(chart, m)) throw Error("point is not in the cell of tau");
  require_on(ctx.richardson, m, "the Richardson variety");

  MultiplicityReport r;
  r.family = "grassmannian";
  r.d = chart.shape().d();
  r.n = chart.shape().n();
  r.w = to_string(ctx.w);
  r.v = to_string(ctx.v);
  r.tau = to_string(chart.tau());
  for (const auto& idx : chart.indices()) r.point_keys.push_back(to_string(idx));
  r.point.assign(m.coords().begin(), m.coords().end());

  PolyIdeal yw = translate_to_origin(ctx.schubert, m);
  PolyIdeal yv = translate_to_origin(ctx.opposite, m);
  PolyIdeal ywv = translate_to_origin(ctx.richardson, m);
  LocalData lw = local_data_at_origin(yw);
  LocalData lv = local_data_at_origin(yv);
  LocalData lwv = local_data_at_origin(ywv);

  r.mu_w = lw.multiplicity;
  r.mu_v = lv.multiplicity;
  r.mu_wv_fast = lw.multiplicity * lv.multiplicity;
  r.mu_wv_oracle = lwv.multiplicity;
  r.agreement = r.mu_wv_fast == r.mu_wv_oracle;

  r.deg_zw = ctx.deg_zw;
  r.deg_zv = ctx.deg_zv;
  r.deg_zwv = ctx.deg_zwv;
  r.degree_identity = ctx.deg_zwv == ctx.deg_zw * ctx.deg_zv;

  r.cone_yw_over_m = is_cone_over_origin(yw);
  r.cone_yv_over_m = is_cone_over_origin(yv);
  r.cone_ywv_over_e_tau = ctx.cones_at_e_tau;
  r.schubert_translation_invariant = lw.multiplicity == ctx.schubert_at_e_tau.multiplicity;

  const int big = chart.shape().dimension();
  r.dim_w = lw.dimension;
  r.dim_v = lv.dimension;
  r.dim_wv = lwv.dimension;
  r.dimension_ok = lw.dimension == ctx.w.length() && lv.dimension == big - ctx.v.length() &&
                   lwv.dimension == ctx.w.length() - ctx.v.length();

  auto origin = chart.origin();
  r.corank_w = jacobian_corank(yw, origin.coords(), lw.dimension);
  r.corank_v = jacobian_corank(yv, origin.coords(), lv.dimension);
  r.corank_wv = jacobian_corank(ywv, origin.coords(), lwv.dimension);
  r.smooth_w = r.corank_w == 0;
  r.smooth_v = r.corank_v == 0;
  r.smooth_wv = r.corank_wv == 0;

  if (options.samuel_check) {
    r.samuel_w = samuel_check(yw, lw, options.samuel_budget);
    r.samuel_v = samuel_check(yv, lv, options.samuel_budget);
    r.samuel_wv = samuel_check(ywv, lwv, options.samuel_budget);
  }
  return r;
}

std::int64_t mult_schubert_at(const GrassShape& shape, const CosetRep& w, const CosetRep& tau, const AffinePoint& m) {
  if (!bruhat_leq(tau, w)) throw Error("tau is not below w: the cell misses X_w");
  Chart chart(shape, tau);
  if (!in_cell(chart, m)) throw Error("point is not in the cell of tau");
  PolyIdeal ideal = schubert_ideal(chart, w);
  require_on(ideal, m, "the Schubert variety");
  std::int64_t at_m = multiplicity_at_origin(translate_to_origin(ideal, m));
  std::int64_t at_fixed = multiplicity_at_origin(ideal);
  if (at_m != at_fixed) throw Error("multiplicity differs between a cell point and e_tau");
  return at_m;
}

std::int64_t mult_opposite_at(const GrassShape& shape, const CosetRep& v, const CosetRep& tau, const AffinePoint& m) {
  Chart chart(shape, tau);
  PolyIdeal ideal = opposite_ideal(chart, v);
  require_on(ideal, m, "the opposite Schubert variety");
  return multiplicity_at_origin(translate_to_origin(ideal, m));
}

std::int64_t mult_richardson_fast(const GrassShape& shape, const CosetRep& w, const CosetRep& v, const CosetRep& tau,
                                  const AffinePoint& m) {
  Chart chart(shape, tau);
  require_on(richardson_ideal(chart, w, v), m, "the Richardson variety");
  return mult_schubert_at(shape, w, tau, m) * mult_opposite_at(shape, v, tau, m);
}

std::int64_t mult_richardson_oracle(const GrassShape& shape, const CosetRep& w, const CosetRep& v,
                                    const CosetRep& tau, const AffinePoint& m) {
  Chart chart(shape, tau);
  PolyIdeal ideal = richardson_ideal(chart, w, v);
  require_on(ideal, m, "the Richardson variety");
  return multiplicity_at_origin(translate_to_origin(ideal, m));
}

DegreeCheck degree_product_check(const GrassShape& shape, const CosetRep& w, const CosetRep& v, const CosetRep& tau) {
  if (!bruhat_leq(v, tau) || !bruhat_leq(tau, w)) throw Error("degree check needs v <= tau <= w");
  Chart chart(shape, tau);
  DegreeCheck c;
  c.deg_zw = projective_degree(schubert_ideal(chart, w));
  c.deg_zv = projective_degree(opposite_ideal(chart, v));
  c.deg_zwv = projective_degree(richardson_ideal(chart, w, v));
  c.holds = c.deg_zwv == c.deg_zw * c.deg_zv;
  return c;
}

int jacobian_corank_at(const PolyIdeal& ideal, const AffinePoint& m) {
  if (ideal.is_unit() || !ideal.vanishes_at(m.coords())) throw Error("point does not lie on the variety");
  PolyIdeal translated = translate_to_origin(ideal, m);
  LocalData local = local_data_at_origin(translated);
  return jacobian_corank(ideal, m.coords(), local.dimension);
}

std::vector<AffinePoint> sample_points(const PolyIdeal& ideal, const Chart& chart, std::span<const Rational> grid,
                                       bool cell_only, std::size_t limit) {
  std::vector<AffinePoint> out;
  if (grid.empty() || limit == 0 || ideal.is_unit()) return out;
  const std::size_t n = chart.num_vars();
  std::vector<std::size_t> free_coords;
  for (std::size_t i = 0; i < n; ++i)
    if (!cell_only || !chart.indices()[i].positive()) free_coords.push_back(i);

  std::vector<std::size_t> digit(free_coords.size(), 0);
  AffinePoint x = chart.origin();
  for (std::size_t i : free_coords) x[i] = grid[0];
  for (;;) {
    if (ideal.vanishes_at(x.coords())) {
      out.push_back(x);
      if (out.size() >= limit) break;
    }
    // Odometer increment, last free coordinate fastest.
    std::size_t k = free_coords.size();
    while (k > 0) {
      --k;
      if (++digit[k] < grid.size()) {
        x[free_coords[k]] = grid[digit[k]];
        break;
      }
      digit[k] = 0;
      x[free_coords[k]] = grid[0];
      if (k == 0) return out;
    }
    if (free_coords.empty()) break;
  }
  return out;
}

std::vector<Triple> all_triples(const GrassShape& shape) {
  auto reps = all_coset_reps(shape);
  std::vector<Triple> out;
  for (const auto& w : reps)
    for (const auto& v : reps) {
      if (!bruhat_leq(v, w)) continue;
      for (const auto& tau : reps)
        if (bruhat_leq(v, tau) && bruhat_leq(tau, w)) out.push_back({w, v, tau});
    }
  return out;
}

std::size_t SweepResult::agreed() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const MultiplicityReport& r) { return r.agreement; }));
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& job) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

void sort_reports(std::vector<MultiplicityReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const MultiplicityReport& a, const MultiplicityReport& b) {
    return std::tie(a.family, a.d, a.n, a.w, a.v, a.tau, a.point) <
           std::tie(b.family, b.d, b.n, b.w, b.v, b.tau, b.point);
  });
}

SweepResult verify_theorem(const GrassShape& shape, const SweepConfig& config) {
  if (static_cast<std::size_t>(shape.dimension()) > config.max_vars)
    throw Error("shape exceeds the variable budget of " + std::to_string(config.max_vars));
  if (config.grid.size() > config.max_grid_values)
    throw Error("grid exceeds the budget of " + std::to_string(config.max_grid_values) + " values");

  std::vector<Triple> triples = config.triples.empty() ? all_triples(shape) : config.triples;
  std::vector<TripleContext> contexts;
  contexts.reserve(triples.size());
  for (const auto& t : triples) contexts.push_back(prepare_triple(shape, t.w, t.v, t.tau));

  struct Job {
    std::size_t context;
    AffinePoint point;
  };
  std::vector<Job> jobs;
  SweepResult result;
  for (std::size_t c = 0; c < contexts.size() && !result.truncated; ++c) {
    std::vector<AffinePoint> points;
    if (config.include_fixed_point) points.push_back(contexts[c].chart.origin());
    auto samples = sample_points(contexts[c].richardson, contexts[c].chart, config.grid, true,
                                 config.points_per_instance + 1);
    std::erase_if(samples, [](const AffinePoint& p) { return p.is_origin(); });
    if (samples.size() > config.points_per_instance) samples.resize(config.points_per_instance);
    points.insert(points.end(), samples.begin(), samples.end());
    for (auto& p : points) {
      if (jobs.size() >= config.max_instances) {
        result.truncated = true;
        break;
      }
      jobs.push_back({c, std::move(p)});
    }
  }

  result.reports.resize(jobs.size());
  parallel_for(jobs.size(), config.workers, [&](std::size_t i) {
    result.reports[i] = analyze_point(contexts[jobs[i].context], jobs[i].point, config.analysis);
  });
  sort_reports(result.reports);
  return result;
}

}  // namespace richmult
