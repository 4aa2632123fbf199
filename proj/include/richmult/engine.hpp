#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "richmult/chart.hpp"
#include "richmult/local.hpp"

namespace richmult {

/// Oracle cross-check of one multiplicity against the Hilbert-Samuel function.
struct SamuelCheck {
  std::int64_t fitted = 0;
  bool stable = false;
  bool ok = false;  ///< stable and equal to the tangent-cone multiplicity
};

/// Everything computed for one point on one Richardson variety.
///
/// For the quadric family the chart-specific fields (tau, degrees, cone flags)
/// are absent and `d` is zero.
struct MultiplicityReport {
  std::string family = "grassmannian";
  int d = 0;
  int n = 0;
  std::string w, v, tau;
  std::vector<std::string> point_keys;  ///< "q.p" per coordinate; empty for quadric
  std::vector<Rational> point;

  std::int64_t mu_w = 0, mu_v = 0, mu_wv_fast = 0, mu_wv_oracle = 0;
  std::optional<std::int64_t> deg_zw, deg_zv, deg_zwv;
  std::optional<bool> degree_identity;

  std::optional<bool> cone_yw_over_m, cone_yv_over_m, cone_ywv_over_e_tau;
  std::optional<bool> schubert_translation_invariant;

  int dim_w = 0, dim_v = 0, dim_wv = 0;
  bool dimension_ok = true;
  int corank_w = 0, corank_v = 0, corank_wv = 0;
  bool smooth_w = false, smooth_v = false, smooth_wv = false;

  std::optional<SamuelCheck> samuel_w, samuel_v, samuel_wv;

  bool agreement = false;
};

/// Precomputed chart data shared by every point of one (w, v, tau) triple.
struct TripleContext {
  Chart chart;
  CosetRep w, v;
  PolyIdeal schubert, opposite, richardson;
  std::int64_t deg_zw = 0, deg_zv = 0, deg_zwv = 0;
  bool cones_at_e_tau = false;
  LocalData schubert_at_e_tau;
};

struct AnalysisOptions {
  bool samuel_check = false;
  SamuelBudget samuel_budget{};
};

/// Checks v <= tau <= w and builds the three chart ideals and cone degrees.
TripleContext prepare_triple(const GrassShape& shape, const CosetRep& w, const CosetRep& v, const CosetRep& tau);

/// Full report for a point m of the cell C_tau lying on X_w^v.
MultiplicityReport analyze_point(const TripleContext& ctx, const AffinePoint& m, const AnalysisOptions& options = {});

std::int64_t mult_schubert_at(const GrassShape& shape, const CosetRep& w, const CosetRep& tau, const AffinePoint& m);
std::int64_t mult_opposite_at(const GrassShape& shape, const CosetRep& v, const CosetRep& tau, const AffinePoint& m);
/// Product of the Schubert and opposite Schubert multiplicities.
std::int64_t mult_richardson_fast(const GrassShape& shape, const CosetRep& w, const CosetRep& v, const CosetRep& tau,
                                  const AffinePoint& m);
/// Tangent-cone multiplicity of the Richardson ideal itself.
std::int64_t mult_richardson_oracle(const GrassShape& shape, const CosetRep& w, const CosetRep& v,
                                    const CosetRep& tau, const AffinePoint& m);

struct DegreeCheck {
  std::int64_t deg_zw = 0, deg_zv = 0, deg_zwv = 0;
  bool holds = false;
};

/// Projective degrees of the three cones at e_tau and whether they multiply.
DegreeCheck degree_product_check(const GrassShape& shape, const CosetRep& w, const CosetRep& v, const CosetRep& tau);

/// Jacobian corank at m, with the local dimension taken from the tangent cone.
int jacobian_corank_at(const PolyIdeal& ideal, const AffinePoint& m);

/// Grid points of the chart on which every generator vanishes, in odometer
/// order (first coordinate slowest). With cell_only, positive-root
/// coordinates are pinned to zero.
std::vector<AffinePoint> sample_points(const PolyIdeal& ideal, const Chart& chart, std::span<const Rational> grid,
                                       bool cell_only, std::size_t limit);

struct Triple {
  CosetRep w, v, tau;
};

/// All (w, v, tau) with v <= tau <= w, ordered lexicographically by (w, v, tau).
std::vector<Triple> all_triples(const GrassShape& shape);

struct SweepConfig {
  std::vector<Triple> triples;     ///< empty: every valid triple of the shape
  std::vector<Rational> grid;      ///< empty: fixed points only
  bool include_fixed_point = true;
  std::size_t points_per_instance = 200;
  std::size_t max_instances = 100000;
  std::size_t max_vars = 12;
  std::size_t max_grid_values = 5;
  unsigned workers = 0;            ///< 0: hardware concurrency
  AnalysisOptions analysis{};
};

struct SweepResult {
  std::vector<MultiplicityReport> reports;
  bool truncated = false;
  std::size_t checked() const { return reports.size(); }
  std::size_t agreed() const;
  std::size_t failed() const { return checked() - agreed(); }
};

/// Runs every configured (triple, point) instance and reports each one.
SweepResult verify_theorem(const GrassShape& shape, const SweepConfig& config);

/// Canonical report order: family, shape, w, v, tau, point.
void sort_reports(std::vector<MultiplicityReport>& reports);

/// Runs `count` independent jobs on a pool of worker threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& job);

}  // namespace richmult
