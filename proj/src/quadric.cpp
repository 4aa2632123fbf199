#include "richmult/quadric.hpp"

#include <algorithm>

#include "richmult/local.hpp"

namespace richmult {

QuadricShape::QuadricShape(int n) : n_(n) {
  if (n < 1) throw Error("quadric shape needs n >= 1");
}

SchubertIndex::SchubertIndex(const QuadricShape& shape, int i) : i_(i) {
  if (i < 1 || i > shape.size()) throw Error("Schubert index out of range");
  if (i == shape.n() + 1) throw Error("Schubert index n+1 does not name a Schubert variety");
}

namespace {

void require_size(const QuadricShape& shape, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != shape.size()) throw Error("quadric point must have 2n+1 coordinates");
}

// 1-based coordinate access.
const Rational& coord(std::span<const Rational> x, int c) { return x[static_cast<std::size_t>(c - 1)]; }

bool zero_range(std::span<const Rational> x, int first, int last) {
  for (int c = first; c <= last; ++c)
    if (coord(x, c) != 0) return false;
  return true;
}

bool nonzero(std::span<const Rational> x) {
  return std::any_of(x.begin(), x.end(), [](const Rational& c) { return c != 0; });
}

// Q restricted to coordinates [lo, hi], coordinate c as variable c - 1.
Polynomial restricted_form(const QuadricShape& shape, int lo, int hi) {
  const int n = shape.n();
  auto in = [&](int c) { return lo <= c && c <= hi; };
  Polynomial q;
  if (in(n + 1)) q += pow(Polynomial::variable(static_cast<std::size_t>(n)), 2);
  for (int a = 1; a <= n; ++a) {
    int b = 2 * n + 2 - a;
    if (in(a) && in(b))
      q += Rational(2) * Polynomial::variable(static_cast<std::size_t>(a - 1)) *
           Polynomial::variable(static_cast<std::size_t>(b - 1));
  }
  return q;
}

// Odometer step, last digit fastest; false after the final combination.
bool advance(std::vector<std::size_t>& digit, std::size_t base) {
  for (std::size_t k = digit.size(); k-- > 0;) {
    if (++digit[k] < base) return true;
    digit[k] = 0;
  }
  return false;
}

}  // namespace

Rational q_eval(const QuadricShape& shape, std::span<const Rational> x) {
  require_size(shape, x);
  const int n = shape.n();
  Rational s = coord(x, n + 1) * coord(x, n + 1);
  for (int a = 1; a <= n; ++a) s += 2 * coord(x, a) * coord(x, 2 * n + 2 - a);
  return s;
}

bool schubert_member(const QuadricShape& shape, SchubertIndex i, std::span<const Rational> x) {
  require_size(shape, x);
  return nonzero(x) && zero_range(x, i.value() + 1, shape.size()) && q_eval(shape, x) == 0;
}

bool opposite_member(const QuadricShape& shape, SchubertIndex j, std::span<const Rational> x) {
  require_size(shape, x);
  return nonzero(x) && zero_range(x, 1, j.value() - 1) && q_eval(shape, x) == 0;
}

int mult_schubert_quadric(const QuadricShape& shape, SchubertIndex i, std::span<const Rational> x) {
  if (!schubert_member(shape, i, x)) throw Error("point does not lie on X_i");
  const int n = shape.n(), iv = i.value();
  if (iv < n + 1) return 1;
  return zero_range(x, 2 * n + 2 - iv, iv) ? 2 : 1;
}

int mult_opposite_quadric(const QuadricShape& shape, SchubertIndex j, std::span<const Rational> x) {
  if (!opposite_member(shape, j, x)) throw Error("point does not lie on X^j");
  const int n = shape.n(), jv = j.value();
  if (jv > n + 1) return 1;
  return zero_range(x, jv, 2 * n + 2 - jv) ? 2 : 1;
}

std::optional<int> singular_locus_index(const QuadricShape& shape, SchubertIndex i) {
  if (i.value() > shape.n() + 1 && i.value() < shape.size()) return shape.size() - i.value();
  return std::nullopt;
}

std::optional<int> opposite_singular_locus_index(const QuadricShape& shape, SchubertIndex j) {
  if (j.value() < shape.n() + 1 && j.value() > 1) return shape.size() + 2 - j.value();
  return std::nullopt;
}

RationalMatrix b_matrix(const QuadricShape& shape, SchubertIndex i, std::span<const Rational> x) {
  require_size(shape, x);
  const int n = shape.n(), iv = i.value(), dim = shape.size();
  if (coord(x, iv) != 1 || !zero_range(x, iv + 1, dim))
    throw Error("b_matrix needs x_i = 1 and x_{i+1} = ... = 0");
  if (q_eval(shape, x) != 0) throw Error("b_matrix needs a point of the quadric");
  const int partner = 2 * n + 2 - iv;
  RationalMatrix b(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  auto at = [&](int row, int col) -> Rational& {
    return b(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
  };
  for (int j = 1; j <= dim; ++j) {
    if (j == iv) {
      for (int r = 1; r <= dim; ++r) at(r, j) = coord(x, r);
    } else if (j <= partner) {
      at(j, j) = 1;  // in both cases: e_j for j <= 2n+2-i, j != i
    } else {
      at(j, j) = 1;
      at(partner, j) -= coord(x, 2 * n + 2 - j);
    }
  }
  return b;
}

BMatrixCheck check_b_matrix(const QuadricShape& shape, SchubertIndex i, std::span<const Rational> x,
                            const RationalMatrix& b) {
  const auto dim = static_cast<std::size_t>(shape.size());
  BMatrixCheck c;
  c.upper_triangular = true;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t col = 0; col < r; ++col)
      if (b(r, col) != 0) c.upper_triangular = false;
  RationalMatrix e(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) e(r, dim - 1 - r) = 1;
  c.preserves_form = b.transpose() * e * b == e;
  c.unit_determinant = b.determinant() == 1;
  c.maps_e_i_to_x = true;
  for (std::size_t r = 0; r < dim; ++r)
    if (b(r, static_cast<std::size_t>(i.value() - 1)) != x[r]) c.maps_e_i_to_x = false;
  return c;
}

PolyIdeal quadric_chart_ideal(const QuadricShape& shape, int lo, int hi, std::span<const Rational> x) {
  require_size(shape, x);
  if (lo < 1 || hi > shape.size() || lo > hi) throw Error("invalid coordinate range");
  if (!zero_range(x, 1, lo - 1) || !zero_range(x, hi + 1, shape.size())) throw Error("point outside coordinate range");
  int pivot = 0;
  for (int c = hi; c >= lo && pivot == 0; --c)
    if (coord(x, c) != 0) pivot = c;
  if (pivot == 0) throw Error("zero vector is not a projective point");

  Polynomial q = restricted_form(shape, lo, hi).specialize(static_cast<std::size_t>(pivot - 1), 1);
  std::vector<std::size_t> relabel(static_cast<std::size_t>(shape.size()), 0);
  std::vector<Rational> shift;
  std::size_t next = 0;
  for (int c = lo; c <= hi; ++c) {
    if (c == pivot) continue;
    relabel[static_cast<std::size_t>(c - 1)] = next++;
    shift.push_back(coord(x, c) / coord(x, pivot));
  }
  PolyIdeal ideal{next, {}, {}};
  if (!q.is_zero()) {
    Polynomial local = q.relabel(relabel).translate(shift);
    ideal.generators.push_back(local.normalized());
  }
  if (!ideal.vanishes_at(std::vector<Rational>(next, 0))) throw Error("point does not lie on the quadric");
  return ideal;
}

bool quadric_jacobian_singular(const QuadricShape& shape, int lo, int hi, std::span<const Rational> x) {
  require_size(shape, x);
  Polynomial q = restricted_form(shape, lo, hi);
  if (q.is_zero()) return false;  // a linear space
  for (int c = lo; c <= hi; ++c)
    if (q.partial_derivative(static_cast<std::size_t>(c - 1)).evaluate(x) != 0) return false;
  return true;
}

std::vector<QuadricPoint> quadric_grid_points(const QuadricShape& shape, int lo, int hi,
                                              std::span<const Rational> grid) {
  std::vector<QuadricPoint> out;
  if (grid.empty()) return out;
  // The last nonzero coordinate is fixed to 1: enumerate its position, then
  // grid values for the coordinates before it.
  for (int last = lo; last <= hi; ++last) {
    const int free = last - lo;
    std::vector<std::size_t> digit(static_cast<std::size_t>(free), 0);
    for (;;) {
      QuadricPoint x(static_cast<std::size_t>(shape.size()), 0);
      for (int k = 0; k < free; ++k) x[static_cast<std::size_t>(lo - 1 + k)] = grid[digit[static_cast<std::size_t>(k)]];
      x[static_cast<std::size_t>(last - 1)] = 1;
      if (q_eval(shape, x) == 0) out.push_back(std::move(x));
      if (!advance(digit, grid.size())) break;
    }
  }
  return out;
}

bool verify_disjoint_sing(const QuadricShape& shape, SchubertIndex i, SchubertIndex j,
                          std::span<const Rational> grid) {
  if (j.value() > i.value()) throw Error("verify_disjoint_sing needs j <= i");
  auto si = singular_locus_index(shape, i);
  auto sj = opposite_singular_locus_index(shape, j);
  // Sing X_i is supported on [1, 2n+1-i], Sing X^j on [2n+3-j, 2n+1].
  bool empty_by_index = !si || !sj || *sj > *si;
  bool empty_by_grid = true;
  for (const auto& x : quadric_grid_points(shape, j.value(), i.value(), grid)) {
    if (quadric_jacobian_singular(shape, 1, i.value(), x) &&
        quadric_jacobian_singular(shape, j.value(), shape.size(), x)) {
      empty_by_grid = false;
      break;
    }
  }
  return empty_by_index && empty_by_grid;
}

int richardson_mult_quadric(const QuadricShape& shape, SchubertIndex i, SchubertIndex j, std::span<const Rational> x) {
  if (j.value() > i.value()) throw Error("Richardson variety X_i^j needs j <= i");
  int mi = mult_schubert_quadric(shape, i, x);
  int mj = mult_opposite_quadric(shape, j, x);
  if (mi == 2 && mj == 2) throw Error("point singular on both X_i and X^j");
  return mi * mj;
}

MultiplicityReport quadric_report(const QuadricShape& shape, SchubertIndex i, SchubertIndex j,
                                  std::span<const Rational> x, const AnalysisOptions& options) {
  if (j.value() > i.value()) throw Error("Richardson variety X_i^j needs j <= i");
  MultiplicityReport r;
  r.family = "quadric";
  r.d = 0;
  r.n = shape.n();
  r.w = std::to_string(i.value());
  r.v = std::to_string(j.value());
  r.point.assign(x.begin(), x.end());

  r.mu_w = mult_schubert_quadric(shape, i, x);
  r.mu_v = mult_opposite_quadric(shape, j, x);
  r.mu_wv_fast = r.mu_w * r.mu_v;

  PolyIdeal yw = quadric_chart_ideal(shape, 1, i.value(), x);
  PolyIdeal yv = quadric_chart_ideal(shape, j.value(), shape.size(), x);
  PolyIdeal ywv = quadric_chart_ideal(shape, j.value(), i.value(), x);
  LocalData lw = local_data_at_origin(yw);
  LocalData lv = local_data_at_origin(yv);
  LocalData lwv = local_data_at_origin(ywv);
  r.mu_wv_oracle = lwv.multiplicity;
  r.agreement = r.mu_wv_fast == r.mu_wv_oracle && lw.multiplicity == r.mu_w && lv.multiplicity == r.mu_v;

  auto projective_dim = [&](int lo, int hi) {
    return restricted_form(shape, lo, hi).is_zero() ? hi - lo : hi - lo - 1;
  };
  r.dim_w = lw.dimension;
  r.dim_v = lv.dimension;
  r.dim_wv = lwv.dimension;
  r.dimension_ok = lw.dimension == projective_dim(1, i.value()) &&
                   lv.dimension == projective_dim(j.value(), shape.size()) &&
                   lwv.dimension == projective_dim(j.value(), i.value());

  std::vector<Rational> origin_w(yw.num_vars, 0), origin_v(yv.num_vars, 0), origin_wv(ywv.num_vars, 0);
  r.corank_w = jacobian_corank(yw, origin_w, lw.dimension);
  r.corank_v = jacobian_corank(yv, origin_v, lv.dimension);
  r.corank_wv = jacobian_corank(ywv, origin_wv, lwv.dimension);
  r.smooth_w = r.corank_w == 0;
  r.smooth_v = r.corank_v == 0;
  r.smooth_wv = r.corank_wv == 0;

  if (options.samuel_check) {
    auto check = [&](const PolyIdeal& ideal, const LocalData& local) {
      SamuelFit fit = fit_samuel_multiplicity(ideal, local.dimension, options.samuel_budget);
      return SamuelCheck{fit.fitted, fit.stable, fit.stable && fit.fitted == local.multiplicity};
    };
    r.samuel_w = check(yw, lw);
    r.samuel_v = check(yv, lv);
    r.samuel_wv = check(ywv, lwv);
  }
  return r;
}

SweepResult quadric_sweep(const QuadricShape& shape, std::span<const Rational> grid, std::size_t max_instances,
                          unsigned workers, const AnalysisOptions& options) {
  struct Job {
    int i, j;
    QuadricPoint x;
  };
  std::vector<Job> jobs;
  SweepResult result;
  for (int i = 1; i <= shape.size() && !result.truncated; ++i) {
    if (i == shape.n() + 1) continue;
    for (int j = 1; j <= i && !result.truncated; ++j) {
      if (j == shape.n() + 1) continue;
      for (auto& x : quadric_grid_points(shape, j, i, grid)) {
        if (jobs.size() >= max_instances) {
          result.truncated = true;
          break;
        }
        jobs.push_back({i, j, std::move(x)});
      }
    }
  }
  result.reports.resize(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t k) {
    const Job& job = jobs[k];
    result.reports[k] =
        quadric_report(shape, SchubertIndex(shape, job.i), SchubertIndex(shape, job.j), job.x, options);
  });
  sort_reports(result.reports);
  return result;
}

}  // namespace richmult
