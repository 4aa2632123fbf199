#include "richmult/chart.hpp"

#include <algorithm>
#include <numeric>

#include "richmult/groebner.hpp"
#include "richmult/local.hpp"

namespace richmult {

bool AffinePoint::is_origin() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

Chart::Chart(GrassShape shape, CosetRep tau)
    : shape_(shape), tau_(std::move(tau)), indices_(chart_index_set(shape_, tau_)) {
  if (indices_.size() > kMaxVars - 1) throw Error("chart has too many coordinates");
}

std::size_t Chart::var_index(const RootIndex& r) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), r);
  if (it == indices_.end() || !(*it == r)) throw Error("index " + to_string(r) + " is not a chart coordinate");
  return static_cast<std::size_t>(it - indices_.begin());
}

ChartEntry Chart::entry(int row, int slot) const {
  int pivot = tau_[static_cast<std::size_t>(slot)];
  if (tau_.contains(row)) return {row == pivot ? EntryKind::One : EntryKind::Zero, 0};
  return {EntryKind::Variable, var_index({row, pivot})};
}

Polynomial Chart::entry_polynomial(int row, int slot) const {
  ChartEntry e = entry(row, slot);
  switch (e.kind) {
    case EntryKind::Zero:
      return {};
    case EntryKind::One:
      return Polynomial(1);
    case EntryKind::Variable:
      return Polynomial::variable(e.var);
  }
  return {};
}

std::vector<std::string> Chart::variable_names(std::string_view prefix) const {
  std::vector<std::string> names;
  names.reserve(indices_.size());
  for (const auto& r : indices_)
    names.push_back(std::string(prefix) + "_" + std::to_string(r.q) + "_" + std::to_string(r.p));
  return names;
}

RationalMatrix Chart::matrix_at(const AffinePoint& point) const {
  if (point.size() != num_vars()) throw Error("point does not belong to this chart");
  RationalMatrix m(static_cast<std::size_t>(shape_.n()), static_cast<std::size_t>(shape_.d()));
  for (int row = 1; row <= shape_.n(); ++row)
    for (int slot = 0; slot < shape_.d(); ++slot) {
      ChartEntry e = entry(row, slot);
      auto& cell = m(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(slot));
      if (e.kind == EntryKind::One) cell = 1;
      else if (e.kind == EntryKind::Variable) cell = point[e.var];
    }
  return m;
}

AffinePoint Chart::point(std::span<const std::pair<RootIndex, Rational>> coords) const {
  AffinePoint p = origin();
  for (const auto& [r, v] : coords) p[var_index(r)] = v;
  return p;
}

CosetRep cell_of_point(const GrassShape& shape, const RationalMatrix& columns) {
  const auto n = static_cast<std::size_t>(shape.n());
  const auto d = static_cast<std::size_t>(shape.d());
  if (columns.rows() != n || columns.cols() != d) throw Error("point matrix must be n x d");
  if (columns.rank() != d) throw Error("point matrix is rank deficient");
  std::vector<int> tau;
  std::size_t prev = 0;  // dim(V cap E_0)
  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t dim = d - columns.row_range(j, n).rank();
    if (dim > prev) tau.push_back(static_cast<int>(j));
    prev = dim;
  }
  return {shape, tau};
}

AffinePoint chart_coordinates(const Chart& chart, const RationalMatrix& columns) {
  const auto& tau = chart.tau();
  std::vector<std::size_t> pivot_rows, all_cols(static_cast<std::size_t>(chart.shape().d()));
  for (int p : tau.entries()) pivot_rows.push_back(static_cast<std::size_t>(p - 1));
  std::iota(all_cols.begin(), all_cols.end(), 0);
  RationalMatrix pivot_block = columns.submatrix(pivot_rows, all_cols);
  if (pivot_block.determinant() == 0) throw Error("point does not lie in the chart around tau");
  RationalMatrix normalized = columns * pivot_block.inverse();
  AffinePoint x = chart.origin();
  for (std::size_t i = 0; i < chart.num_vars(); ++i) {
    const RootIndex& r = chart.indices()[i];
    auto slot = static_cast<std::size_t>(std::find(tau.entries().begin(), tau.entries().end(), r.p) -
                                         tau.entries().begin());
    x[i] = normalized(static_cast<std::size_t>(r.q - 1), slot);
  }
  return x;
}

bool in_cell(const Chart& chart, const AffinePoint& x) {
  for (std::size_t i = 0; i < chart.num_vars(); ++i)
    if (chart.indices()[i].positive() && x[i] != 0) return false;
  return true;
}

namespace {

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m[0][0];
  Polynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(std::move(minor));
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

void combinations(int n, int k, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < n; ++i) {
    current.push_back(i);
    combinations(n, k, i + 1, current, out);
    current.pop_back();
  }
}

// All size-`size` minors of the chart rows listed (1-based).
void append_minors(const Chart& chart, const std::vector<int>& rows, int size, std::vector<Polynomial>& out) {
  const int d = chart.shape().d();
  if (size < 1 || size > static_cast<int>(rows.size()) || size > d) return;
  std::vector<std::vector<int>> row_sets, col_sets;
  std::vector<int> scratch;
  combinations(static_cast<int>(rows.size()), size, 0, scratch, row_sets);
  combinations(d, size, 0, scratch, col_sets);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      std::vector<std::vector<Polynomial>> m;
      for (int r : rs) {
        std::vector<Polynomial> row;
        for (int c : cs) row.push_back(chart.entry_polynomial(rows[static_cast<std::size_t>(r)], c));
        m.push_back(std::move(row));
      }
      Polynomial det = determinant(std::move(m));
      if (!det.is_zero()) out.push_back(std::move(det));
    }
}

}  // namespace

std::vector<Polynomial> schubert_minors(const Chart& chart, const CosetRep& w) {
  const int n = chart.shape().n(), d = chart.shape().d();
  std::vector<Polynomial> out;
  // dim(V cap E_j) >= #{w_k <= j}, i.e. rank(rows j+1..n) <= d - #{w_k <= j};
  // only the last position of each block of consecutive entries is needed.
  for (int j : w.entries()) {
    if (j == n || w.contains(j + 1)) continue;
    int bound = d - w.count_at_most(j);
    std::vector<int> rows(static_cast<std::size_t>(n - j));
    std::iota(rows.begin(), rows.end(), j + 1);
    append_minors(chart, rows, bound + 1, out);
  }
  return out;
}

std::vector<Polynomial> opposite_minors(const Chart& chart, const CosetRep& v) {
  const int d = chart.shape().d();
  std::vector<Polynomial> out;
  // dim(V cap F_j) >= #{v_k >= j}, i.e. rank(rows 1..j-1) <= d - #{v_k >= j}.
  for (int j : v.entries()) {
    if (j == 1 || v.contains(j - 1)) continue;
    int bound = d - v.count_at_least(j);
    std::vector<int> rows(static_cast<std::size_t>(j - 1));
    std::iota(rows.begin(), rows.end(), 1);
    append_minors(chart, rows, bound + 1, out);
  }
  return out;
}

PolyIdeal schubert_ideal(const Chart& chart, const CosetRep& w) {
  if (!bruhat_leq(chart.tau(), w)) return PolyIdeal::unit(chart.num_vars());
  return {chart.num_vars(), interreduce(schubert_minors(chart, w)), {}};
}

PolyIdeal opposite_ideal(const Chart& chart, const CosetRep& v) {
  if (!bruhat_leq(v, chart.tau())) return PolyIdeal::unit(chart.num_vars());
  return {chart.num_vars(), interreduce(opposite_minors(chart, v)), {}};
}

PolyIdeal richardson_ideal(const Chart& chart, const CosetRep& w, const CosetRep& v) {
  if (!bruhat_leq(v, chart.tau()) || !bruhat_leq(chart.tau(), w)) return PolyIdeal::unit(chart.num_vars());
  auto gens = schubert_ideal(chart, w).generators;
  auto opp = opposite_ideal(chart, v).generators;
  gens.insert(gens.end(), opp.begin(), opp.end());
  return {chart.num_vars(), canonical_generators(std::move(gens)), {}};
}

PolyIdeal translate_to_origin(const PolyIdeal& ideal, const AffinePoint& m) {
  if (m.size() != ideal.num_vars) throw Error("translation point does not match the ideal's ring");
  if (ideal.is_unit()) return ideal;
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) gens.push_back(g.translate(m.coords()));
  return {ideal.num_vars, canonical_generators(std::move(gens)), ideal.order};
}

AffinePoint c_action(const Rational& xi, const AffinePoint& x, const AffinePoint& m) {
  if (x.size() != m.size()) throw Error("points lie on different charts");
  AffinePoint out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= xi * m[i];
  return out;
}

AffinePoint scale_action(const Rational& xi, const AffinePoint& x) {
  AffinePoint out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= xi;
  return out;
}

bool is_cone_over_origin(const PolyIdeal& ideal) { return is_homogeneous_ideal(ideal); }

}  // namespace richmult
