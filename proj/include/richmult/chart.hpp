#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "richmult/linalg.hpp"
#include "richmult/polynomial.hpp"
#include "richmult/weyl.hpp"

namespace richmult {

enum class EntryKind { Zero, One, Variable };

struct ChartEntry {
  EntryKind kind = EntryKind::Zero;
  std::size_t var = 0;  ///< variable index when kind == Variable
};

/// Rational point of a chart, one coordinate per chart index (in chart order).
class AffinePoint {
 public:
  AffinePoint() = default;
  explicit AffinePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static AffinePoint zeros(std::size_t n) { return AffinePoint(std::vector<Rational>(n, 0)); }

  std::size_t size() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  bool is_origin() const;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
  friend bool operator<(const AffinePoint& a, const AffinePoint& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// The affine open set around the fixed point e_tau, as an n x d matrix whose
/// column span is the subspace. Row tau_k carries the k-th unit row; any other
/// row q carries the variable x_{q,tau_k} in column k.
class Chart {
 public:
  Chart(GrassShape shape, CosetRep tau);

  const GrassShape& shape() const { return shape_; }
  const CosetRep& tau() const { return tau_; }
  const std::vector<RootIndex>& indices() const { return indices_; }
  std::size_t num_vars() const { return indices_.size(); }

  std::size_t var_index(const RootIndex& r) const;
  /// Entry in 1-based row `row` and 0-based column slot `slot`.
  ChartEntry entry(int row, int slot) const;
  Polynomial entry_polynomial(int row, int slot) const;

  /// Names "x_q_p" (or another prefix) in chart variable order.
  std::vector<std::string> variable_names(std::string_view prefix = "x") const;

  RationalMatrix matrix_at(const AffinePoint& point) const;
  AffinePoint origin() const { return AffinePoint::zeros(num_vars()); }

  /// Builds a point from (index, value) pairs; unlisted coordinates are zero.
  AffinePoint point(std::span<const std::pair<RootIndex, Rational>> coords) const;

 private:
  GrassShape shape_;
  CosetRep tau_;
  std::vector<RootIndex> indices_;
};

inline Chart build_chart(GrassShape shape, CosetRep tau) { return {shape, std::move(tau)}; }

/// The cell containing the column span of a rank-d n x d matrix, read off
/// from dim(V cap E_j) = d - rank(rows j+1..n).
CosetRep cell_of_point(const GrassShape& shape, const RationalMatrix& columns);

/// Chart coordinates of a column span lying in the chart's open set.
AffinePoint chart_coordinates(const Chart& chart, const RationalMatrix& columns);

/// True iff every positive-root coordinate vanishes.
bool in_cell(const Chart& chart, const AffinePoint& x);

/// Raw rank-condition minors of X_w at the essential positions of w.
std::vector<Polynomial> schubert_minors(const Chart& chart, const CosetRep& w);
/// Raw rank-condition minors of X^v at the essential positions of v.
std::vector<Polynomial> opposite_minors(const Chart& chart, const CosetRep& v);

/// Ideal of X_w on the chart, interreduced; the unit ideal unless tau <= w.
PolyIdeal schubert_ideal(const Chart& chart, const CosetRep& w);
/// Ideal of X^v on the chart, interreduced; the unit ideal unless v <= tau.
PolyIdeal opposite_ideal(const Chart& chart, const CosetRep& v);
/// Union of both generator sets; the unit ideal unless v <= tau <= w.
PolyIdeal richardson_ideal(const Chart& chart, const CosetRep& w, const CosetRep& v);

/// Replaces every generator g(x) by g(y + m), so y = 0 corresponds to m.
PolyIdeal translate_to_origin(const PolyIdeal& ideal, const AffinePoint& m);

/// x - xi * m, coordinatewise.
AffinePoint c_action(const Rational& xi, const AffinePoint& x, const AffinePoint& m);
/// xi * x, coordinatewise.
AffinePoint scale_action(const Rational& xi, const AffinePoint& x);

/// True iff the variety is stable under scaling about the origin.
bool is_cone_over_origin(const PolyIdeal& ideal);

}  // namespace richmult
