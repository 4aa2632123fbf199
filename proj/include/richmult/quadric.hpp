#pragma once

#include <optional>
#include <span>
#include <vector>

#include "richmult/engine.hpp"
#include "richmult/linalg.hpp"
#include "richmult/polynomial.hpp"

namespace richmult {

/// The odd quadric Q = 0 in P^{2n}, homogeneous space of SO(2n+1).
class QuadricShape {
 public:
  explicit QuadricShape(int n);
  int n() const { return n_; }
  /// Number of homogeneous coordinates, 2n + 1.
  int size() const { return 2 * n_ + 1; }
  friend bool operator==(const QuadricShape&, const QuadricShape&) = default;

 private:
  int n_;
};

/// Index of a Schubert variety X_i (or opposite X^i): 1 <= i <= 2n+1, i != n+1.
class SchubertIndex {
 public:
  SchubertIndex(const QuadricShape& shape, int i);
  int value() const { return i_; }
  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  int i_;
};

/// Homogeneous coordinates x_1..x_{2n+1} (stored 0-based).
using QuadricPoint = std::vector<Rational>;

/// x_{n+1}^2 + 2 sum_{i<=n} x_i x_{2n+2-i}.
Rational q_eval(const QuadricShape& shape, std::span<const Rational> x);

/// x nonzero, x_{i+1} = ... = x_{2n+1} = 0 and Q(x) = 0.
bool schubert_member(const QuadricShape& shape, SchubertIndex i, std::span<const Rational> x);
/// x nonzero, x_1 = ... = x_{j-1} = 0 and Q(x) = 0.
bool opposite_member(const QuadricShape& shape, SchubertIndex j, std::span<const Rational> x);

/// 1 for i < n+1; for i > n+1, 2 exactly when x_{2n+2-i} = ... = x_i = 0.
int mult_schubert_quadric(const QuadricShape& shape, SchubertIndex i, std::span<const Rational> x);
/// 1 for j > n+1; for j < n+1, 2 exactly when x_j = ... = x_{2n+2-j} = 0.
int mult_opposite_quadric(const QuadricShape& shape, SchubertIndex j, std::span<const Rational> x);

/// Sing X_i = X_{2n+1-i} when n+1 < i < 2n+1, empty otherwise.
std::optional<int> singular_locus_index(const QuadricShape& shape, SchubertIndex i);
/// Sing X^j = X^{2n+3-j} when 1 < j < n+1, empty otherwise.
std::optional<int> opposite_singular_locus_index(const QuadricShape& shape, SchubertIndex j);

/// Upper triangular b in SO(V) with b e_i = x, for x with x_i = 1 and
/// x_{i+1} = ... = 0 on the quadric.
RationalMatrix b_matrix(const QuadricShape& shape, SchubertIndex i, std::span<const Rational> x);

struct BMatrixCheck {
  bool upper_triangular = false;
  bool preserves_form = false;  ///< b^T E b = E with E the anti-diagonal
  bool unit_determinant = false;
  bool maps_e_i_to_x = false;
  bool all() const { return upper_triangular && preserves_form && unit_determinant && maps_e_i_to_x; }
};
BMatrixCheck check_b_matrix(const QuadricShape& shape, SchubertIndex i, std::span<const Rational> x,
                            const RationalMatrix& b);

/// Sing X_i cap Sing X^j is empty, by index arithmetic and by searching the
/// grid points of X_i^j for points singular on both. Requires j <= i.
bool verify_disjoint_sing(const QuadricShape& shape, SchubertIndex i, SchubertIndex j,
                          std::span<const Rational> grid);

/// Product of the two closed forms; throws if x is singular on both.
int richardson_mult_quadric(const QuadricShape& shape, SchubertIndex i, SchubertIndex j, std::span<const Rational> x);

/// Affine chart ideal of {x_c = 0 outside [lo, hi], Q = 0} around x, with the
/// last nonzero coordinate of x in range set to 1 and x moved to the origin.
/// Variables are the remaining in-range coordinates in increasing order.
PolyIdeal quadric_chart_ideal(const QuadricShape& shape, int lo, int hi, std::span<const Rational> x);

/// Jacobian criterion on the projective hypersurface Q|_[lo,hi] at x.
bool quadric_jacobian_singular(const QuadricShape& shape, int lo, int hi, std::span<const Rational> x);

/// Grid points supported in [lo, hi] with Q = 0, one per projective class
/// (last nonzero coordinate equal to 1), in odometer order.
std::vector<QuadricPoint> quadric_grid_points(const QuadricShape& shape, int lo, int hi,
                                              std::span<const Rational> grid);

/// Closed forms versus the tangent-cone oracle for x on X_i^j.
MultiplicityReport quadric_report(const QuadricShape& shape, SchubertIndex i, SchubertIndex j,
                                  std::span<const Rational> x, const AnalysisOptions& options = {});

/// Every (i, j) with j <= i and every grid point of X_i^j.
SweepResult quadric_sweep(const QuadricShape& shape, std::span<const Rational> grid, std::size_t max_instances,
                          unsigned workers, const AnalysisOptions& options = {});

}  // namespace richmult
