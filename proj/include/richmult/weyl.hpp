#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace richmult {

/// Shape of the Grassmannian G(d, n) of d-planes in n-space.
class GrassShape {
 public:
  GrassShape(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  /// Dimension d(n - d) of the Grassmannian.
  int dimension() const { return d_ * (n_ - d_); }

  friend bool operator==(const GrassShape&, const GrassShape&) = default;

 private:
  int d_, n_;
};

/// Strictly increasing d-tuple in [1, n]: a minimal coset representative
/// naming a Schubert cell, Schubert variety or opposite Schubert variety.
class CosetRep {
 public:
  CosetRep(GrassShape shape, std::vector<int> entries);

  /// (1, ..., d), the smallest element.
  static CosetRep min(GrassShape shape);
  /// (n - d + 1, ..., n), the largest element.
  static CosetRep max(GrassShape shape);

  const GrassShape& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t k) const { return entries_[k]; }
  bool contains(int value) const;
  /// #{k : entries_k <= j}.
  int count_at_most(int j) const;
  /// #{k : entries_k >= j}.
  int count_at_least(int j) const;
  /// Sum of (entries_k - k): dimension of the Schubert variety.
  int length() const;

  friend bool operator==(const CosetRep&, const CosetRep&) = default;
  friend auto operator<=>(const CosetRep& a, const CosetRep& b) { return a.entries_ <=> b.entries_; }

 private:
  GrassShape shape_;
  std::vector<int> entries_;
};

/// Chart coordinate x_{qp}: row q (not a pivot) in the column of pivot p.
struct RootIndex {
  int q;
  int p;

  /// The underlying root alpha_{p,q} is positive.
  bool positive() const { return p < q; }

  friend auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

/// Bruhat order on coset representatives (componentwise comparison).
bool bruhat_leq(const CosetRep& a, const CosetRep& b);

/// All (q, p) with p in tau and q not in tau, sorted lexicographically.
/// This is the canonical variable order of every chart ideal.
std::vector<RootIndex> chart_index_set(const GrassShape& shape, const CosetRep& tau);

/// The (q, p) with p < q: their vanishing cuts out the cell of tau.
std::vector<RootIndex> positive_root_indices(const GrassShape& shape, const CosetRep& tau);

/// Every coset representative, in lexicographic order.
std::vector<CosetRep> all_coset_reps(const GrassShape& shape);

/// Serialized as comma-separated integers, e.g. "2,5,6".
std::string to_string(const CosetRep& c);
/// Accepts "2,5,6" and, when n <= 9, the compact digit form "256".
CosetRep parse_coset_rep(std::string_view text, const GrassShape& shape);

/// Serialized as "q.p".
std::string to_string(const RootIndex& r);
RootIndex parse_root_index(std::string_view text);

}  // namespace richmult
