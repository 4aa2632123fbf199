#include "richmult/linalg.hpp"

#include <utility>

namespace richmult {

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  RationalMatrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
  return s;
}

RationalMatrix RationalMatrix::row_range(std::size_t first, std::size_t last) const {
  RationalMatrix s(last - first, cols_);
  for (std::size_t r = first; r < last; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s(r - first, c) = (*this)(r, c);
  return s;
}

namespace {

// In-place Gaussian elimination; returns rank and accumulates the
// determinant sign/product for square input.
std::size_t eliminate(RationalMatrix& m, Rational* det) {
  std::size_t rank = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
      if (det) *det = -*det;
    }
    const Rational p = m(rank, c);
    if (det) *det *= p;
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / p;
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return eliminate(copy, nullptr);
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  RationalMatrix copy = *this;
  Rational det;
  std::size_t r = eliminate(copy, &det);
  return r == rows_ ? det : Rational(0);
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error("matrix is singular");
    if (pivot != c)
      for (std::size_t k = 0; k < 2 * n; ++k) std::swap(aug(pivot, k), aug(c, k));
    Rational inv = 1 / aug(c, c);
    for (std::size_t k = 0; k < 2 * n; ++k) aug(c, k) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      Rational f = aug(r, c);
      for (std::size_t k = 0; k < 2 * n; ++k) aug(r, k) -= f * aug(c, k);
    }
  }
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

}  // namespace richmult
