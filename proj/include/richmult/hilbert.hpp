#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "richmult/polynomial.hpp"

namespace richmult {

/// Hilbert series data of a standard graded quotient k[x_1..x_k]/M.
///
/// The series is numerator(t) / (1 - t)^dimension with numerator(1) != 0;
/// degree = numerator(1).
struct HilbertData {
  std::vector<Integer> numerator;  // coefficient of t^i at index i
  int dimension = 0;
  std::int64_t degree = 0;
};

/// Unreduced numerator N(t) with HS = N(t) / (1 - t)^num_vars, by pivot
/// splitting N(M) = N(M + x^e) + t^e N(M : x^e). Generators need not be minimal.
std::vector<Integer> hilbert_numerator(std::span<const Monomial> generators);

/// Divides out (1 - t) factors and extracts dimension and degree.
HilbertData hilbert_series(std::span<const Monomial> generators, std::size_t num_vars);

/// Hilbert data of k[x]/I for a homogeneous ideal, via its grevlex leading ideal.
/// Throws on non-homogeneous generators and on the unit ideal.
HilbertData homogeneous_hilbert_data(const PolyIdeal& ideal);

/// Degree of the projective variety cut out by a homogeneous ideal.
std::int64_t projective_degree(const PolyIdeal& ideal);

/// Value of the Hilbert function in degree `degree` by direct monomial count.
/// Exponential; intended for tests and small cross-checks.
std::int64_t count_standard_monomials(std::span<const Monomial> generators, std::size_t num_vars, unsigned degree);

}  // namespace richmult
