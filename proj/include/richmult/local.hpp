#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "richmult/polynomial.hpp"

namespace richmult {

/// Ideal of lowest-degree forms of an ideal whose variety contains the origin.
///
/// Every generator is homogenized with a fresh variable ranked above all
/// others, a Groebner basis is computed for that order, and the lowest forms
/// of the dehomogenized basis elements are returned. Throws if a generator
/// has a nonzero constant term.
PolyIdeal tangent_cone(const PolyIdeal& ideal);

struct LocalData {
  std::int64_t multiplicity = 0;  ///< Hilbert-Samuel multiplicity at the origin
  int dimension = 0;              ///< Krull dimension of the local ring
};

/// Multiplicity and local dimension at the origin, from the tangent cone.
LocalData local_data_at_origin(const PolyIdeal& ideal);

std::int64_t multiplicity_at_origin(const PolyIdeal& ideal);

/// True when the ideal is generated by homogeneous polynomials: every
/// homogeneous component of every Groebner basis element lies in the ideal.
/// Throws on the unit ideal.
bool is_homogeneous_ideal(const PolyIdeal& ideal);

/// dim_k k[x]/(I + m^k) for k = 1..k_max, by exact linear algebra on the
/// truncated multiples of the generators. Independent of Groebner bases.
std::vector<std::int64_t> hilbert_samuel_oracle(const PolyIdeal& ideal, int k_max);

struct SamuelBudget {
  int max_k = 40;
  std::size_t max_columns = 30000;
};

struct SamuelFit {
  std::size_t reduced_vars = 0;   ///< variables left after elimination at the final bound
  int reduced_dimension = 0;      ///< local dimension of the reduced ideal
  std::vector<std::int64_t> values;  ///< Hilbert-Samuel function, k = 1..K
  std::int64_t fitted = 0;        ///< stabilized top finite difference
  bool stable = false;            ///< last two top differences agreed
};

/// Fits the normalized leading coefficient of the Hilbert-Samuel function.
///
/// For each degree bound k, generators with a linear part are first used to
/// eliminate one variable each: after a linear change of coordinates such a
/// generator reads u + h with h of order two, and u is replaced by the power
/// series solving u = -h, truncated below degree k. This is exact modulo m^k.
/// Variables that no longer occur are dropped, lowering the order of the
/// finite difference by one each.
SamuelFit fit_samuel_multiplicity(const PolyIdeal& ideal, int local_dimension, const SamuelBudget& budget = {});

/// Rank of the Jacobian matrix of the generators at a point.
std::size_t jacobian_rank(const PolyIdeal& ideal, std::span<const Rational> point);

/// (embedding dimension) - (local dimension) at the point; zero iff smooth
/// for a radical ideal.
int jacobian_corank(const PolyIdeal& ideal, std::span<const Rational> point, int local_dimension);

}  // namespace richmult
