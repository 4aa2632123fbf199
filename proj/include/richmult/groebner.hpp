#pragma once

#include <span>
#include <vector>

#include "richmult/polynomial.hpp"

namespace richmult {

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
///
/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
/// normal selection strategy. The unit ideal yields {1}; the zero ideal {}.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& order = {});

/// Full remainder of f modulo a Groebner basis: no term of the result is
/// divisible by a leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order = {});

std::vector<Monomial> leading_monomials(std::span<const Polynomial> basis, const MonomialOrder& order = {});

/// Reduced grevlex basis rendered with integer, content-free coefficients.
std::vector<Polynomial> interreduce(std::span<const Polynomial> generators);

}  // namespace richmult
