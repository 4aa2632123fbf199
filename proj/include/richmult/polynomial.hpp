#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "richmult/monomial.hpp"
#include "richmult/rational.hpp"

namespace richmult {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in decreasing graded reverse lexicographic order with
/// no zero coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational c);
  explicit Polynomial(long c) : Polynomial(Rational(c)) {}

  static Polynomial variable(std::size_t index);
  static Polynomial monomial(const Monomial& m, Rational c = 1);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  Rational constant_term() const;

  /// Leading term under the canonical grevlex order. Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  /// Leading monomial under an arbitrary order. Requires !is_zero().
  const Term& leading_term(const MonomialOrder& order) const;

  unsigned total_degree() const;
  /// Smallest degree among the terms (0 for the zero polynomial).
  unsigned lowest_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(unsigned degree) const;
  Polynomial lowest_form() const;
  /// One past the largest variable index appearing (0 for constants).
  std::size_t support_end() const;
  bool uses_variable(std::size_t index) const;

  Rational evaluate(std::span<const Rational> point) const;
  Polynomial partial_derivative(std::size_t index) const;
  /// Returns p(x + shift); the shift vector may be shorter than the support.
  Polynomial translate(std::span<const Rational> shift) const;
  /// Replaces variable `index` by `value` throughout.
  Polynomial substitute(std::size_t index, const Polynomial& value) const;
  /// Homogenizes with variable `h`, which must not already occur.
  Polynomial homogenize(std::size_t h) const;
  /// Sets a single variable to a constant.
  Polynomial specialize(std::size_t index, const Rational& value) const;
  /// Renames variable i to new_index[i]; entries must be distinct.
  Polynomial relabel(std::span<const std::size_t> new_index) const;

  /// Primitive integer multiple with positive leading coefficient.
  Polynomial normalized() const;
  /// Scaled so the leading coefficient under `order` is 1.
  Polynomial monic(const MonomialOrder& order = {}) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Term-by-term comparison (canonical order), used for deterministic sorting.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// Text form with the given variable names, e.g. "x_1_2^2 - 3/2*x_4_5 + 1".
std::string to_string(const Polynomial& p, std::span<const std::string> names);

/// Parses the text form. Accepts +, -, *, ^ (integer exponent), parentheses,
/// integer and "a/b" rational literals, and the given variable names. The name
/// "t" is reserved for the homogenizing variable and is rejected.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

/// A finitely generated ideal in a polynomial ring with `num_vars` variables.
/// A nonzero constant generator marks the unit ideal (empty variety).
struct PolyIdeal {
  std::size_t num_vars = 0;
  std::vector<Polynomial> generators;
  MonomialOrder order;

  static PolyIdeal unit(std::size_t num_vars) { return {num_vars, {Polynomial(1)}, {}}; }
  static PolyIdeal zero(std::size_t num_vars) { return {num_vars, {}, {}}; }

  bool is_unit() const;
  bool is_zero() const { return generators.empty(); }
  /// True when every generator vanishes at the point.
  bool vanishes_at(std::span<const Rational> point) const;

  friend bool operator==(const PolyIdeal&, const PolyIdeal&) = default;
};

/// Sorts generators, drops zeros and duplicates after normalization.
std::vector<Polynomial> canonical_generators(std::vector<Polynomial> gens);

}  // namespace richmult
