#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

namespace richmult {

/// Hard cap on the number of ring variables, including a homogenizing one.
inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector over at most kMaxVars variables.
///
/// Variables that are not used simply carry exponent zero, so monomials from
/// rings of different sizes compare consistently.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned operator[](std::size_t index) const { return exps_[index]; }
  void set(std::size_t index, unsigned exponent);

  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Largest variable index with a nonzero exponent plus one (0 for 1).
  std::size_t support_end() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  /// Plain lexicographic comparison of exponent vectors, for use as a map key.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { GradedReverseLex, GradedLex };

/// A degree-compatible monomial order. Variable 0 is the largest variable.
///
/// When `homogenizer` is set, monomials of equal total degree are first
/// compared by the exponent of that variable (higher wins). On homogenized
/// input this makes leading terms correspond to the lowest-degree terms of the
/// dehomogenized polynomial.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedReverseLex;
  std::optional<std::size_t> homogenizer;

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

inline MonomialOrder grevlex() { return {}; }

}  // namespace richmult
