#include "richmult/monomial.hpp"

#include <algorithm>

#include "richmult/rational.hpp"

namespace richmult {

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t index, unsigned exponent) {
  if (index >= kMaxVars) throw Error("variable index exceeds kMaxVars");
  if (exponent > 255) throw Error("monomial exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[index] + exponent);
  exps_[index] = static_cast<std::uint8_t>(exponent);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > 255) throw Error("monomial exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

std::size_t Monomial::support_end() const {
  for (std::size_t i = kMaxVars; i > 0; --i)
    if (exps_[i - 1] != 0) return i;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (homogenizer) {
    unsigned ea = a[*homogenizer], eb = b[*homogenizer];
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  if (kind == OrderKind::GradedLex) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  for (std::size_t i = kMaxVars; i > 0; --i)
    if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1] ? -1 : 1;
  return 0;
}

}  // namespace richmult
