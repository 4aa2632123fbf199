#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace richmult {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Renders "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

}  // namespace richmult
