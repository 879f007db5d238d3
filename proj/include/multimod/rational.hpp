#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace multimod {

using Rational = mpq_class;

// Parses "p/q", "-p/q" or an integer literal. Throws InputError.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or the plain integer when the denominator is 1.
std::string format_rational(const Rational& r);

bool is_integer(const Rational& r);

// Floor and ceiling of a/2 for integers of either sign.
inline std::int64_t floor_half(std::int64_t a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
inline std::int64_t ceil_half(std::int64_t a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

// Floor and ceiling of a/b for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

}  // namespace multimod
