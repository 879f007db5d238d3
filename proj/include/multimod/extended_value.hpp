#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "multimod/rational.hpp"

namespace multimod {

// An element of R ∪ {+∞} with exact rational finite part. There is no -∞.
class ExtendedValue {
 public:
  // Default-constructed values are +∞.
  ExtendedValue() = default;
  ExtendedValue(Rational value) : finite_(true), value_(std::move(value)) { value_.canonicalize(); }
  ExtendedValue(long value) : finite_(true), value_(value) {}
  ExtendedValue(int value) : finite_(true), value_(value) {}

  static ExtendedValue infinity() { return ExtendedValue(); }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  // Requires is_finite().
  const Rational& value() const;

  ExtendedValue& operator+=(const ExtendedValue& other);
  friend ExtendedValue operator+(ExtendedValue lhs, const ExtendedValue& rhs) {
    lhs += rhs;
    return lhs;
  }

  // Multiplication by a nonnegative rational; a·∞ = ∞ for every a ≥ 0, including 0.
  ExtendedValue scaled(const Rational& factor) const;

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);
  friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);

  // "inf" or the rational in "p/q" form.
  std::string to_string() const;

 private:
  bool finite_ = false;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedValue& v);

// Shared +∞ instance, for functions that hand out references.
const ExtendedValue& infinity_ref();

}  // namespace multimod
