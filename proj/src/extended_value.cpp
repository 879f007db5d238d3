#include "multimod/extended_value.hpp"

#include <stdexcept>

namespace multimod {

const Rational& ExtendedValue::value() const {
  if (!finite_) throw std::logic_error("value() of +inf");
  return value_;
}

ExtendedValue& ExtendedValue::operator+=(const ExtendedValue& other) {
  if (!other.finite_) {
    finite_ = false;
    value_ = 0;
  } else if (finite_) {
    value_ += other.value_;
  }
  return *this;
}

ExtendedValue ExtendedValue::scaled(const Rational& factor) const {
  if (factor < 0) throw std::invalid_argument("negative scale factor");
  if (!finite_) return infinity();
  return ExtendedValue(Rational(value_ * factor));
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
  if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtendedValue::to_string() const { return finite_ ? format_rational(value_) : "inf"; }

std::ostream& operator<<(std::ostream& os, const ExtendedValue& v) { return os << v.to_string(); }

const ExtendedValue& infinity_ref() {
  static const ExtendedValue inf;
  return inf;
}

}  // namespace multimod
