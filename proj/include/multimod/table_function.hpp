#pragma once

#include <functional>
#include <vector>

#include "multimod/extended_value.hpp"
#include "multimod/int_box.hpp"

namespace multimod {

// A function Z^n -> R ∪ {+∞} stored densely on a box and equal to +∞
// everywhere outside it. The effective domain is never empty.
class TableFunction {
 public:
  // Throws InputError on a size mismatch and EmptyDomainError when every value is +∞.
  TableFunction(IntBox box, std::vector<ExtendedValue> values);

  // Evaluates `fn` at every point of `box`.
  static TableFunction generate(const IntBox& box,
                                const std::function<ExtendedValue(const Point&)>& fn);

  const IntBox& box() const { return box_; }
  std::size_t dim() const { return box_.dim(); }
  const std::vector<ExtendedValue>& values() const { return values_; }

  // Value at x; +∞ outside the box. Throws InputError on a dimension mismatch.
  const ExtendedValue& operator()(PointView x) const;
  const ExtendedValue& at_index(std::size_t index) const { return values_[index]; }

  // Same function restricted to `window` (values outside `box()` become +∞).
  TableFunction cropped(const IntBox& window) const;

  // Agreement as functions on Z^n, independent of the stored boxes.
  bool same_function(const TableFunction& other) const;

  friend bool operator==(const TableFunction&, const TableFunction&) = default;

 private:
  IntBox box_;
  std::vector<ExtendedValue> values_;
};

// In-box points with finite value, lexicographic.
std::vector<Point> effective_domain(const TableFunction& f);

// Indices (into the box) of the finite values, ascending.
std::vector<std::size_t> domain_indices(const TableFunction& f);

ExtendedValue eval(const TableFunction& f, PointView x);

}  // namespace multimod
