#include "multimod/table_function.hpp"

#include <algorithm>

#include "multimod/errors.hpp"

namespace multimod {

TableFunction::TableFunction(IntBox box, std::vector<ExtendedValue> values)
    : box_(std::move(box)), values_(std::move(values)) {
  if (values_.size() != box_.size())
    throw InputError("table has " + std::to_string(values_.size()) + " values for a box of " +
                     std::to_string(box_.size()) + " points");
  if (std::none_of(values_.begin(), values_.end(), [](const ExtendedValue& v) { return v.is_finite(); }))
    throw EmptyDomainError("function is +inf everywhere on " + format_box(box_));
}

TableFunction TableFunction::generate(const IntBox& box,
                                      const std::function<ExtendedValue(const Point&)>& fn) {
  std::vector<ExtendedValue> values;
  values.reserve(box.size());
  box.for_each([&](const Point& x, std::size_t) { values.push_back(fn(x)); });
  return TableFunction(box, std::move(values));
}

const ExtendedValue& TableFunction::operator()(PointView x) const {
  if (x.size() != dim())
    throw InputError("point of dimension " + std::to_string(x.size()) + " for a function of dimension " +
                     std::to_string(dim()));
  if (!box_.contains(x)) return infinity_ref();
  return values_[box_.index_of(x)];
}

TableFunction TableFunction::cropped(const IntBox& window) const {
  return generate(window, [this](const Point& x) { return (*this)(x); });
}

bool TableFunction::same_function(const TableFunction& other) const {
  if (other.dim() != dim()) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != other(box_.point_at(i))) return false;
  for (std::size_t i = 0; i < other.values_.size(); ++i)
    if (other.values_[i] != (*this)(other.box_.point_at(i))) return false;
  return true;
}

std::vector<Point> effective_domain(const TableFunction& f) {
  std::vector<Point> dom;
  f.box().for_each([&](const Point& x, std::size_t i) {
    if (f.at_index(i).is_finite()) dom.push_back(x);
  });
  return dom;
}

std::vector<std::size_t> domain_indices(const TableFunction& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (f.at_index(i).is_finite()) out.push_back(i);
  return out;
}

ExtendedValue eval(const TableFunction& f, PointView x) { return f(x); }

}  // namespace multimod
