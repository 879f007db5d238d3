#include "multimod/int_box.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "multimod/errors.hpp"

namespace multimod {

std::string format_point(PointView p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

IntBox::IntBox(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw InputError("box must have dimension >= 1");
  if (lower_.size() != upper_.size()) throw InputError("box bounds differ in dimension");
  const std::size_t n = lower_.size();
  strides_.assign(n, 1);
  std::size_t total = 1;
  for (std::size_t k = n; k-- > 0;) {
    if (lower_[k] > upper_[k])
      throw InputError("box lower bound exceeds upper bound in coordinate " + std::to_string(k + 1));
    auto side = static_cast<std::size_t>(upper_[k] - lower_[k]) + 1;
    strides_[k] = total;
    if (__builtin_mul_overflow(total, side, &total)) throw InputError("box has too many points");
  }
  size_ = total;
}

IntBox IntBox::cube(std::size_t n, std::int64_t lo, std::int64_t hi) {
  return IntBox(Point(n, lo), Point(n, hi));
}

IntBox IntBox::bounding(const std::vector<Point>& points) {
  if (points.empty()) throw InputError("bounding box of an empty point list");
  Point lo = points.front(), hi = points.front();
  for (const auto& p : points) {
    if (p.size() != lo.size()) throw InputError("points of mixed dimension");
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return IntBox(std::move(lo), std::move(hi));
}

bool IntBox::contains(PointView x) const {
  if (x.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
  return true;
}

std::size_t IntBox::index_of(PointView x) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    index += static_cast<std::size_t>(x[i] - lower_[i]) * strides_[i];
  return index;
}

Point IntBox::point_at(std::size_t index) const {
  Point x(lower_.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = lower_[i] + static_cast<std::int64_t>(index / strides_[i]);
    index %= strides_[i];
  }
  return x;
}

bool IntBox::next(Point& x) const {
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] < upper_[k]) {
      ++x[k];
      return true;
    }
    x[k] = lower_[k];
  }
  return false;
}

IntBox IntBox::inflated(std::int64_t margin) const {
  Point lo = lower_, hi = upper_;
  for (auto& v : lo) v -= margin;
  for (auto& v : hi) v += margin;
  return IntBox(std::move(lo), std::move(hi));
}

std::optional<IntBox> IntBox::intersect(const IntBox& other) const {
  if (other.dim() != dim()) throw InputError("box intersection dimension mismatch");
  Point lo(dim()), hi(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    lo[i] = std::max(lower_[i], other.lower_[i]);
    hi[i] = std::min(upper_[i], other.upper_[i]);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return IntBox(std::move(lo), std::move(hi));
}

std::string format_box(const IntBox& box) {
  std::ostringstream os;
  for (std::size_t i = 0; i < box.dim(); ++i)
    os << (i ? " x " : "") << '[' << box.lower()[i] << ',' << box.upper()[i] << ']';
  return os.str();
}

}  // namespace multimod
