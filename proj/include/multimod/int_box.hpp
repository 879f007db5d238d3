#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace multimod {

using Point = std::vector<std::int64_t>;
using PointView = std::span<const std::int64_t>;

std::string format_point(PointView p);

// Axis-aligned box lower <= x <= upper in Z^n, n >= 1.
//
// Points are numbered in lexicographic order (row-major with the first
// coordinate most significant), so index order and lexicographic order agree.
class IntBox {
 public:
  IntBox(Point lower, Point upper);

  // [lo, hi]^n.
  static IntBox cube(std::size_t n, std::int64_t lo, std::int64_t hi);
  // Smallest box containing every point. Requires a nonempty list.
  static IntBox bounding(const std::vector<Point>& points);

  std::size_t dim() const { return lower_.size(); }
  const Point& lower() const { return lower_; }
  const Point& upper() const { return upper_; }
  std::int64_t extent(std::size_t i) const { return upper_[i] - lower_[i] + 1; }

  std::size_t size() const { return size_; }

  bool contains(PointView x) const;
  // Requires contains(x).
  std::size_t index_of(PointView x) const;
  Point point_at(std::size_t index) const;

  // Advances x to its lexicographic successor inside the box; false after the last point.
  bool next(Point& x) const;

  // Box grown by `margin` on every side.
  IntBox inflated(std::int64_t margin) const;

  std::optional<IntBox> intersect(const IntBox& other) const;

  friend bool operator==(const IntBox&, const IntBox&) = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    Point x = lower_;
    std::size_t index = 0;
    do {
      fn(static_cast<const Point&>(x), index);
      ++index;
    } while (next(x));
  }

 private:
  Point lower_;
  Point upper_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

std::string format_box(const IntBox& box);

}  // namespace multimod
