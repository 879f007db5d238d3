#include "multimod/minimize.hpp"

#include "multimod/errors.hpp"

namespace multimod::minimize {

namespace {

constexpr std::size_t kMaxDirectionsDim = 20;

void extend(std::size_t n, std::size_t next, Point& current, int sign, std::vector<Point>& out) {
  for (std::size_t i = next; i < n; ++i) {
    current[i] = sign;
    out.push_back(current);
    extend(n, i + 1, current, -sign, out);
    current[i] = 0;
  }
}

}  // namespace

std::vector<Point> directions_T(std::size_t n) {
  if (n == 0) throw InputError("dimension must be >= 1");
  if (n > kMaxDirectionsDim)
    throw InputError("directions_T is limited to n <= " + std::to_string(kMaxDirectionsDim));
  std::vector<Point> out;
  out.reserve((std::size_t{1} << n) - 1);
  Point current(n, 0);
  extend(n, 0, current, 1, out);
  return out;
}

bool is_local_minimum(const TableFunction& f, PointView x, const std::vector<Point>& directions) {
  const ExtendedValue& fx = f(x);
  Point y(x.begin(), x.end());
  for (const Point& d : directions)
    for (int sign : {1, -1}) {
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + sign * d[i];
      if (f(y) < fx) return false;
    }
  return true;
}

MinimumPoint local_minimize(const TableFunction& f, PointView x0) {
  if (f(x0).is_infinite()) throw InputError("start point " + format_point(x0) + " is outside dom f");
  const std::vector<Point> directions = directions_T(f.dim());
  MinimumPoint m{Point(x0.begin(), x0.end()), f(x0), 0};
  Point y(m.point.size());
  bool moved = true;
  while (moved) {
    moved = false;
    for (const Point& d : directions) {
      for (int sign : {1, -1}) {
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = m.point[i] + sign * d[i];
        const ExtendedValue& fy = f(y);
        if (fy < m.value) {
          m.point = y;
          m.value = fy;
          ++m.steps;
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
  }
  return m;
}

MinimumPoint brute_min(const TableFunction& f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.values().size(); ++i)
    if (f.at_index(i) < f.at_index(best)) best = i;
  return MinimumPoint{f.box().point_at(best), f.at_index(best), 0};
}

LocalGlobalReport check_local_global(const TableFunction& f) {
  LocalGlobalReport report;
  report.global_minimum = brute_min(f).value;
  const std::vector<Point> directions = directions_T(f.dim());
  for (const Point& x : effective_domain(f)) {
    if (!is_local_minimum(f, x, directions)) continue;
    ++report.local_minima;
    if (f(x) != report.global_minimum && !report.counterexample) {
      report.holds = false;
      report.counterexample = x;
    }
  }
  return report;
}

}  // namespace multimod::minimize
