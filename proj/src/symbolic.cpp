#include "multimod/symbolic.hpp"

#include <algorithm>
#include <iostream>

#include "multimod/errors.hpp"

namespace multimod {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(static_cast<long>(m(i, j)));
  return r;
}

namespace {

void check_dim(std::size_t expected, PointView x) {
  if (x.size() != expected)
    throw InputError("point of dimension " + std::to_string(x.size()) + " for a function of dimension " +
                     std::to_string(expected));
}

}  // namespace

QuadraticFunction::QuadraticFunction(RationalMatrix matrix, std::optional<std::vector<Rational>> linear)
    : matrix_(std::move(matrix)), linear_(std::move(linear)) {
  const std::size_t n = matrix_.rows();
  if (n == 0 || !matrix_.square()) throw InputError("quadratic form needs a nonempty square matrix");
  if (linear_ && linear_->size() != n) throw InputError("linear term length differs from matrix size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) matrix_(i, j).canonicalize();
  if (linear_)
    for (auto& c : *linear_) c.canonicalize();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix_(i, j) == matrix_(j, i)) continue;
      Rational mean = (matrix_(i, j) + matrix_(j, i)) / 2;
      matrix_(i, j) = mean;
      matrix_(j, i) = mean;
      symmetrized_ = true;
    }
  if (symmetrized_) std::cerr << "warning: asymmetric quadratic matrix replaced by (A+A^T)/2\n";
}

Rational QuadraticFunction::operator()(PointView x) const {
  check_dim(dim(), x);
  Rational sum = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < dim(); ++j)
      if (x[j] != 0) row += matrix_(i, j) * static_cast<long>(x[j]);
    sum += row * static_cast<long>(x[i]);
  }
  if (linear_)
    for (std::size_t i = 0; i < dim(); ++i) sum += (*linear_)[i] * static_cast<long>(x[i]);
  return sum;
}

ExtendedValue UnivariatePiece::operator()(std::int64_t t) const {
  if (t < start || t >= start + static_cast<std::int64_t>(values.size())) return ExtendedValue::infinity();
  return ExtendedValue(values[static_cast<std::size_t>(t - start)]);
}

SeparableFunction::SeparableFunction(std::vector<UnivariatePiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InputError("separable function needs at least one piece");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& v = pieces_[i].values;
    if (v.empty()) throw InputError("piece " + std::to_string(i + 1) + " is empty");
    for (std::size_t k = 1; k + 1 < v.size(); ++k)
      if (v[k - 1] + v[k + 1] < 2 * v[k])
        throw InputError("piece " + std::to_string(i + 1) + " is not discretely convex at t=" +
                         std::to_string(pieces_[i].start + static_cast<std::int64_t>(k)));
  }
}

IntBox SeparableFunction::support_box() const {
  Point lo, hi;
  for (const auto& p : pieces_) {
    lo.push_back(p.start);
    hi.push_back(p.start + static_cast<std::int64_t>(p.values.size()) - 1);
  }
  return IntBox(std::move(lo), std::move(hi));
}

ExtendedValue SeparableFunction::operator()(PointView x) const {
  check_dim(dim(), x);
  ExtendedValue sum(0);
  for (std::size_t i = 0; i < dim() && sum.is_finite(); ++i) sum += pieces_[i](x[i]);
  return sum;
}

IndicatorSet::IndicatorSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("indicator set must be nonempty");
  const std::size_t n = points_.front().size();
  if (n == 0) throw InputError("indicator set points must have dimension >= 1");
  for (const auto& p : points_)
    if (p.size() != n) throw InputError("indicator set points of mixed dimension");
  std::sort(points_.begin(), points_.end());
  if (auto dup = std::adjacent_find(points_.begin(), points_.end()); dup != points_.end())
    throw InputError("duplicate point " + format_point(*dup) + " in indicator set");
}

bool IndicatorSet::contains(PointView x) const {
  return std::binary_search(points_.begin(), points_.end(), Point(x.begin(), x.end()));
}

ExtendedValue eval(const QuadraticFunction& f, PointView x) { return ExtendedValue(f(x)); }

ExtendedValue eval(const SeparableFunction& f, PointView x) { return f(x); }

ExtendedValue eval(const IndicatorSet& s, PointView x) {
  check_dim(s.dim(), x);
  return s.contains(x) ? ExtendedValue(0) : ExtendedValue::infinity();
}

TableFunction materialize(const QuadraticFunction& f, const IntBox& box) {
  if (box.dim() != f.dim()) throw InputError("box dimension differs from function dimension");
  return TableFunction::generate(box, [&](const Point& x) { return eval(f, x); });
}

TableFunction materialize(const SeparableFunction& f, const IntBox& box) {
  if (box.dim() != f.dim()) throw InputError("box dimension differs from function dimension");
  return TableFunction::generate(box, [&](const Point& x) { return eval(f, x); });
}

TableFunction materialize(const IndicatorSet& s, const IntBox& box) {
  if (box.dim() != s.dim()) throw InputError("box dimension differs from set dimension");
  return TableFunction::generate(box, [&](const Point& x) { return eval(s, x); });
}

}  // namespace multimod
