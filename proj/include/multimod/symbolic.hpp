#pragma once

#include <optional>
#include <vector>

#include "multimod/extended_value.hpp"
#include "multimod/int_box.hpp"
#include "multimod/matrix.hpp"
#include "multimod/table_function.hpp"

namespace multimod {

// f(x) = xᵀAx + cᵀx with A symmetric.
class QuadraticFunction {
 public:
  // A non-symmetric `matrix` is replaced by (A + Aᵀ)/2 and symmetrized() reports it.
  explicit QuadraticFunction(RationalMatrix matrix, std::optional<std::vector<Rational>> linear = {});

  std::size_t dim() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }
  const std::optional<std::vector<Rational>>& linear() const { return linear_; }
  bool symmetrized() const { return symmetrized_; }

  Rational operator()(PointView x) const;

 private:
  RationalMatrix matrix_;
  std::optional<std::vector<Rational>> linear_;
  bool symmetrized_ = false;
};

// One univariate convex piece: finite on [start, start + values.size() - 1], +∞ elsewhere.
struct UnivariatePiece {
  std::int64_t start = 0;
  std::vector<Rational> values;

  ExtendedValue operator()(std::int64_t t) const;
};

// f(x) = φ_1(x_1) + ... + φ_n(x_n) with each φ_i discretely convex.
class SeparableFunction {
 public:
  // Throws InputError naming the piece and the point t where
  // φ(t-1) + φ(t+1) >= 2φ(t) fails, or when a piece is empty.
  explicit SeparableFunction(std::vector<UnivariatePiece> pieces);

  std::size_t dim() const { return pieces_.size(); }
  const std::vector<UnivariatePiece>& pieces() const { return pieces_; }

  // Smallest box outside which the function is +∞.
  IntBox support_box() const;

  ExtendedValue operator()(PointView x) const;

 private:
  std::vector<UnivariatePiece> pieces_;
};

// A finite nonempty set S ⊂ Z^n, viewed through its indicator δ_S.
class IndicatorSet {
 public:
  // Points are sorted lexicographically. Throws InputError on an empty
  // list, mixed dimensions or duplicates.
  explicit IndicatorSet(std::vector<Point> points);

  std::size_t dim() const { return points_.front().size(); }
  const std::vector<Point>& points() const { return points_; }
  bool contains(PointView x) const;
  IntBox bounding_box() const { return IntBox::bounding(points_); }

  friend bool operator==(const IndicatorSet&, const IndicatorSet&) = default;

 private:
  std::vector<Point> points_;
};

// Dimension-checked evaluation; all throw InputError on a mismatch.
ExtendedValue eval(const QuadraticFunction& f, PointView x);
ExtendedValue eval(const SeparableFunction& f, PointView x);
ExtendedValue eval(const IndicatorSet& s, PointView x);

// Pointwise evaluation over `box`. Throws EmptyDomainError if nothing is finite there.
TableFunction materialize(const QuadraticFunction& f, const IntBox& box);
TableFunction materialize(const SeparableFunction& f, const IntBox& box);
TableFunction materialize(const IndicatorSet& s, const IntBox& box);

}  // namespace multimod
