#include "multimod/transforms.hpp"

#include <algorithm>

#include "multimod/errors.hpp"

namespace multimod::transforms {

namespace {

void require_positive(std::size_t n) {
  if (n == 0) throw InputError("matrix order must be >= 1");
}

IntBox image_box(const IntBox& box, const IntegerMatrix& m) {
  Point lo(m.rows(), 0), hi(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::int64_t a = m(i, j) * box.lower()[j];
      const std::int64_t b = m(i, j) * box.upper()[j];
      lo[i] += std::min(a, b);
      hi[i] += std::max(a, b);
    }
  return IntBox(std::move(lo), std::move(hi));
}

void require_window(LiftWindow window) {
  if (window.lo > window.hi) throw InputError("empty lifting window");
}

}  // namespace

IntegerMatrix bidiagonal_D(std::size_t n) {
  require_positive(n);
  IntegerMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = 1;
    if (i + 1 < n) d(i + 1, i) = -1;
  }
  return d;
}

IntegerMatrix inverse_D(std::size_t n) {
  require_positive(n);
  IntegerMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) d(i, j) = 1;
  return d;
}

IntegerMatrix reversal_R(std::size_t n) {
  require_positive(n);
  IntegerMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, n - 1 - i) = 1;
  return r;
}

IntegerMatrix reversal_T(std::size_t n) {
  require_positive(n);
  IntegerMatrix t(n, n);
  // 1-based: t_{i,n} = 1 for all i, t_{i,n-i} = -1 for i < n.
  for (std::size_t i = 0; i < n; ++i) t(i, n - 1) = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) t(i, n - 2 - i) = -1;
  return t;
}

TableFunction pullback(const TableFunction& f, const IntegerMatrix& m, const IntegerMatrix& m_inverse) {
  if (m.rows() != f.dim() || m.cols() != f.dim() || !(m * m_inverse == IntegerMatrix::identity(f.dim())))
    throw InputError("pullback needs a square unimodular matrix with its inverse");
  const IntBox box = image_box(f.box(), m_inverse);
  return TableFunction::generate(box, [&](const Point& p) {
    const Point x = m.apply<std::int64_t>(p);
    return f(x);
  });
}

TableFunction to_lnat(const TableFunction& f) {
  return pullback(f, bidiagonal_D(f.dim()), inverse_D(f.dim()));
}

TableFunction from_lnat(const TableFunction& g) {
  return pullback(g, inverse_D(g.dim()), bidiagonal_D(g.dim()));
}

TableFunction lift_multimodular(const TableFunction& f, LiftWindow window) {
  require_window(window);
  const std::size_t n = f.dim();
  Point lo{window.lo}, hi{window.hi};
  std::int64_t sum_lo = window.lo, sum_hi = window.hi;
  for (std::size_t k = 0; k < n; ++k) {
    sum_lo += f.box().lower()[k];
    sum_hi += f.box().upper()[k];
    lo.push_back(sum_lo);
    hi.push_back(sum_hi);
  }
  Point y(n);
  return TableFunction::generate(IntBox(std::move(lo), std::move(hi)), [&](const Point& x) {
    for (std::size_t k = 0; k < n; ++k) y[k] = x[k + 1] - x[k];
    return f(y);
  });
}

TableFunction lift_lnat(const TableFunction& g, LiftWindow window) {
  require_window(window);
  const std::size_t n = g.dim();
  Point lo{window.lo}, hi{window.hi};
  for (std::size_t k = 0; k < n; ++k) {
    lo.push_back(g.box().lower()[k] + window.lo);
    hi.push_back(g.box().upper()[k] + window.hi);
  }
  Point p(n);
  return TableFunction::generate(IntBox(std::move(lo), std::move(hi)), [&](const Point& x) {
    for (std::size_t k = 0; k < n; ++k) p[k] = x[k + 1] - x[0];
    return g(p);
  });
}

QuadraticFunction conjugate_quadratic(const QuadraticFunction& f) {
  const RationalMatrix d = to_rational(bidiagonal_D(f.dim()));
  RationalMatrix b = d.transposed() * f.matrix() * d;
  std::optional<std::vector<Rational>> linear;
  if (f.linear()) linear = d.transposed().apply<Rational>(*f.linear());
  return QuadraticFunction(std::move(b), std::move(linear));
}

}  // namespace multimod::transforms
