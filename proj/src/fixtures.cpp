#include "multimod/fixtures.hpp"

namespace multimod::fixtures {

RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

namespace {

RationalMatrix halved(RationalMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) /= 2;
  return m;
}

IndicatorSet set_of(std::initializer_list<Point> points) { return IndicatorSet(std::vector<Point>(points)); }

}  // namespace

QuadraticFunction quadratic_a3() { return QuadraticFunction(rational_matrix({{1, 1, 0}, {1, 2, 1}, {0, 1, 1}})); }

QuadraticFunction quadratic_a3_swapped() {
  return QuadraticFunction(rational_matrix({{2, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
}

RationalMatrix conjugate_b3() { return rational_matrix({{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}}); }

RationalMatrix conjugate_b3_swapped() { return rational_matrix({{1, -1, 1}, {-1, 2, -1}, {1, -1, 1}}); }

QuadraticFunction quadratic_a4() {
  return QuadraticFunction(rational_matrix({{3, 2, 1, 0}, {2, 3, 2, 1}, {1, 2, 2, 1}, {0, 1, 1, 1}}));
}

RationalMatrix swept_a4() { return halved(rational_matrix({{5, 2, -1}, {2, 2, 0}, {-1, 0, 1}})); }

RationalMatrix conjugate_b4() {
  return rational_matrix({{2, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 1}});
}

RationalMatrix conjugate_swept_a4() { return halved(rational_matrix({{3, 1, -1}, {1, 3, -1}, {-1, -1, 1}})); }

IndicatorSet set_s1() { return set_of({{0, 0, 0}, {1, 0, -1}}); }
IndicatorSet set_s2() { return set_of({{0, 0, 0}, {0, 1, 0}}); }
IndicatorSet set_s1_plus_s2() { return set_of({{0, 0, 0}, {1, 0, -1}, {0, 1, 0}, {1, 1, -1}}); }
IndicatorSet set_t1() { return set_of({{0, 0, 0}, {1, 1, 0}}); }
IndicatorSet set_t2() { return set_of({{0, 0, 0}, {0, 1, 1}}); }
IndicatorSet set_t1_plus_t2() { return set_of({{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}}); }

IntegerMatrix displayed_d4() { return IntegerMatrix{{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}}; }

IntegerMatrix displayed_d4_inverse() {
  return IntegerMatrix{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}};
}

IntegerMatrix displayed_t4() { return IntegerMatrix{{0, 0, -1, 1}, {0, -1, 0, 1}, {-1, 0, 0, 1}, {0, 0, 0, 1}}; }

TableFunction sep2() {
  return TableFunction::generate(IntBox::cube(2, -2, 2),
                                 [](const Point& x) { return ExtendedValue(static_cast<long>(x[0] * x[0] + x[1] * x[1])); });
}

}  // namespace multimod::fixtures
