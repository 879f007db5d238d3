#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multimod/checks.hpp"
#include "multimod/errors.hpp"
#include "multimod/fixtures.hpp"
#include "multimod/transforms.hpp"
#include "oracles.hpp"
#include "random_tables.hpp"

using namespace multimod;
using namespace multimod::transforms;

namespace {

IntegerMatrix int_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) { return IntegerMatrix(rows); }

TableFunction set_table(const IndicatorSet& s) { return materialize(s, s.bounding_box()); }

}  // namespace

TEST_CASE("displayed matrices for n = 4") {
  CHECK(bidiagonal_D(4) == fixtures::displayed_d4());
  CHECK(inverse_D(4) == fixtures::displayed_d4_inverse());
  CHECK(reversal_T(4) == fixtures::displayed_t4());
  CHECK(bidiagonal_D(4) == int_matrix({{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}}));
  CHECK(reversal_T(4) == int_matrix({{0, 0, -1, 1}, {0, -1, 0, 1}, {-1, 0, 0, 1}, {0, 0, 0, 1}}));
}

TEST_CASE("reversal matrix for small n") {
  CHECK(reversal_T(3) == int_matrix({{0, -1, 1}, {-1, 0, 1}, {0, 0, 1}}));
  CHECK(reversal_T(1) == int_matrix({{1}}));
  CHECK(reversal_R(3) == int_matrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("matrix identities up to n = 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(bidiagonal_D(n) * inverse_D(n) == IntegerMatrix::identity(n));
    CHECK(inverse_D(n) * bidiagonal_D(n) == IntegerMatrix::identity(n));
    CHECK(reversal_T(n) == inverse_D(n) * reversal_R(n) * bidiagonal_D(n));
  }
}

TEST_CASE("to_lnat maps point sets by prefix sums") {
  const TableFunction g = to_lnat(set_table(fixtures::set_s1()));
  CHECK(effective_domain(g) == fixtures::set_t1().points());
  const TableFunction g12 = to_lnat(set_table(fixtures::set_s1_plus_s2()));
  CHECK(effective_domain(g12) == fixtures::set_t1_plus_t2().points());
}

TEST_CASE("to_lnat of a separable quadratic") {
  const TableFunction g = to_lnat(fixtures::sep2());
  // g(p) = p1^2 + (p2 - p1)^2
  CHECK(g(Point{1, 3}) == ExtendedValue(5));
  CHECK(g(Point{-2, -4}) == ExtendedValue(8));
  CHECK(g(Point{2, 5}).is_infinite());
}

TEST_CASE("from_lnat of sets and of a max function") {
  const TableFunction f = from_lnat(set_table(fixtures::set_t2()));
  CHECK(effective_domain(f) == fixtures::set_s2().points());

  const TableFunction g = TableFunction::generate(IntBox::cube(2, 0, 2), [](const Point& p) {
    return ExtendedValue(static_cast<long>(std::max(p[0], p[1])));
  });
  const TableFunction h = from_lnat(g);
  CHECK(h(Point{1, 1}) == ExtendedValue(2));
  CHECK(h(Point{2, -1}) == ExtendedValue(2));
  CHECK(h(Point{0, 2}) == ExtendedValue(2));
  CHECK(h(Point{2, 1}).is_infinite());
}

TEST_CASE("round trip is the identity on random tables") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const TableFunction f = random_table(rng);
    CHECK(from_lnat(to_lnat(f)).cropped(f.box()) == f);
    CHECK(to_lnat(from_lnat(f)).cropped(f.box()) == f);
  }
}

TEST_CASE("pullback agrees with the oracle image") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const TableFunction f = random_table(rng);
    CHECK(oracle::from_table(to_lnat(f)) == oracle::to_lnat(oracle::from_table(f)));
  }
}

TEST_CASE("multimodular lifting of the three-variable forms") {
  const TableFunction a3 = materialize(fixtures::quadratic_a3(), IntBox::cube(3, -1, 1));
  const TableFunction a3s = materialize(fixtures::quadratic_a3_swapped(), IntBox::cube(3, -1, 1));
  const TableFunction lifted = lift_multimodular(a3);
  CHECK(lifted.dim() == 4);
  CHECK(checks::is_submodular(lifted).holds);
  const Verdict bad = checks::is_submodular(lift_multimodular(a3s));
  REQUIRE_FALSE(bad.holds);
  CHECK(checks::confirms(*bad.witness, lift_multimodular(a3s)));
  // f~(x0, x) = f(x1 - x0, x2 - x1, x3 - x2)
  CHECK(lifted(Point{1, 2, 2, 3}) == a3(Point{1, 0, 1}));
}

TEST_CASE("L-natural lifting") {
  const TableFunction t1 = set_table(fixtures::set_t1());
  CHECK(checks::is_submodular(lift_lnat(t1)).holds);
  const TableFunction g = TableFunction::generate(IntBox::cube(2, 0, 2), [](const Point& p) {
    return ExtendedValue(static_cast<long>(-p[0] * p[1]));
  });
  CHECK_FALSE(checks::is_lnat(g).holds);
  CHECK_FALSE(checks::is_submodular(lift_lnat(g)).holds);
  // g~(p0, p) = g(p - p0 1)
  const TableFunction lg = lift_lnat(g, LiftWindow{-1, 2});
  CHECK(lg(Point{1, 2, 3}) == g(Point{1, 2}));
  CHECK_THROWS_AS(lift_lnat(g, LiftWindow{1, 0}), InputError);
}

TEST_CASE("quadratic conjugation") {
  CHECK(conjugate_quadratic(fixtures::quadratic_a3()).matrix() == fixtures::conjugate_b3());
  CHECK(conjugate_quadratic(fixtures::quadratic_a3_swapped()).matrix() == fixtures::conjugate_b3_swapped());
  CHECK(conjugate_quadratic(fixtures::quadratic_a4()).matrix() ==
        fixtures::rational_matrix({{2, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 1}}));
  CHECK(fixtures::conjugate_b3_swapped()(0, 2) == 1);
  CHECK(fixtures::conjugate_b3_swapped()(2, 0) == 1);

  const QuadraticFunction q(fixtures::quadratic_a3().matrix(), std::vector<Rational>{1, Rational(-1, 2), 3});
  const QuadraticFunction b = conjugate_quadratic(q);
  const IntegerMatrix d = bidiagonal_D(3);
  IntBox::cube(3, -2, 2).for_each([&](const Point& x, std::size_t) {
    const Point dx = d.apply<std::int64_t>(x);
    CHECK(b(x) == q(dx));
  });
}
