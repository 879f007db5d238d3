#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multimod/checks.hpp"
#include "multimod/fixtures.hpp"
#include "multimod/transforms.hpp"
#include "oracles.hpp"
#include "random_tables.hpp"

using namespace multimod;
using namespace multimod::checks;

namespace {

TableFunction table2(std::int64_t lo, std::int64_t hi, std::function<long(std::int64_t, std::int64_t)> fn) {
  return TableFunction::generate(IntBox::cube(2, lo, hi),
                                 [&](const Point& x) { return ExtendedValue(fn(x[0], x[1])); });
}

Point ij(const Verdict& v) { return v.witness->points.at(0); }

}  // namespace

TEST_CASE("direction set") {
  CHECK(direction_set_F(2) == std::vector<Point>{{-1, 0}, {1, -1}, {0, 1}});
  CHECK(direction_set_F(1) == std::vector<Point>{{-1}, {1}});
  const auto f3 = direction_set_F(3);
  CHECK(f3.size() == 4);
  Point sum(3, 0);
  for (const auto& d : f3)
    for (std::size_t i = 0; i < 3; ++i) sum[i] += d[i];
  CHECK(sum == Point{0, 0, 0});
  CHECK(f3 == oracle::multimodular_directions(3));
}

TEST_CASE("multimodularity of reference tables") {
  CHECK(is_multimodular(fixtures::sep2()).holds);
  CHECK(is_multimodular(materialize(fixtures::quadratic_a3(), IntBox::cube(3, -2, 2))).holds);
  const TableFunction swapped = materialize(fixtures::quadratic_a3_swapped(), IntBox::cube(3, -2, 2));
  const Verdict v = is_multimodular(swapped);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->kind == WitnessKind::multimodular);
  CHECK(v.witness->violated());
  CHECK(confirms(*v.witness, swapped));
}

TEST_CASE("multimodularity considers z outside the domain") {
  // f(z+d), f(z+d') finite while f(z) = +inf is a violation.
  const TableFunction f = materialize(fixtures::set_s1_plus_s2(), fixtures::set_s1_plus_s2().bounding_box());
  const Verdict v = is_multimodular(f);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->rhs.is_infinite());
  CHECK(v.witness->lhs == ExtendedValue(0));
  CHECK(confirms(*v.witness, f));
}

TEST_CASE("submodularity") {
  const Verdict prod = is_submodular(table2(0, 1, [](auto a, auto b) { return a * b; }));
  REQUIRE_FALSE(prod.holds);
  CHECK(prod.witness->lhs == ExtendedValue(0));
  CHECK(prod.witness->rhs == ExtendedValue(1));
  CHECK(is_submodular(fixtures::sep2()).holds);
  CHECK(is_submodular(table2(-2, 2, [](auto a, auto b) { return std::max(a, b); })).holds);
  CHECK(is_submodular(table2(-2, 2, [](auto a, auto b) { return std::max(a, b); }), SubmodularMode::all_pairs).holds);
}

TEST_CASE("submodularity modes agree on full boxes") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const TableFunction f = random_table(rng, 3, 0.0);
    const bool all = is_submodular(f, SubmodularMode::all_pairs).holds;
    CHECK(all == is_submodular(f, SubmodularMode::two_coordinate).holds);
    CHECK(all == oracle::submodular(oracle::from_table(f)));
  }
}

TEST_CASE("midpoint convexity") {
  const TableFunction t12 = materialize(fixtures::set_t1_plus_t2(), fixtures::set_t1_plus_t2().bounding_box());
  const Verdict v = is_lnat(t12);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->kind == WitnessKind::midpoint);
  CHECK(v.witness->points.at(0) == Point{0, 1, 1});
  CHECK(v.witness->points.at(1) == Point{1, 1, 0});
  CHECK(v.witness->points.at(2) == Point{1, 1, 1});
  CHECK(v.witness->points.at(3) == Point{0, 1, 0});
  CHECK(confirms(*v.witness, t12));

  CHECK(is_lnat(TableFunction::generate(IntBox::cube(2, -2, 2),
                                        [](const Point& p) { return ExtendedValue(static_cast<long>(p[0] * p[0])); }))
            .holds);
  CHECK(is_lnat(transforms::to_lnat(materialize(fixtures::quadratic_a3(), IntBox::cube(3, -2, 2)))).holds);
}

TEST_CASE("L-convexity and translation") {
  const Verdict lin = is_L_convex(table2(0, 2, [](auto a, auto b) { return b - a; }));
  CHECK(lin.holds);
  REQUIRE(lin.translation_step.has_value());
  CHECK(*lin.translation_step == 0);

  const Verdict sq = is_L_convex(table2(-2, 2, [](auto a, auto b) { return (b - a) * (b - a); }));
  CHECK(sq.holds);
  CHECK(*sq.translation_step == 0);

  const TableFunction h = table2(0, 2, [](auto a, auto) { return a * a; });
  const Verdict bad = is_L_convex(h);
  REQUIRE_FALSE(bad.holds);
  CHECK(bad.witness->kind == WitnessKind::translation);
  CHECK(confirms(*bad.witness, h));

  const TableFunction lone(IntBox({0, 0}, {1, 0}), {ExtendedValue(0), ExtendedValue(1)});
  const Verdict u = is_L_convex(lone);
  CHECK(u.holds);
  CHECK(u.translation_untestable);
}

TEST_CASE("quadratic criterion") {
  CHECK(is_quadratic_multimodular(fixtures::quadratic_a3()).holds);
  CHECK(is_quadratic_multimodular(fixtures::quadratic_a4()).holds);
  const Verdict a3 = is_quadratic_multimodular(fixtures::quadratic_a3_swapped());
  REQUIRE_FALSE(a3.holds);
  CHECK(ij(a3) == Point{1, 3});
  CHECK(confirms(*a3.witness, fixtures::quadratic_a3_swapped()));
  const QuadraticFunction swept(fixtures::swept_a4());
  const Verdict a4 = is_quadratic_multimodular(swept);
  REQUIRE_FALSE(a4.holds);
  CHECK(ij(a4) == Point{1, 2});
  CHECK(confirms(*a4.witness, swept));
}

TEST_CASE("class L") {
  CHECK(is_L_class(QuadraticFunction(fixtures::conjugate_b3())).holds);
  const Verdict b3 = is_L_class(QuadraticFunction(fixtures::conjugate_b3_swapped()));
  REQUIRE_FALSE(b3.holds);
  CHECK(ij(b3) == Point{1, 3});
  CHECK(b3.witness->rhs == ExtendedValue(1));
  const Verdict b4 = is_L_class(QuadraticFunction(fixtures::conjugate_swept_a4()));
  REQUIRE_FALSE(b4.holds);
  CHECK(b4.witness->rhs == ExtendedValue(Rational(1, 2)));
  CHECK(fixtures::conjugate_swept_a4() ==
        transforms::conjugate_quadratic(QuadraticFunction(fixtures::swept_a4())).matrix());
  // Diagonal dominance failure with nonpositive off-diagonals.
  CHECK_FALSE(is_L_class(QuadraticFunction(fixtures::rational_matrix({{1, -2}, {-2, 3}}))).holds);
}

TEST_CASE("point-set checks") {
  CHECK(is_multimodular_set(fixtures::set_s1()).holds);
  CHECK(is_multimodular_set(fixtures::set_s2()).holds);
  CHECK_FALSE(is_multimodular_set(fixtures::set_s1_plus_s2()).holds);
  CHECK(is_lnat_set(fixtures::set_t1()).holds);
  CHECK(is_lnat_set(fixtures::set_t2()).holds);
  CHECK_FALSE(is_lnat_set(fixtures::set_t1_plus_t2()).holds);
  std::vector<Point> box;
  IntBox({-1, 0, 2}, {1, 1, 2}).for_each([&](const Point& x, std::size_t) { box.push_back(x); });
  CHECK(is_lnat_set(IndicatorSet(box)).holds);
}

TEST_CASE("checkers agree with brute-force oracles on random tables") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 150; ++t) {
    const TableFunction f = random_table(rng, 3, 0.3);
    const auto o = oracle::from_table(f);
    const Verdict mm = is_multimodular(f);
    CHECK(mm.holds == oracle::multimodular(o, f.dim()));
    CHECK(is_lnat(f).holds == oracle::midpoint_convex(o));
    CHECK(is_submodular(f).holds == oracle::submodular(o));
    if (!mm.holds) CHECK(confirms(*mm.witness, f));
  }
}

TEST_CASE("witnesses are deterministic across thread counts") {
  const TableFunction swapped = materialize(fixtures::quadratic_a3_swapped(), IntBox::cube(3, -2, 2));
  setenv("DCA_THREADS", "1", 1);
  const Witness one = *is_multimodular(swapped).witness;
  setenv("DCA_THREADS", "4", 1);
  const Witness four = *is_multimodular(swapped).witness;
  unsetenv("DCA_THREADS");
  CHECK(one == four);
}
