#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "multimod/errors.hpp"
#include "multimod/fixtures.hpp"
#include "multimod/json_io.hpp"
#include "multimod/parallel.hpp"
#include "multimod/symbolic.hpp"
#include "multimod/table_function.hpp"

using namespace multimod;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK(is_integer(Rational(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 3)));
}

TEST_CASE("integer half and division rounding") {
  for (std::int64_t a = -7; a <= 7; ++a) {
    CHECK(floor_half(a) + ceil_half(a) == a);
    CHECK(floor_half(a) * 2 <= a);
    CHECK(ceil_half(a) * 2 >= a);
    for (std::int64_t b = 1; b <= 3; ++b) {
      CHECK(floor_div(a, b) * b <= a);
      CHECK((floor_div(a, b) + 1) * b > a);
      CHECK(ceil_div(a, b) * b >= a);
      CHECK((ceil_div(a, b) - 1) * b < a);
    }
  }
}

TEST_CASE("extended arithmetic") {
  const ExtendedValue inf;
  const ExtendedValue two(2), half(Rational(1, 2));
  CHECK(inf.is_infinite());
  CHECK((inf + two).is_infinite());
  CHECK((two + half).value() == Rational(5, 2));
  CHECK(inf.scaled(0).is_infinite());
  CHECK(two.scaled(0) == ExtendedValue(0));
  CHECK(two < inf);
  CHECK(half < two);
  CHECK(inf == ExtendedValue::infinity());
  CHECK(inf.to_string() == "inf");
  CHECK(half.to_string() == "1/2");
  CHECK_THROWS(inf.value());
}

TEST_CASE("box enumeration is row-major") {
  const IntBox box({0, -1}, {1, 1});
  CHECK(box.size() == 6);
  std::vector<Point> seen;
  box.for_each([&](const Point& x, std::size_t i) {
    CHECK(box.index_of(x) == i);
    CHECK(box.point_at(i) == x);
    seen.push_back(x);
  });
  CHECK(seen.front() == Point{0, -1});
  CHECK(seen[1] == Point{0, 0});
  CHECK(seen.back() == Point{1, 1});
  CHECK(box.contains(Point{1, 0}));
  CHECK_FALSE(box.contains(Point{2, 0}));
  CHECK(box.inflated(1) == IntBox({-1, -2}, {2, 2}));
  CHECK_FALSE(box.intersect(IntBox({5, 5}, {6, 6})).has_value());
  CHECK(IntBox::bounding({{0, 3}, {2, -1}}) == IntBox({0, -1}, {2, 3}));
  CHECK_THROWS_AS(IntBox({1}, {0}), InputError);
  CHECK_THROWS_AS(IntBox({0, 0}, {1}), InputError);
}

TEST_CASE("table function is +inf outside its box") {
  const TableFunction f = fixtures::sep2();
  CHECK(f(Point{1, -2}) == ExtendedValue(5));
  CHECK(f(Point{3, 0}).is_infinite());
  CHECK_THROWS_AS(f(Point{0}), InputError);
  CHECK_THROWS_AS(TableFunction(IntBox::cube(1, 0, 1), {ExtendedValue(1)}), InputError);
  CHECK_THROWS_AS(TableFunction(IntBox::cube(1, 0, 1), {ExtendedValue(), ExtendedValue()}), EmptyDomainError);
  CHECK(effective_domain(f).size() == 25);
  const TableFunction c = f.cropped(IntBox::cube(2, 0, 3));
  CHECK(c.box() == IntBox::cube(2, 0, 3));
  CHECK(c(Point{3, 3}).is_infinite());
  CHECK(c(Point{1, 1}) == ExtendedValue(2));
  CHECK(c.same_function(f.cropped(IntBox::cube(2, 0, 2))));
  CHECK_FALSE(c.same_function(f));
}

TEST_CASE("symbolic evaluation") {
  CHECK(eval(fixtures::quadratic_a3(), Point{1, 1, 1}) == ExtendedValue(8));
  CHECK(materialize(fixtures::quadratic_a3(), IntBox::cube(3, 0, 1))(Point{1, 1, 1}) == ExtendedValue(8));
  CHECK(eval(fixtures::set_s1(), Point{0, 1, 0}).is_infinite());
  CHECK(eval(fixtures::set_s1(), Point{1, 0, -1}) == ExtendedValue(0));

  const TableFunction s1 = materialize(fixtures::set_s1(), IntBox::cube(3, -1, 1));
  CHECK(effective_domain(s1) == std::vector<Point>{{0, 0, 0}, {1, 0, -1}});
  const TableFunction s2 = materialize(fixtures::set_s2(), IntBox::cube(3, -1, 1));
  CHECK(effective_domain(s2) == std::vector<Point>{{0, 0, 0}, {0, 1, 0}});

  const QuadraticFunction q(fixtures::rational_matrix({{1, 2}, {2, 1}}), std::vector<Rational>{1, -1});
  CHECK(q(Point{1, 2}) == Rational(1 + 8 + 4 + 1 - 2));
  CHECK_THROWS_AS(QuadraticFunction(fixtures::rational_matrix({{1, 2}, {2, 1}}), std::vector<Rational>{1}),
                  InputError);
}

TEST_CASE("asymmetric quadratic input is symmetrized") {
  const QuadraticFunction q(fixtures::rational_matrix({{1, 2}, {0, 1}}));
  CHECK(q.symmetrized());
  CHECK(q.matrix()(0, 1) == 1);
  CHECK(q.matrix()(1, 0) == 1);
  CHECK(q(Point{1, 1}) == 4);
}

TEST_CASE("separable pieces must be discretely convex") {
  const SeparableFunction ok({UnivariatePiece{-1, {1, 0, 1}}, UnivariatePiece{0, {0, 2}}});
  CHECK(ok.support_box() == IntBox({-1, 0}, {1, 1}));
  CHECK(ok(Point{-1, 1}) == ExtendedValue(3));
  CHECK(ok(Point{2, 0}).is_infinite());
  CHECK_THROWS_AS(SeparableFunction({UnivariatePiece{0, {0, 2, 1}}}), InputError);
}

TEST_CASE("indicator sets reject bad input") {
  CHECK_THROWS_AS(IndicatorSet({}), InputError);
  CHECK_THROWS_AS(IndicatorSet({{0, 0}, {0}}), InputError);
  CHECK_THROWS_AS(IndicatorSet({{0, 0}, {0, 0}}), InputError);
}

TEST_CASE("json round trip keeps exact values") {
  const TableFunction f = TableFunction::generate(IntBox::cube(2, 0, 1), [](const Point& x) -> ExtendedValue {
    if (x[0] == 1 && x[1] == 1) return ExtendedValue::infinity();
    return Rational(x[0] + 2 * x[1], 3);
  });
  const json_io::Json j = json_io::to_json(f);
  CHECK(j["values"][1] == "2/3");
  CHECK(j["values"][3] == "inf");
  CHECK(j["values"][0] == 0);
  const auto back = json_io::parse_document(j);
  REQUIRE(std::holds_alternative<TableFunction>(back));
  CHECK(std::get<TableFunction>(back) == f);

  const auto q = json_io::parse_document(json_io::to_json(fixtures::quadratic_a4()));
  REQUIRE(std::holds_alternative<QuadraticFunction>(q));
  CHECK(std::get<QuadraticFunction>(q).matrix() == fixtures::quadratic_a4().matrix());

  const auto s = json_io::parse_document(json_io::to_json(fixtures::set_t1_plus_t2()));
  CHECK(std::get<IndicatorSet>(s) == fixtures::set_t1_plus_t2());
}

TEST_CASE("json input errors") {
  CHECK_THROWS_AS(json_io::parse_document_text("{"), InputError);
  CHECK_THROWS_AS(json_io::parse_document_text(R"({"kind":"blob"})"), InputError);
  CHECK_THROWS_AS(json_io::parse_document_text(R"({"kind":"table","lower":[0],"upper":[1],"values":[0.5,1]})"),
                  InputError);
  CHECK_THROWS_AS(json_io::parse_document_text(R"({"kind":"table","lower":[0],"upper":[1],"values":[1]})"),
                  InputError);
  CHECK_THROWS_AS(json_io::load_document("/nonexistent/file.json"), InputError);
}

TEST_CASE("parallel sweep returns the lowest-index witness for any worker count") {
  auto scan = [](std::size_t i) {
    ItemScan s;
    s.checked = 1;
    if (i % 37 == 5) s.witness = Witness{WitnessKind::submodular, {{static_cast<std::int64_t>(i)}}, 1, 2, {}};
    return s;
  };
  for (const char* threads : {"1", "3", "8"}) {
    setenv("DCA_THREADS", threads, 1);
    const SweepResult r = sweep_items(1000, scan);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->points[0] == Point{5});
  }
  unsetenv("DCA_THREADS");
  CHECK(sweep_items(100, [](std::size_t) { return ItemScan{1, std::nullopt}; }).checked == 100);
}

TEST_CASE("witness description shows substituted values") {
  const Witness w{WitnessKind::submodular, {{1, 0}, {0, 1}}, 1, 3, {ExtendedValue(0), ExtendedValue(1),
                                                                       ExtendedValue(1), ExtendedValue(2)}};
  CHECK(w.violated());
  const std::string text = w.describe();
  CHECK(text.find("(1,0)") != std::string::npos);
  CHECK(text.find("<") != std::string::npos);
  CHECK(witness_kind_from_string(to_string(WitnessKind::quadratic_criterion)) == WitnessKind::quadratic_criterion);
}
