#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multimod/checks.hpp"
#include "multimod/errors.hpp"
#include "multimod/harness.hpp"

using namespace multimod;
using namespace multimod::harness;

TEST_CASE("generator recipes produce multimodular tables") {
  CHECK(checks::is_multimodular(random_multimodular(default_recipe(RecipeKind::quadratic_l_class, 3, 1))).holds);
  CHECK(checks::is_multimodular(random_multimodular(default_recipe(RecipeKind::separable_conjugated, 2, 7))).holds);
  CHECK(checks::is_multimodular(random_multimodular(default_recipe(RecipeKind::mixed_sum, 4, 2))).holds);
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    for (auto kind : {RecipeKind::quadratic_l_class, RecipeKind::separable_conjugated, RecipeKind::mixed_sum})
      CHECK_NOTHROW(random_multimodular(default_recipe(kind, 1 + seed % 4, seed)));
}

TEST_CASE("generator is deterministic per seed") {
  const auto r = default_recipe(RecipeKind::mixed_sum, 3, 42);
  CHECK(random_multimodular(r) == random_multimodular(r));
  CHECK_FALSE(random_multimodular(r) == random_multimodular(default_recipe(RecipeKind::mixed_sum, 3, 43)));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
}

TEST_CASE("generator limits") {
  CHECK_THROWS_AS(random_multimodular(default_recipe(RecipeKind::quadratic_l_class, 6, 1)), InputError);
  GeneratorRecipe wide = default_recipe(RecipeKind::quadratic_l_class, 2, 1);
  wide.box = IntBox::cube(2, -5, 5);
  CHECK_THROWS_AS(random_multimodular(wide), InputError);
}

TEST_CASE("name round trips") {
  for (int k = 0; k < 3; ++k) {
    const auto kind = static_cast<RecipeKind>(k);
    CHECK(recipe_kind_from_string(to_string(kind)) == kind);
  }
  for (int k = 0; k <= static_cast<int>(Operation::convolve); ++k) {
    const auto op = static_cast<Operation>(k);
    CHECK(operation_from_string(to_string(op)) == op);
  }
  CHECK_FALSE(operation_from_string("rotate").has_value());
}

TEST_CASE("closure trials") {
  const auto scale = closure_trial(OpSpec{Operation::scale_vars, 2, {}, {}}, 50,
                                   default_recipe(RecipeKind::quadratic_l_class, 3, 5));
  CHECK(scale.trials == 50);
  CHECK(scale.preserved == 50);
  CHECK(scale.matches_expectation());
  CHECK(scale.observed() == 'Y');

  const auto proj = closure_campaign(OpSpec{Operation::projection_interval, {}, {}, {}}, 50, 9);
  CHECK(proj.preserved == 50);
  CHECK(proj.expected);

  const auto perm = closure_campaign(OpSpec{Operation::permutation, {}, {}, {}}, 50, 9);
  CHECK_FALSE(perm.expected);
  CHECK(perm.preserved + perm.violated == perm.trials);
  for (const auto& c : perm.counterexamples) CHECK(checks::confirms(c.witness, c.function));
}

TEST_CASE("closure reports are reproducible") {
  const OpSpec spec{Operation::convolve, {}, {}, {}};
  CHECK(to_json(closure_campaign(spec, 12, 77)).dump() == to_json(closure_campaign(spec, 12, 77)).dump());
}

TEST_CASE("table row for multimodular functions") {
  const auto row = table1_row(50, 1);
  REQUIRE(row.size() == 8);
  CHECK(table1_pattern(row) == "N Y Y N Y Y N N");
  for (const auto& r : row) {
    CAPTURE(r.operation);
    CHECK(r.matches_expectation());
    if (r.expected) {
      CHECK(r.violated == 0);
      CHECK(r.trials >= 50);
    } else {
      CHECK(r.fixture_certified);
    }
    for (const auto& c : r.counterexamples) CHECK(checks::confirms(c.witness, c.function));
  }
  CHECK(row[6].counterexamples.back().origin.find("S1") != std::string::npos);
  CHECK(row[7].counterexamples.back().origin.find("S1") != std::string::npos);
  CHECK(format_table1(row).find("Multimodular") != std::string::npos);
}

TEST_CASE("reproductions match") {
  for (const auto& id : repro_ids()) {
    if (id == "table-1") continue;
    CAPTURE(id);
    const ReproReport r = repro(id);
    CHECK(r.matched);
    CHECK(r.mismatches.empty());
    CHECK_FALSE(r.narrative.empty());
  }
  CHECK_THROWS_AS(repro("9.9"), InputError);
}
