#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "multimod/int_box.hpp"
#include "multimod/json_io.hpp"
#include "multimod/ops.hpp"
#include "multimod/table_function.hpp"
#include "multimod/witness.hpp"

namespace multimod::harness {

enum class RecipeKind {
  quadratic_l_class,     // g(p) = pᵀBp + cᵀp with B ∈ 𝓛, pulled back through D⁻¹
  separable_conjugated,  // g separable convex in p, pulled back through D⁻¹
  mixed_sum,             // sum of the two above plus a separable convex term in x
};

std::string to_string(RecipeKind kind);
std::optional<RecipeKind> recipe_kind_from_string(const std::string& name);

struct GeneratorRecipe {
  RecipeKind kind = RecipeKind::quadratic_l_class;
  std::size_t n = 2;
  IntBox box = IntBox::cube(2, -2, 2);
  std::uint64_t seed = 0;
};

// Recipe with the default campaign box [-2, 2]^n.
GeneratorRecipe default_recipe(RecipeKind kind, std::size_t n, std::uint64_t seed);

// A table that is multimodular by construction (n <= 5, box sides <= 9).
// The result is re-checked; std::logic_error signals a generator bug.
TableFunction random_multimodular(const GeneratorRecipe& recipe);

// A random multimodular table with a few values bumped or removed; it may or
// may not remain multimodular. Used for bridge-equivalence campaigns.
TableFunction random_perturbed(const GeneratorRecipe& recipe);

// Random discretely convex univariate pieces covering `box`, as a table on it.
TableFunction random_separable(const IntBox& box, std::mt19937_64& rng);

// Deterministic per-trial seed derived from a campaign seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

enum class Operation {
  shift,
  negate,
  reverse,
  permutation,
  scale_vars,
  scale_values,
  add_linear,
  add_separable,
  add,
  restriction,
  projection_interval,
  projection,
  convolve_separable,
  convolve,
};

std::string to_string(Operation op);
std::optional<Operation> operation_from_string(const std::string& name);
std::vector<std::string> operation_names();

// An operation with optional fixed parameters; unset parameters are drawn per trial.
struct OpSpec {
  Operation op = Operation::shift;
  std::optional<std::int64_t> scale;      // scale_vars
  std::optional<Rational> factor;         // scale_values
  std::optional<ops::IndexList> indices;  // permutation, restriction, projection
};

// The multimodular-row expectation: true = preserved.
bool expected_preserved(Operation op);

struct Counterexample {
  std::string origin;  // "trial 17" or the fixture name
  TableFunction function;
  Witness witness;
};

struct ClosureReport {
  std::string operation;
  std::size_t trials = 0;
  std::size_t preserved = 0;
  std::size_t violated = 0;
  bool expected = true;
  // Random-trial violations first (at most a few), then any deterministic fixture.
  std::vector<Counterexample> counterexamples;
  bool fixture_certified = false;

  // 'Y' when nothing was violated, 'N' when a validated counterexample exists.
  char observed() const;
  bool matches_expectation() const;
};

// Generates `trials` functions from `recipe` (cycling seeds per trial), applies
// the operation and tallies is_multimodular on the results.
ClosureReport closure_trial(const OpSpec& spec, std::size_t trials, const GeneratorRecipe& recipe);

// Same, cycling n over {2, 3, 4} and all three recipe kinds on [-2, 2]^n.
ClosureReport closure_campaign(const OpSpec& spec, std::size_t trials, std::uint64_t seed);

// The eight columns permutation, scaling, restriction, projection, f+φ,
// f1+f2, f□φ, f1□f2. N columns also carry their deterministic counterexample.
std::vector<ClosureReport> table1_row(std::size_t trials, std::uint64_t seed);
const std::vector<std::string>& table1_columns();
std::string table1_pattern(const std::vector<ClosureReport>& row);
std::string format_table1(const std::vector<ClosureReport>& row);

json_io::Json to_json(const ClosureReport& report);

struct ReproReport {
  std::string id;
  bool matched = true;
  std::vector<std::string> narrative;
  std::vector<std::string> mismatches;
};

class ReproductionError : public std::runtime_error {
 public:
  explicit ReproductionError(ReproReport report);
  const ReproReport& report() const { return report_; }

 private:
  ReproReport report_;
};

const std::vector<std::string>& repro_ids();

// Rebuilds one reference artifact ("3.1", "4.1", "4.2", "T-n4", "table-1") and
// compares it with the stored expectations. Throws ReproductionError with the
// full report on a mismatch and InputError on an unknown id.
ReproReport repro(const std::string& id);

json_io::Json to_json(const ReproReport& report);

}  // namespace multimod::harness
