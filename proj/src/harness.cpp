#include "multimod/harness.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "multimod/checks.hpp"
#include "multimod/errors.hpp"
#include "multimod/fixtures.hpp"
#include "multimod/symbolic.hpp"
#include "multimod/transforms.hpp"

namespace multimod::harness {

namespace {

constexpr std::size_t kMaxGeneratorDim = 5;
constexpr std::int64_t kMaxGeneratorSide = 9;
constexpr std::size_t kStoredTrialCounterexamples = 3;

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Point box_center(const IntBox& box) {
  Point c(box.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = floor_half(box.lower()[i] + box.upper()[i]);
  return c;
}

// Convex piece on [lo, hi] built from nondecreasing integer slopes; with
// probability `truncate` it is cut down to a random subinterval around `anchor`.
UnivariatePiece random_convex_piece(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t anchor,
                                    double truncate) {
  if (coin(rng, truncate)) {
    lo = uniform(rng, lo, anchor);
    hi = uniform(rng, anchor, hi);
  }
  const auto len = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::int64_t> slopes(len > 0 ? len - 1 : 0);
  for (auto& s : slopes) s = uniform(rng, -4, 4);
  std::sort(slopes.begin(), slopes.end());
  UnivariatePiece piece{lo, {}};
  Rational v(static_cast<long>(uniform(rng, -3, 3)));
  const Rational unit = coin(rng, 0.3) ? Rational(1, 2) : Rational(1);
  piece.values.push_back(v);
  for (auto s : slopes) {
    v += unit * static_cast<long>(s);
    piece.values.push_back(v);
  }
  return piece;
}

QuadraticFunction random_l_class(std::size_t n, std::mt19937_64& rng) {
  RationalMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, 0.6)) {
        Rational v(-static_cast<long>(uniform(rng, 1, 4)), 2);
        b(i, j) = v;
        b(j, i) = v;
      }
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) s += abs(b(i, j));
    b(i, i) = s + Rational(static_cast<long>(uniform(rng, 0, 2))) / 2;
  }
  std::vector<Rational> c(n);
  for (auto& v : c) v = Rational(static_cast<long>(uniform(rng, -3, 3)));
  return QuadraticFunction(std::move(b), std::move(c));
}

// f(x) = g(D⁻¹x) on `box`.
TableFunction pulled_back(const IntBox& box, const std::function<ExtendedValue(const Point&)>& g) {
  const IntegerMatrix dinv = transforms::inverse_D(box.dim());
  return TableFunction::generate(box, [&](const Point& x) { return g(dinv.apply<std::int64_t>(x)); });
}

TableFunction quadratic_l_class_table(const IntBox& box, std::mt19937_64& rng) {
  const QuadraticFunction g = random_l_class(box.dim(), rng);
  return pulled_back(box, [&](const Point& p) { return eval(g, p); });
}

TableFunction separable_conjugated_table(const IntBox& box, std::mt19937_64& rng) {
  const std::size_t n = box.dim();
  const Point anchor = transforms::inverse_D(n).apply<std::int64_t>(box_center(box));
  std::vector<UnivariatePiece> pieces;
  std::int64_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lo += box.lower()[i];
    hi += box.upper()[i];
    pieces.push_back(random_convex_piece(rng, lo, hi, anchor[i], 0.3));
  }
  const SeparableFunction g(std::move(pieces));
  return pulled_back(box, [&](const Point& p) { return eval(g, p); });
}

void validate_recipe(const GeneratorRecipe& r) {
  if (r.n == 0 || r.n > kMaxGeneratorDim) throw InputError("generator dimension must lie in 1..5");
  if (r.box.dim() != r.n) throw InputError("generator box dimension differs from n");
  for (std::size_t i = 0; i < r.n; ++i)
    if (r.box.extent(i) > kMaxGeneratorSide) throw InputError("generator box sides are limited to 9 points");
}

ops::IndexList random_subset(std::mt19937_64& rng, std::size_t n, bool proper) {
  for (;;) {
    ops::IndexList u;
    for (std::size_t k = 1; k <= n; ++k)
      if (coin(rng, 0.5)) u.push_back(k);
    if (!u.empty() && (!proper || u.size() < n)) return u;
  }
}

ops::IndexList random_interval(std::mt19937_64& rng, std::size_t n) {
  const auto len = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(n) - 1));
  const auto first = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(n - len + 1)));
  ops::IndexList u(len);
  std::iota(u.begin(), u.end(), first);
  return u;
}

ops::IndexList random_transposition(std::mt19937_64& rng, std::size_t n) {
  ops::IndexList sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{1});
  const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
  const auto j = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(i) + 1, static_cast<std::int64_t>(n) - 1));
  std::swap(sigma[i], sigma[j]);
  return sigma;
}

TableFunction apply_operation(const OpSpec& spec, const TableFunction& f, const GeneratorRecipe& recipe,
                              std::mt19937_64& rng) {
  const std::size_t n = f.dim();
  switch (spec.op) {
    case Operation::shift: {
      Point b(n);
      for (auto& v : b) v = uniform(rng, -2, 2);
      return ops::shift(f, b);
    }
    case Operation::negate:
      return ops::negate_vars(f);
    case Operation::reverse:
      return ops::reverse_vars(f);
    case Operation::permutation:
      if (n < 2 && !spec.indices) return f;
      return ops::permute_vars(f, spec.indices ? *spec.indices : random_transposition(rng, n));
    case Operation::scale_vars:
      return ops::scale_vars(f, spec.scale ? *spec.scale : uniform(rng, 2, 3));
    case Operation::scale_values: {
      static const std::array<Rational, 5> factors{Rational(0), Rational(1, 2), Rational(1), Rational(2),
                                                   Rational(7, 3)};
      return ops::scale_values(f, spec.factor ? *spec.factor : factors[static_cast<std::size_t>(uniform(rng, 0, 4))]);
    }
    case Operation::add_linear: {
      std::vector<Rational> c(n);
      for (auto& v : c) v = Rational(static_cast<long>(uniform(rng, -4, 4))) / 2;
      return ops::add_linear(f, c);
    }
    case Operation::add_separable:
      return ops::add(f, random_separable(f.box(), rng));
    case Operation::add: {
      GeneratorRecipe other = recipe;
      other.kind = static_cast<RecipeKind>(uniform(rng, 0, 2));
      other.seed = rng();
      return ops::add(f, random_multimodular(other));
    }
    case Operation::restriction:
      return ops::restrict(f, spec.indices ? *spec.indices : random_subset(rng, n, false));
    case Operation::projection_interval:
      if (n < 2) return f;
      return ops::project(f, spec.indices ? *spec.indices : random_interval(rng, n));
    case Operation::projection:
      if (n < 2) return f;
      return ops::project(f, spec.indices ? *spec.indices : random_subset(rng, n, true));
    case Operation::convolve_separable:
      return ops::convolve(f, random_separable(IntBox::cube(n, -1, 1), rng));
    case Operation::convolve: {
      GeneratorRecipe other{static_cast<RecipeKind>(uniform(rng, 0, 2)), n, IntBox::cube(n, -1, 1), rng()};
      return ops::convolve(f, random_multimodular(other));
    }
  }
  throw InputError("unknown operation");
}

void run_trial(const OpSpec& spec, const GeneratorRecipe& recipe, std::size_t trial, ClosureReport& report) {
  const TableFunction f = random_multimodular(recipe);
  std::mt19937_64 rng(recipe.seed ^ 0x5bd1e995u);
  TableFunction result = [&] {
    try {
      return apply_operation(spec, f, recipe, rng);
    } catch (const EmptyDomainError& e) {
      throw InputError("trial " + std::to_string(trial) + ": " + e.what());
    }
  }();
  ++report.trials;
  Verdict v = checks::is_multimodular(result);
  if (v.holds) {
    ++report.preserved;
    return;
  }
  ++report.violated;
  if (report.counterexamples.size() < kStoredTrialCounterexamples && checks::confirms(*v.witness, result))
    report.counterexamples.push_back({"trial " + std::to_string(trial), std::move(result), std::move(*v.witness)});
}

std::optional<Counterexample> fixture_for(Operation op) {
  auto certify = [](std::string origin, TableFunction g) -> std::optional<Counterexample> {
    Verdict v = checks::is_multimodular(g);
    if (v.holds || !checks::confirms(*v.witness, g)) return std::nullopt;
    return Counterexample{std::move(origin), std::move(g), std::move(*v.witness)};
  };
  switch (op) {
    case Operation::permutation:
      return certify("3x3 form A3 with x1 and x2 swapped, on [-2,2]^3",
                     ops::permute_vars(materialize(fixtures::quadratic_a3(), IntBox::cube(3, -2, 2)), {2, 1, 3}));
    case Operation::projection:
      return certify("4x4 form A4 projected to U={1,2,4}, on [-3,3]^4",
                     ops::project(materialize(fixtures::quadratic_a4(), IntBox::cube(4, -3, 3)), {1, 2, 4}));
    case Operation::convolve_separable:
    case Operation::convolve: {
      const IndicatorSet s1 = fixtures::set_s1(), s2 = fixtures::set_s2();
      return certify("indicator of S1 convolved with indicator of the interval S2",
                     ops::convolve(materialize(s1, s1.bounding_box()), materialize(s2, s2.bounding_box())));
    }
    default:
      return std::nullopt;
  }
}

constexpr std::array<std::pair<Operation, const char*>, 14> kOperationNames{{
    {Operation::shift, "shift"},
    {Operation::negate, "negate"},
    {Operation::reverse, "reverse"},
    {Operation::permutation, "permute"},
    {Operation::scale_vars, "scale-vars"},
    {Operation::scale_values, "scale-values"},
    {Operation::add_linear, "add-linear"},
    {Operation::add_separable, "add-separable"},
    {Operation::add, "add"},
    {Operation::restriction, "restrict"},
    {Operation::projection_interval, "project-interval"},
    {Operation::projection, "project"},
    {Operation::convolve_separable, "convolve-separable"},
    {Operation::convolve, "convolve"},
}};

constexpr std::array<std::pair<RecipeKind, const char*>, 3> kRecipeNames{{
    {RecipeKind::quadratic_l_class, "quadratic-L-class"},
    {RecipeKind::separable_conjugated, "separable-conjugated"},
    {RecipeKind::mixed_sum, "mixed-sum"},
}};

const std::array<Operation, 8> kTable1Ops{Operation::permutation,   Operation::scale_vars,
                                          Operation::restriction,   Operation::projection,
                                          Operation::add_separable, Operation::add,
                                          Operation::convolve_separable, Operation::convolve};

}  // namespace

std::string to_string(RecipeKind kind) {
  for (const auto& [k, name] : kRecipeNames)
    if (k == kind) return name;
  return "?";
}

std::optional<RecipeKind> recipe_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kRecipeNames)
    if (name == n) return k;
  return std::nullopt;
}

std::string to_string(Operation op) {
  for (const auto& [o, name] : kOperationNames)
    if (o == op) return name;
  return "?";
}

std::optional<Operation> operation_from_string(const std::string& name) {
  for (const auto& [o, n] : kOperationNames)
    if (name == n) return o;
  return std::nullopt;
}

std::vector<std::string> operation_names() {
  std::vector<std::string> names;
  for (const auto& entry : kOperationNames) names.emplace_back(entry.second);
  return names;
}

GeneratorRecipe default_recipe(RecipeKind kind, std::size_t n, std::uint64_t seed) {
  return GeneratorRecipe{kind, n, IntBox::cube(n, -2, 2), seed};
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

TableFunction random_separable(const IntBox& box, std::mt19937_64& rng) {
  std::vector<UnivariatePiece> pieces;
  for (std::size_t i = 0; i < box.dim(); ++i)
    pieces.push_back(random_convex_piece(rng, box.lower()[i], box.upper()[i], box.lower()[i], 0.0));
  return materialize(SeparableFunction(std::move(pieces)), box);
}

TableFunction random_multimodular(const GeneratorRecipe& recipe) {
  validate_recipe(recipe);
  std::mt19937_64 rng(recipe.seed);
  TableFunction f = [&] {
    switch (recipe.kind) {
      case RecipeKind::quadratic_l_class:
        return quadratic_l_class_table(recipe.box, rng);
      case RecipeKind::separable_conjugated:
        return separable_conjugated_table(recipe.box, rng);
      case RecipeKind::mixed_sum:
        break;
    }
    TableFunction sum = ops::add(quadratic_l_class_table(recipe.box, rng), separable_conjugated_table(recipe.box, rng));
    return ops::add(sum, random_separable(recipe.box, rng));
  }();
  if (!checks::is_multimodular(f).holds)
    throw std::logic_error("generator produced a non-multimodular table (recipe " + to_string(recipe.kind) +
                           ", seed " + std::to_string(recipe.seed) + ")");
  return f;
}

TableFunction random_perturbed(const GeneratorRecipe& recipe) {
  const TableFunction f = random_multimodular(recipe);
  std::mt19937_64 rng(recipe.seed ^ 0xa0761d6478bd642full);
  std::vector<ExtendedValue> values = f.values();
  const std::vector<std::size_t> dom = domain_indices(f);
  const auto edits = uniform(rng, 1, 3);
  std::size_t finite = dom.size();
  for (std::int64_t e = 0; e < edits; ++e) {
    const std::size_t idx = dom[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(dom.size()) - 1))];
    if (values[idx].is_infinite()) continue;
    if (finite > 1 && coin(rng, 0.3)) {
      values[idx] = ExtendedValue::infinity();
      --finite;
    } else {
      auto bump = uniform(rng, -3, 3);
      if (bump == 0) bump = 1;
      values[idx] += ExtendedValue(static_cast<long>(bump));
    }
  }
  return TableFunction(f.box(), std::move(values));
}

bool expected_preserved(Operation op) {
  switch (op) {
    case Operation::permutation:
    case Operation::projection:
    case Operation::convolve_separable:
    case Operation::convolve:
      return false;
    default:
      return true;
  }
}

char ClosureReport::observed() const { return counterexamples.empty() && violated == 0 ? 'Y' : 'N'; }

bool ClosureReport::matches_expectation() const {
  if (expected) return violated == 0 && counterexamples.empty();
  return !counterexamples.empty();
}

ClosureReport closure_trial(const OpSpec& spec, std::size_t trials, const GeneratorRecipe& recipe) {
  validate_recipe(recipe);
  ClosureReport report;
  report.operation = to_string(spec.op);
  report.expected = expected_preserved(spec.op);
  for (std::size_t t = 0; t < trials; ++t) {
    GeneratorRecipe r = recipe;
    r.seed = trial_seed(recipe.seed, t);
    run_trial(spec, r, t, report);
  }
  return report;
}

ClosureReport closure_campaign(const OpSpec& spec, std::size_t trials, std::uint64_t seed) {
  ClosureReport report;
  report.operation = to_string(spec.op);
  report.expected = expected_preserved(spec.op);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto kind = static_cast<RecipeKind>((t / 3) % 3);
    run_trial(spec, default_recipe(kind, n, trial_seed(seed, t)), t, report);
  }
  return report;
}

const std::vector<std::string>& table1_columns() {
  static const std::vector<std::string> names{"Permut.", "Scaling", "Restriction", "Projection",
                                              "f+phi",   "f1+f2",   "f[]phi",      "f1[]f2"};
  return names;
}

std::vector<ClosureReport> table1_row(std::size_t trials, std::uint64_t seed) {
  std::vector<ClosureReport> row;
  for (std::size_t c = 0; c < kTable1Ops.size(); ++c) {
    const Operation op = kTable1Ops[c];
    ClosureReport report = closure_campaign(OpSpec{op, {}, {}, {}}, trials, trial_seed(seed, 1000 + c));
    if (!expected_preserved(op))
      if (auto fixture = fixture_for(op)) {
        report.counterexamples.push_back(std::move(*fixture));
        report.fixture_certified = true;
      }
    row.push_back(std::move(report));
  }
  return row;
}

std::string table1_pattern(const std::vector<ClosureReport>& row) {
  std::string s;
  for (const auto& r : row) {
    if (!s.empty()) s += ' ';
    s += r.observed();
  }
  return s;
}

std::string format_table1(const std::vector<ClosureReport>& row) {
  std::ostringstream os;
  const auto& cols = table1_columns();
  os << "Discrete convexity";
  for (const auto& c : cols) os << " | " << c;
  os << "\nMultimodular      ";
  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::size_t w = cols[i].size();
    os << " | " << std::string((w - 1) / 2, ' ') << row[i].observed() << std::string(w - 1 - (w - 1) / 2, ' ');
  }
  os << "\n\n";
  for (std::size_t i = 0; i < row.size(); ++i) {
    const auto& r = row[i];
    os << cols[i] << " (" << r.operation << "): " << r.preserved << "/" << r.trials << " trials preserved, expected "
       << (r.expected ? 'Y' : 'N') << (r.matches_expectation() ? ", matches" : ", MISMATCH") << '\n';
    for (const auto& cx : r.counterexamples) os << "    " << cx.origin << ": " << cx.witness.describe() << '\n';
  }
  return os.str();
}

json_io::Json to_json(const ClosureReport& report) {
  json_io::Json cx = json_io::Json::array();
  for (const auto& c : report.counterexamples)
    cx.push_back(json_io::Json{{"origin", c.origin}, {"witness", json_io::to_json(c.witness)}});
  return json_io::Json{{"operation", report.operation},
                       {"trials", report.trials},
                       {"preserved", report.preserved},
                       {"violated", report.violated},
                       {"expected", std::string(1, report.expected ? 'Y' : 'N')},
                       {"observed", std::string(1, report.observed())},
                       {"fixture_certified", report.fixture_certified},
                       {"counterexamples", std::move(cx)}};
}

ReproductionError::ReproductionError(ReproReport report)
    : std::runtime_error("reproduction of '" + report.id + "' did not match"), report_(std::move(report)) {}

json_io::Json to_json(const ReproReport& report) {
  return json_io::Json{{"id", report.id},
                       {"matched", report.matched},
                       {"narrative", report.narrative},
                       {"mismatches", report.mismatches}};
}

}  // namespace multimod::harness
