#include "multimod/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "multimod/checks.hpp"
#include "multimod/errors.hpp"
#include "multimod/harness.hpp"
#include "multimod/json_io.hpp"
#include "multimod/minimize.hpp"
#include "multimod/ops.hpp"
#include "multimod/transforms.hpp"

namespace multimod::cli {

namespace {

using json_io::Document;
using json_io::Json;

struct Options {
  bool json = false;
  std::vector<std::string> boxes;

  std::string property;
  std::string map;
  std::string window;
  std::string op_name;
  std::vector<std::string> files;
  std::string output;

  std::string by, perm, subset, coeffs, factor;
  std::int64_t scale = 0;
  std::size_t index = 0;

  std::string start;
  bool verify = false;

  std::string closure_op;
  std::string kind;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  std::size_t n = 3;

  std::string repro_id;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("not an integer: '" + s + "'");
}

Point parse_point(const std::string& text) {
  Point p;
  for (const auto& part : split(text, ',')) p.push_back(parse_int(part));
  if (p.empty()) throw InputError("empty vector");
  return p;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("range must look like lo..hi, got '" + text + "'");
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

// --box lo..hi, repeated once per coordinate or given once and broadcast.
std::optional<IntBox> box_option(const Options& o, std::size_t n) {
  if (o.boxes.empty()) return std::nullopt;
  if (o.boxes.size() != 1 && o.boxes.size() != n)
    throw InputError("--box given " + std::to_string(o.boxes.size()) + " times for dimension " + std::to_string(n));
  Point lo, hi;
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = parse_range(o.boxes[o.boxes.size() == 1 ? 0 : i]);
    lo.push_back(a);
    hi.push_back(b);
  }
  return IntBox(std::move(lo), std::move(hi));
}

TableFunction as_table(const Document& doc, const Options& o) {
  if (const auto* t = std::get_if<TableFunction>(&doc)) return *t;
  if (const auto* q = std::get_if<QuadraticFunction>(&doc)) {
    auto box = box_option(o, q->dim());
    if (!box) throw InputError("a quadratic function needs --box to be tabulated");
    return materialize(*q, *box);
  }
  if (const auto* s = std::get_if<SeparableFunction>(&doc)) {
    auto box = box_option(o, s->dim());
    return materialize(*s, box ? *box : s->support_box());
  }
  if (const auto* s = std::get_if<IndicatorSet>(&doc)) {
    auto box = box_option(o, s->dim());
    return materialize(*s, box ? *box : s->bounding_box().inflated(1));
  }
  throw InputError("expected a function, got a matrix");
}

QuadraticFunction as_quadratic(const Document& doc) {
  if (const auto* q = std::get_if<QuadraticFunction>(&doc)) return *q;
  if (const auto* m = std::get_if<RationalMatrix>(&doc)) return QuadraticFunction(*m);
  throw InputError("expected a quadratic function or matrix, got a " + json_io::kind_name(doc));
}

IndicatorSet as_set(const Document& doc) {
  if (const auto* s = std::get_if<IndicatorSet>(&doc)) return *s;
  throw InputError("expected a point set, got a " + json_io::kind_name(doc));
}

Document load_one(const Options& o, std::size_t count) {
  if (o.files.size() != count)
    throw InputError("expected " + std::to_string(count) + " input file(s), got " + std::to_string(o.files.size()));
  return json_io::load_document(o.files[0]);
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

int emit_verdict(const Verdict& v, const Options& o, std::ostream& out) {
  if (o.json) {
    out << json_io::to_json(v).dump(2) << '\n';
  } else if (v.holds) {
    out << "holds (" << v.checked << " inequalities checked)\n";
    if (v.translation_step) out << "translation step r = " << format_rational(*v.translation_step) << '\n';
    if (v.translation_untestable) out << "translation untestable: no q, q+1 pair in the domain\n";
  } else {
    out << "fails (" << v.checked << " inequalities checked)\nwitness: " << v.witness->describe() << '\n';
  }
  return v.holds ? kExitOk : kExitFails;
}

int emit_document(const Json& doc, const std::string& summary, const Options& o, std::ostream& out,
                  std::ostream& err) {
  if (!o.output.empty()) {
    json_io::save_json(doc, o.output);
    if (o.json)
      out << Json{{"written", o.output}, {"summary", summary}}.dump(2) << '\n';
    else
      out << summary << "\nwritten to " << o.output << '\n';
  } else {
    out << doc.dump(2) << '\n';
    if (!summary.empty()) err << summary << '\n';
  }
  return kExitOk;
}

std::string table_summary(const TableFunction& f) {
  return "table on box " + format_box(f.box()) + " (" + std::to_string(domain_indices(f).size()) +
         " finite points)";
}

int run_check(const Options& o, std::ostream& out) {
  const Document doc = load_one(o, 1);
  const std::string& p = o.property;
  if (p == "quad-mm") return emit_verdict(checks::is_quadratic_multimodular(as_quadratic(doc)), o, out);
  if (p == "l-class") return emit_verdict(checks::is_L_class(as_quadratic(doc)), o, out);
  if (p == "mm-set") return emit_verdict(checks::is_multimodular_set(as_set(doc)), o, out);
  if (p == "lnat-set") return emit_verdict(checks::is_lnat_set(as_set(doc)), o, out);
  const TableFunction f = as_table(doc, o);
  if (p == "multimodular") return emit_verdict(checks::is_multimodular(f), o, out);
  if (p == "lnat") return emit_verdict(checks::is_lnat(f), o, out);
  if (p == "submodular") return emit_verdict(checks::is_submodular(f), o, out);
  if (p == "l-convex") return emit_verdict(checks::is_L_convex(f), o, out);
  throw InputError("unknown property '" + p + "'");
}

int run_transform(const Options& o, std::ostream& out, std::ostream& err) {
  const Document doc = load_one(o, 1);
  if (o.map == "conj-quad") {
    const auto b = transforms::conjugate_quadratic(as_quadratic(doc));
    return emit_document(json_io::to_json(b), "D^T A D", o, out, err);
  }
  const TableFunction f = as_table(doc, o);
  transforms::LiftWindow window;
  if (!o.window.empty()) std::tie(window.lo, window.hi) = parse_range(o.window);
  TableFunction g = [&] {
    if (o.map == "to-lnat") return transforms::to_lnat(f);
    if (o.map == "from-lnat") return transforms::from_lnat(f);
    if (o.map == "lift-mm") return transforms::lift_multimodular(f, window);
    if (o.map == "lift-lnat") return transforms::lift_lnat(f, window);
    throw InputError("unknown map '" + o.map + "'");
  }();
  return emit_document(json_io::to_json(g), table_summary(g), o, out, err);
}

int run_op(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& name = o.op_name;
  if (name == "minkowski") {
    if (o.files.size() != 2) throw InputError("minkowski takes two set files");
    const auto s = ops::minkowski_sum(as_set(json_io::load_document(o.files[0])),
                                      as_set(json_io::load_document(o.files[1])));
    return emit_document(json_io::to_json(s), std::to_string(s.points().size()) + " points", o, out, err);
  }
  if (name == "sweep-out") {
    if (o.index == 0) throw InputError("sweep-out needs --index k");
    const auto q = ops::sweep_out(as_quadratic(load_one(o, 1)), o.index);
    return emit_document(json_io::to_json(q), "eliminated x" + std::to_string(o.index), o, out, err);
  }
  if (name == "add" || name == "convolve") {
    if (o.files.size() != 2) throw InputError(name + " takes two function files");
    const TableFunction f1 = as_table(json_io::load_document(o.files[0]), o);
    const TableFunction f2 = as_table(json_io::load_document(o.files[1]), o);
    const TableFunction g = name == "add" ? ops::add(f1, f2) : ops::convolve(f1, f2);
    return emit_document(json_io::to_json(g), table_summary(g), o, out, err);
  }
  const TableFunction f = as_table(load_one(o, 1), o);
  auto require = [&](const std::string& value, const char* flag) -> const std::string& {
    if (value.empty()) throw InputError(name + " needs " + flag);
    return value;
  };
  TableFunction g = [&] {
    if (name == "shift") return ops::shift(f, parse_point(require(o.by, "--by")));
    if (name == "negate") return ops::negate_vars(f);
    if (name == "reverse") return ops::reverse_vars(f);
    if (name == "permute") return ops::permute_vars(f, ops::parse_index_list(require(o.perm, "--perm")));
    if (name == "scale-vars") {
      if (o.scale < 1) throw InputError("scale-vars needs --scale s with s >= 1");
      return ops::scale_vars(f, o.scale);
    }
    if (name == "scale-values") return ops::scale_values(f, parse_rational(require(o.factor, "--factor")));
    if (name == "add-linear") return ops::add_linear(f, parse_rationals(require(o.coeffs, "--coeffs")));
    if (name == "restrict") return ops::restrict(f, ops::parse_index_list(require(o.subset, "--subset")));
    if (name == "project") return ops::project(f, ops::parse_index_list(require(o.subset, "--subset")));
    throw InputError("unknown operation '" + name + "'");
  }();
  std::string summary = table_summary(g);
  if (name == "project") summary += "; minima taken over the input box " + format_box(f.box());
  return emit_document(json_io::to_json(g), summary, o, out, err);
}

int run_minimize(const Options& o, std::ostream& out) {
  const TableFunction f = as_table(load_one(o, 1), o);
  // Default start: the lexicographically first domain point.
  const Point start = o.start.empty() ? f.box().point_at(domain_indices(f).front()) : parse_point(o.start);
  const auto local = minimize::local_minimize(f, start);
  std::optional<minimize::MinimumPoint> brute;
  if (o.verify) brute = minimize::brute_min(f);
  const bool agrees = !brute || brute->value == local.value;
  if (o.json) {
    Json j{{"point", local.point},
           {"value", json_io::to_json(local.value)},
           {"steps", local.steps},
           {"start", start},
           {"box", {{"lower", f.box().lower()}, {"upper", f.box().upper()}}},
           {"verified", o.verify}};
    if (brute) {
      j["brute_force_point"] = brute->point;
      j["brute_force_value"] = json_io::to_json(brute->value);
      j["agrees"] = agrees;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "local minimum " << format_point(local.point) << " value " << local.value << " after " << local.steps
        << " step(s) from " << format_point(start) << "\nbox " << format_box(f.box()) << '\n';
    if (brute)
      out << "brute force: " << format_point(brute->point) << " value " << brute->value
          << (agrees ? " (agrees)" : " (DISAGREES)") << '\n';
    else
      out << "brute-force verification not run\n";
  }
  return agrees ? kExitOk : kExitFails;
}

int run_closure(const Options& o, std::ostream& out) {
  const auto op = harness::operation_from_string(o.closure_op);
  if (!op) {
    std::string known;
    for (const auto& name : harness::operation_names()) known += (known.empty() ? "" : ", ") + name;
    throw InputError("unknown closure operation '" + o.closure_op + "' (one of " + known + ")");
  }
  harness::ClosureReport report;
  if (o.kind.empty()) {
    harness::GeneratorRecipe recipe = harness::default_recipe(harness::RecipeKind::quadratic_l_class, o.n, o.seed);
    if (auto box = box_option(o, o.n)) recipe.box = *box;
    // Without --kind the three recipes are cycled per trial.
    report.operation = harness::to_string(*op);
    report.expected = harness::expected_preserved(*op);
    for (std::size_t k = 0; k < 3; ++k) {
      recipe.kind = static_cast<harness::RecipeKind>(k);
      recipe.seed = harness::trial_seed(o.seed, k);
      const std::size_t share = o.trials / 3 + (k < o.trials % 3 ? 1 : 0);
      auto part = harness::closure_trial(harness::OpSpec{*op, {}, {}, {}}, share, recipe);
      report.trials += part.trials;
      report.preserved += part.preserved;
      report.violated += part.violated;
      for (auto& c : part.counterexamples)
        if (report.counterexamples.size() < 3) report.counterexamples.push_back(std::move(c));
    }
  } else {
    const auto kind = harness::recipe_kind_from_string(o.kind);
    if (!kind) throw InputError("unknown recipe kind '" + o.kind + "'");
    harness::GeneratorRecipe recipe = harness::default_recipe(*kind, o.n, o.seed);
    if (auto box = box_option(o, o.n)) recipe.box = *box;
    report = harness::closure_trial(harness::OpSpec{*op, {}, {}, {}}, o.trials, recipe);
  }
  if (o.json) {
    out << harness::to_json(report).dump(2) << '\n';
  } else {
    out << report.operation << ": " << report.preserved << "/" << report.trials << " preserved, " << report.violated
        << " violated; expected " << (report.expected ? 'Y' : 'N') << '\n';
    for (const auto& c : report.counterexamples) out << "  " << c.origin << ": " << c.witness.describe() << '\n';
  }
  return report.expected && report.violated > 0 ? kExitFails : kExitOk;
}

int run_repro(const Options& o, std::ostream& out) {
  harness::ReproReport report;
  try {
    report = harness::repro(o.repro_id);
  } catch (const harness::ReproductionError& e) {
    report = e.report();
  }
  if (o.json) {
    out << harness::to_json(report).dump(2) << '\n';
  } else {
    out << "reproduction " << report.id << '\n';
    for (const auto& line : report.narrative) out << "  " << line << '\n';
    out << (report.matched ? "matched\n" : "MISMATCHED\n");
  }
  return report.matched ? kExitOk : kExitFails;
}

int run_table1(const Options& o, std::ostream& out) {
  const auto row = harness::table1_row(o.trials, o.seed);
  const bool ok = harness::table1_pattern(row) == "N Y Y N Y Y N N" &&
                  std::all_of(row.begin(), row.end(), [](const auto& r) { return r.matches_expectation(); });
  if (o.json) {
    Json columns = Json::array();
    for (std::size_t i = 0; i < row.size(); ++i) {
      Json c = harness::to_json(row[i]);
      c["column"] = harness::table1_columns()[i];
      columns.push_back(std::move(c));
    }
    out << Json{{"pattern", harness::table1_pattern(row)}, {"matches", ok}, {"columns", std::move(columns)}}.dump(2)
        << '\n';
  } else {
    out << harness::format_table1(row);
  }
  return ok ? kExitOk : kExitFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multimodular and L-natural convex function toolkit", "multimod"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print JSON instead of text");

  auto* check = app.add_subcommand("check", "Check a convexity property of a function file");
  check->add_option("--property", o.property, "Property to check")
      ->required()
      ->check(CLI::IsMember({"multimodular", "lnat", "submodular", "l-convex", "quad-mm", "l-class", "mm-set",
                             "lnat-set"}));
  check->add_option("--box", o.boxes, "Tabulation box lo..hi (repeat per coordinate or give once)")->allow_extra_args(false);
  check->add_option("file", o.files, "Function file")->required();

  auto* transform = app.add_subcommand("transform", "Apply a change of variables or lifting");
  transform->add_option("--map", o.map, "Map to apply")
      ->required()
      ->check(CLI::IsMember({"to-lnat", "from-lnat", "lift-mm", "lift-lnat", "conj-quad"}));
  transform->add_option("--box", o.boxes, "Tabulation box lo..hi")->allow_extra_args(false);
  transform->add_option("--window", o.window, "Range lo..hi of the extra lifted coordinate (default -1..1)");
  transform->add_option("-o,--output", o.output, "Output file");
  transform->add_option("file", o.files, "Function file")->required();

  auto* op = app.add_subcommand("op", "Apply a function operation");
  op->add_option("name", o.op_name, "Operation")
      ->required()
      ->check(CLI::IsMember({"shift", "negate", "reverse", "permute", "scale-vars", "scale-values", "add-linear",
                             "add", "restrict", "project", "convolve", "minkowski", "sweep-out"}));
  op->add_option("files", o.files, "Input file(s)")->required();
  op->add_option("--by", o.by, "Shift vector b (comma list)");
  op->add_option("--perm", o.perm, "Permutation sigma (comma list, 1-based)");
  op->add_option("--subset", o.subset, "Coordinate subset U (comma list, 1-based)");
  op->add_option("--scale", o.scale, "Variable scale s");
  op->add_option("--factor", o.factor, "Value factor a >= 0 (rational)");
  op->add_option("--coeffs", o.coeffs, "Linear coefficients c (comma list of rationals)");
  op->add_option("--index", o.index, "Coordinate k to sweep out (1-based)");
  op->add_option("--box", o.boxes, "Tabulation box lo..hi")->allow_extra_args(false);
  op->add_option("-o,--output", o.output, "Output file");

  auto* minimize_cmd = app.add_subcommand("minimize", "Local search over the alternating direction set");
  minimize_cmd->add_option("--start", o.start, "Start point (comma list); default: first domain point");
  minimize_cmd->add_flag("--verify", o.verify, "Compare with exhaustive search");
  minimize_cmd->add_option("--box", o.boxes, "Tabulation box lo..hi")->allow_extra_args(false);
  minimize_cmd->add_option("file", o.files, "Function file")->required();

  auto* closure = app.add_subcommand("closure", "Randomized closure experiment for one operation");
  closure->add_option("--op", o.closure_op, "Operation")->required();
  closure->add_option("--trials", o.trials, "Number of trials");
  closure->add_option("--seed", o.seed, "Random seed");
  closure->add_option("--n", o.n, "Dimension")->check(CLI::Range(1, 5));
  closure->add_option("--kind", o.kind, "Generator recipe (default: cycle all three)");
  closure->add_option("--box", o.boxes, "Generator box lo..hi (default -2..2)")->allow_extra_args(false);

  auto* repro_cmd = app.add_subcommand("repro", "Reproduce a reference counterexample or table");
  repro_cmd->add_option("id", o.repro_id, "3.1, 4.1, 4.2, T-n4 or table-1")->required();

  auto* table1 = app.add_subcommand("table1", "Closure table for multimodular functions");
  table1->add_option("--trials", o.trials, "Trials per column");
  table1->add_option("--seed", o.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    if (transform->parsed()) return run_transform(o, out, err);
    if (op->parsed()) return run_op(o, out, err);
    if (minimize_cmd->parsed()) return run_minimize(o, out);
    if (closure->parsed()) return run_closure(o, out);
    if (repro_cmd->parsed()) return run_repro(o, out);
    if (table1->parsed()) return run_table1(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const EmptyDomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UnboundedError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace multimod::cli
