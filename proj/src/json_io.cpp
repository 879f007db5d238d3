#include "multimod/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "multimod/errors.hpp"

namespace multimod::json_io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<std::vector<Rational>> rational_rows(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    if (!rows.empty() && r.size() != rows.front().size()) throw InputError("ragged matrix");
    rows.push_back(std::move(r));
  }
  return rows;
}

RationalMatrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Json point_json(PointView p) { return Json(std::vector<std::int64_t>(p.begin(), p.end())); }

}  // namespace

Json to_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(format_rational(r));
}

Json to_json(const ExtendedValue& v) { return v.is_finite() ? to_json(v.value()) : Json("inf"); }

Json to_json(const TableFunction& f) {
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(to_json(v));
  return Json{{"kind", "table"},
              {"lower", point_json(f.box().lower())},
              {"upper", point_json(f.box().upper())},
              {"values", std::move(values)}};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"kind", "matrix"}, {"entries", std::move(rows)}};
}

Json to_json(const IntegerMatrix& m) { return to_json(to_rational(m)); }

Json to_json(const QuadraticFunction& f) {
  Json j{{"kind", "quadratic"}, {"matrix", to_json(f.matrix())["entries"]}};
  if (f.linear()) {
    Json c = Json::array();
    for (const auto& v : *f.linear()) c.push_back(to_json(v));
    j["linear"] = std::move(c);
  }
  return j;
}

Json to_json(const SeparableFunction& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    Json values = Json::array();
    for (const auto& v : p.values) values.push_back(to_json(v));
    pieces.push_back(Json{{"start", p.start}, {"values", std::move(values)}});
  }
  return Json{{"kind", "separable"}, {"pieces", std::move(pieces)}};
}

Json to_json(const IndicatorSet& s) {
  Json points = Json::array();
  for (const auto& p : s.points()) points.push_back(point_json(p));
  return Json{{"kind", "set"}, {"points", std::move(points)}};
}

Json to_json(const Witness& w) {
  Json points = Json::array();
  for (const auto& p : w.points) points.push_back(point_json(p));
  Json terms = Json::array();
  for (const auto& t : w.terms) terms.push_back(to_json(t));
  return Json{{"kind", to_string(w.kind)}, {"points", std::move(points)}, {"lhs", to_json(w.lhs)},
              {"rhs", to_json(w.rhs)},     {"terms", std::move(terms)},   {"text", w.describe()}};
}

Json to_json(const Verdict& v) {
  Json j{{"holds", v.holds}, {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}, {"checked", v.checked}};
  if (v.translation_step) j["translation_step"] = to_json(*v.translation_step);
  if (v.translation_untestable) j["translation_untestable"] = true;
  return j;
}

Json to_json(const Document& doc) {
  return std::visit([](const auto& d) { return to_json(d); }, doc);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) throw InputError("non-integer number " + j.dump() + "; write rationals as \"p/q\"");
  throw InputError("expected a rational, got " + j.dump());
}

ExtendedValue extended_from_json(const Json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "+inf"))
    return ExtendedValue::infinity();
  return ExtendedValue(rational_from_json(j));
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an integer vector, got " + j.dump());
  Point p;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("non-integer coordinate " + v.dump());
    p.push_back(v.get<std::int64_t>());
  }
  return p;
}

Document parse_document(const Json& j) {
  const std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "table") {
    IntBox box(point_from_json(field(j, "lower")), point_from_json(field(j, "upper")));
    const Json& values = field(j, "values");
    if (!values.is_array()) throw InputError("'values' must be an array");
    std::vector<ExtendedValue> vs;
    vs.reserve(values.size());
    for (const auto& v : values) vs.push_back(extended_from_json(v));
    return TableFunction(std::move(box), std::move(vs));
  }
  if (kind == "quadratic") {
    RationalMatrix m = matrix_from_rows(rational_rows(field(j, "matrix")));
    std::optional<std::vector<Rational>> linear;
    if (j.contains("linear") && !j.at("linear").is_null()) {
      linear.emplace();
      for (const auto& v : j.at("linear")) linear->push_back(rational_from_json(v));
    }
    return QuadraticFunction(std::move(m), std::move(linear));
  }
  if (kind == "separable") {
    std::vector<UnivariatePiece> pieces;
    for (const auto& p : field(j, "pieces")) {
      UnivariatePiece piece;
      const Json& start = field(p, "start");
      if (!start.is_number_integer()) throw InputError("piece 'start' must be an integer");
      piece.start = start.get<std::int64_t>();
      for (const auto& v : field(p, "values")) piece.values.push_back(rational_from_json(v));
      pieces.push_back(std::move(piece));
    }
    return SeparableFunction(std::move(pieces));
  }
  if (kind == "set") {
    std::vector<Point> points;
    for (const auto& p : field(j, "points")) points.push_back(point_from_json(p));
    return IndicatorSet(std::move(points));
  }
  if (kind == "matrix") return matrix_from_rows(rational_rows(field(j, "entries")));
  throw InputError("unknown function kind '" + kind + "'");
}

Document parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document_text(buffer.str());
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string kind_name(const Document& doc) {
  switch (doc.index()) {
    case 0: return "table";
    case 1: return "quadratic";
    case 2: return "separable";
    case 3: return "set";
    default: return "matrix";
  }
}

}  // namespace multimod::json_io
