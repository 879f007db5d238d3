#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "multimod/matrix.hpp"
#include "multimod/symbolic.hpp"
#include "multimod/table_function.hpp"
#include "multimod/witness.hpp"

// The JSON dialect shared by the library and the CLI:
//   {"kind":"table","lower":[..],"upper":[..],"values":[.. numbers, "p/q" or "inf" ..]}
//   {"kind":"quadratic","matrix":[[..]],"linear":[..]}        ("linear" optional)
//   {"kind":"separable","pieces":[{"start":t,"values":[..]}, ..]}
//   {"kind":"set","points":[[..], ..]}
//   {"kind":"matrix","entries":[[..]]}
// Integers are JSON numbers; other rationals are "p/q" strings.
namespace multimod::json_io {

using Json = nlohmann::json;

using Document = std::variant<TableFunction, QuadraticFunction, SeparableFunction, IndicatorSet,
                              RationalMatrix>;

Json to_json(const Rational& r);
Json to_json(const ExtendedValue& v);
Json to_json(const TableFunction& f);
Json to_json(const QuadraticFunction& f);
Json to_json(const SeparableFunction& f);
Json to_json(const IndicatorSet& s);
Json to_json(const RationalMatrix& m);
Json to_json(const IntegerMatrix& m);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const Document& doc);

// All parsers throw InputError on malformed input.
Rational rational_from_json(const Json& j);
ExtendedValue extended_from_json(const Json& j);
Point point_from_json(const Json& j);
Document parse_document(const Json& j);
Document parse_document_text(const std::string& text);
Document load_document(const std::string& path);

// Writes `j` (pretty-printed, trailing newline) to `path`. Throws InputError if unwritable.
void save_json(const Json& j, const std::string& path);

std::string kind_name(const Document& doc);

}  // namespace multimod::json_io
