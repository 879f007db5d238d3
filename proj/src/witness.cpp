#include "multimod/witness.hpp"

#include <array>
#include <sstream>

namespace multimod {

namespace {

constexpr std::array<std::pair<WitnessKind, const char*>, 6> kKindNames{{
    {WitnessKind::multimodular, "multimodular"},
    {WitnessKind::submodular, "submodular"},
    {WitnessKind::midpoint, "midpoint"},
    {WitnessKind::quadratic_criterion, "quadratic-criterion"},
    {WitnessKind::l_class, "L-class"},
    {WitnessKind::translation, "translation"},
}};

std::string sum_text(const std::vector<ExtendedValue>& terms, std::size_t first, std::size_t count) {
  std::string s;
  for (std::size_t i = 0; i < count && first + i < terms.size(); ++i)
    s += (i ? " + " : "") + terms[first + i].to_string();
  return s;
}

}  // namespace

std::string to_string(WitnessKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

std::optional<WitnessKind> witness_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  return std::nullopt;
}

bool Witness::violated() const {
  if (kind == WitnessKind::translation) return lhs != rhs;
  return lhs < rhs;
}

std::string Witness::describe() const {
  std::ostringstream os;
  const char* rel = kind == WitnessKind::translation ? " != " : " < ";
  auto pt = [&](std::size_t i) { return i < points.size() ? format_point(points[i]) : std::string("?"); };
  switch (kind) {
    case WitnessKind::multimodular:
      os << "f(z+d) + f(z+d') = " << sum_text(terms, 0, 2) << " = " << lhs << rel << rhs
         << " = " << sum_text(terms, 2, 2) << " = f(z) + f(z+d+d')"
         << " at z=" << pt(0) << ", d=" << pt(1) << ", d'=" << pt(2);
      break;
    case WitnessKind::submodular:
      os << "f(x) + f(y) = " << sum_text(terms, 0, 2) << " = " << lhs << rel << rhs << " = "
         << sum_text(terms, 2, 2) << " = f(x v y) + f(x ^ y) at x=" << pt(0) << ", y=" << pt(1);
      break;
    case WitnessKind::midpoint:
      os << "g(p) + g(q) = " << sum_text(terms, 0, 2) << " = " << lhs << rel << rhs << " = "
         << sum_text(terms, 2, 2) << " = g(ceil((p+q)/2)) + g(floor((p+q)/2)) at p=" << pt(0)
         << ", q=" << pt(1);
      if (points.size() >= 4) os << ", ceil=" << pt(2) << ", floor=" << pt(3);
      break;
    case WitnessKind::quadratic_criterion:
      os << "a_ij - a_i,j+1 - a_i+1,j + a_i+1,j+1 = " << rhs << " > 0 at (i,j)=" << pt(0);
      break;
    case WitnessKind::l_class:
      if (points.size() == 1 && points[0].size() == 2 && points[0][0] == points[0][1])
        os << "diagonal dominance fails: b_ii = " << lhs << rel << rhs << " = sum_{j!=i} |b_ij| at i="
           << points[0][0];
      else
        os << "off-diagonal entry b_ij = " << rhs << " > 0 at (i,j)=" << pt(0);
      break;
    case WitnessKind::translation:
      os << "h(q+1) = " << lhs << rel << rhs << " = h(q) + r at q=" << pt(1) << " (r from q=" << pt(0)
         << ")";
      break;
  }
  return os.str();
}

}  // namespace multimod
