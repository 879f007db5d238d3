#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multimod/extended_value.hpp"
#include "multimod/int_box.hpp"

namespace multimod {

enum class WitnessKind {
  multimodular,         // points = {z, d, d'}:  f(z+d) + f(z+d') >= f(z) + f(z+d+d')
  submodular,           // points = {x, y}:      f(x) + f(y) >= f(x∨y) + f(x∧y)
  midpoint,             // points = {p, q}:      g(p) + g(q) >= g(⌈(p+q)/2⌉) + g(⌊(p+q)/2⌋)
  quadratic_criterion,  // points = {(i, j)}:    0 >= a_ij - a_i,j+1 - a_i+1,j + a_i+1,j+1
  l_class,              // points = {(i, j)}:    0 >= b_ij (i != j) or b_ii >= Σ_{k!=i} |b_ik|
  translation,          // points = {q_ref, q}:  h(q+1) = h(q) + r, r = h(q_ref+1) - h(q_ref)
};

std::string to_string(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_string(const std::string& name);

// A certificate that one defining inequality fails. For every kind except
// `translation` the violation reads lhs < rhs; a translation witness has lhs != rhs.
// Matrix indices in quadratic_criterion and l_class witnesses are 1-based, with 0
// and n+1 standing for the zero padding row/column.
struct Witness {
  WitnessKind kind;
  std::vector<Point> points;
  ExtendedValue lhs;
  ExtendedValue rhs;
  // The individual terms in inequality order (f(z+d), f(z+d'), f(z), f(z+d+d'), ...).
  std::vector<ExtendedValue> terms;

  bool violated() const;

  // The inequality with the values substituted, e.g.
  // "f(z+d) + f(z+d') = 3 + 4 < f(z) + f(z+d+d') = 0 + 8 at z=(..), d=(..), d'=(..)".
  std::string describe() const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Outcome of a definition-level check.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::uint64_t checked = 0;

  // is_L_convex only: the increment along the all-ones vector, when some
  // q, q+1 pair lies in the domain, and whether no such pair existed.
  std::optional<Rational> translation_step;
  bool translation_untestable = false;
};

}  // namespace multimod
