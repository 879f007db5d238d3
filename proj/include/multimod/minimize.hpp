#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multimod/table_function.hpp"

namespace multimod::minimize {

// e_i1 - e_i2 + ... ± e_ik over increasing index sequences, listed in
// lexicographic order of the sequences. 2^n - 1 vectors. Throws InputError for n > 20.
std::vector<Point> directions_T(std::size_t n);

struct MinimumPoint {
  Point point;
  ExtendedValue value;
  std::size_t steps = 0;
};

// Moves to the first strictly improving neighbour x ± d (directions in
// directions_T order, +d before -d) until none exists. Neighbours outside the
// box are +∞. Throws InputError if f(x0) is not finite.
MinimumPoint local_minimize(const TableFunction& f, PointView x0);

// True when no x ± d with d ∈ 𝓣 is strictly better than x.
bool is_local_minimum(const TableFunction& f, PointView x, const std::vector<Point>& directions);

// Exhaustive minimum; the lexicographically first minimizer.
MinimumPoint brute_min(const TableFunction& f);

struct LocalGlobalReport {
  bool holds = true;
  std::size_t local_minima = 0;
  ExtendedValue global_minimum;
  // A local minimizer whose value exceeds the global minimum.
  std::optional<Point> counterexample;
};

// Checks that every 𝓣-local minimizer in dom f attains the global minimum.
LocalGlobalReport check_local_global(const TableFunction& f);

}  // namespace multimod::minimize
