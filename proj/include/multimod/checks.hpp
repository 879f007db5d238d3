#pragma once

#include <cstddef>
#include <vector>

#include "multimod/symbolic.hpp"
#include "multimod/table_function.hpp"
#include "multimod/witness.hpp"

// Definition-level verifiers. Every check uses extended arithmetic: an
// inequality whose left side is +∞ holds, a finite left side against a +∞
// right side fails. Pair sweeps visit the later element in the outer loop
// and the earlier one in the inner loop, so the first witness is deterministic.
namespace multimod::checks {

// {-e1, e1 - e2, ..., e(n-1) - en, en}, in that order.
std::vector<Point> direction_set_F(std::size_t n);

// z ranges over all of Z^n, not only dom f; a violation needs z+d and z+d' finite.
Verdict is_multimodular(const TableFunction& f);

enum class SubmodularMode {
  automatic,       // two_coordinate when every box value is finite, all_pairs otherwise
  all_pairs,       // every incomparable pair of domain points
  two_coordinate,  // pairs differing in exactly two coordinates; exact only on a full box
};
Verdict is_submodular(const TableFunction& f, SubmodularMode mode = SubmodularMode::automatic);

// Discrete midpoint convexity over all pairs of domain points.
Verdict is_lnat(const TableFunction& g);

// Submodularity plus h(q+1) = h(q) + r on every in-domain q, q+1 pair, with r
// taken from the first such pair. Sets translation_untestable when there is none.
Verdict is_L_convex(const TableFunction& h);

// a_ij - a_i,j+1 - a_i+1,j + a_i+1,j+1 <= 0 for 0 <= i < j <= n, padding a with zeros.
Verdict is_quadratic_multimodular(const QuadraticFunction& f);
// Off-diagonal entries nonpositive (checked first) and rows diagonally dominant.
Verdict is_L_class(const QuadraticFunction& f);

// Indicator materialized on the bounding box inflated by one.
Verdict is_multimodular_set(const IndicatorSet& s);
Verdict is_lnat_set(const IndicatorSet& s);

// Re-evaluates the inequality a witness cites; true iff it is genuinely violated.
bool confirms(const Witness& w, const TableFunction& f);
bool confirms(const Witness& w, const QuadraticFunction& f);

}  // namespace multimod::checks
