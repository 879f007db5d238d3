#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "multimod/symbolic.hpp"
#include "multimod/table_function.hpp"

// Function operations. Coordinate subsets and permutations are 1-based,
// matching the usual x1..xn numbering.
namespace multimod::ops {

using IndexList = std::vector<std::size_t>;

// x ↦ f(x + b).
TableFunction shift(const TableFunction& f, PointView b);
// x ↦ f(-x).
TableFunction negate_vars(const TableFunction& f);
// (x1, ..., xn) ↦ f(xn, ..., x1).
TableFunction reverse_vars(const TableFunction& f);
// (x1, ..., xn) ↦ f(x_σ(1), ..., x_σ(n)). Throws InputError if σ is not a permutation of 1..n.
TableFunction permute_vars(const TableFunction& f, const IndexList& sigma);
// x ↦ f(s·x) for s >= 1, on {x : s·x ∈ box(f)}. Throws EmptyDomainError when
// no lattice point of the scaled grid is finite.
TableFunction scale_vars(const TableFunction& f, std::int64_t s);
// x ↦ a·f(x) for a >= 0, with 0·∞ = ∞ so the domain never changes.
TableFunction scale_values(const TableFunction& f, const Rational& a);
// x ↦ f(x) + <c, x>.
TableFunction add_linear(const TableFunction& f, const std::vector<Rational>& c);
// Pointwise extended sum on the intersection of the boxes.
TableFunction add(const TableFunction& f1, const TableFunction& f2);

// f_U(y) = f(y, 0_{N∖U}), coordinates of y placed at the positions in U.
TableFunction restrict(const TableFunction& f, const IndexList& subset);
// f^U(y) = min_z f(y, z) over in-box z. U must be a nonempty proper subset.
TableFunction project(const TableFunction& f, const IndexList& subset);
// True when `subset` consists of consecutive indices.
bool is_interval(const IndexList& subset);

// Schur complement eliminating coordinate k (1-based): ã_ij = a_ij - a_ik a_kj / a_kk.
// Throws UnboundedError when a_kk <= 0 and InputError for a nonzero linear term.
QuadraticFunction sweep_out(const QuadraticFunction& f, std::size_t k);

// (f1 □ f2)(x) = min{ f1(y) + f2(x - y) }, on the Minkowski sum of the boxes.
TableFunction convolve(const TableFunction& f1, const TableFunction& f2);

IndicatorSet minkowski_sum(const IndicatorSet& s1, const IndicatorSet& s2);

// Parses "1,2,4" into an index list. Throws InputError.
IndexList parse_index_list(const std::string& text);

}  // namespace multimod::ops
