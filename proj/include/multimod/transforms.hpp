#pragma once

#include <cstddef>
#include <cstdint>

#include "multimod/matrix.hpp"
#include "multimod/symbolic.hpp"
#include "multimod/table_function.hpp"

// Unimodular changes of variables linking multimodular functions f and
// L♮-convex functions g through g(p) = f(Dp), f(x) = g(D⁻¹x).
namespace multimod::transforms {

// d_ii = 1, d_{i+1,i} = -1.
IntegerMatrix bidiagonal_D(std::size_t n);
// Lower-triangular all-ones matrix, the inverse of bidiagonal_D(n).
IntegerMatrix inverse_D(std::size_t n);
// Anti-identity permutation matrix (order reversal).
IntegerMatrix reversal_R(std::size_t n);
// D⁻¹RD: t_in = 1, t_{i,n-i} = -1, zero elsewhere. [[1]] for n = 1.
IntegerMatrix reversal_T(std::size_t n);

// h(p) = f(Mp) for a unimodular M with integral inverse `m_inverse`. The
// result is stored on the bounding box of M⁻¹·box(f); points whose image
// leaves box(f) hold +∞, so the change of variables is lossless.
TableFunction pullback(const TableFunction& f, const IntegerMatrix& m, const IntegerMatrix& m_inverse);

// g(p) = f(p1, p2 - p1, ..., pn - p(n-1)).
TableFunction to_lnat(const TableFunction& f);
// f(x) = g(x1, x1 + x2, ..., x1 + ... + xn).
TableFunction from_lnat(const TableFunction& g);

// Range of the extra coordinate (x0 or p0) materialized by the liftings.
struct LiftWindow {
  std::int64_t lo = -1;
  std::int64_t hi = 1;
};

// f̃(x0, x) = f(x1 - x0, x2 - x1, ..., xn - x(n-1)) on x0 ∈ window and the
// x-range those differences can reach from box(f).
TableFunction lift_multimodular(const TableFunction& f, LiftWindow window = {});
// g̃(p0, p) = g(p - p0·1) on p0 ∈ window.
TableFunction lift_lnat(const TableFunction& g, LiftWindow window = {});

// DᵀAD, with the linear term mapped to Dᵀc so that the result is x ↦ f(Dx).
QuadraticFunction conjugate_quadratic(const QuadraticFunction& f);

}  // namespace multimod::transforms
