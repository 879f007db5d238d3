#pragma once

#include "multimod/matrix.hpp"
#include "multimod/symbolic.hpp"
#include "multimod/table_function.hpp"

// Reference instances with known verdicts, used by the reproduction reports,
// the CLI and the test suites.
namespace multimod::fixtures {

// Three-variable multimodular form and its image under swapping x1, x2.
QuadraticFunction quadratic_a3();
QuadraticFunction quadratic_a3_swapped();
// DᵀAD of the two forms above.
RationalMatrix conjugate_b3();
RationalMatrix conjugate_b3_swapped();

// Four-variable multimodular form, the Schur complement eliminating x3, and
// the conjugates DᵀAD of both.
QuadraticFunction quadratic_a4();
RationalMatrix swept_a4();
RationalMatrix conjugate_b4();
RationalMatrix conjugate_swept_a4();

// Point sets whose Minkowski sum breaks multimodularity, and their images under D⁻¹.
IndicatorSet set_s1();
IndicatorSet set_s2();
IndicatorSet set_s1_plus_s2();
IndicatorSet set_t1();
IndicatorSet set_t2();
IndicatorSet set_t1_plus_t2();

// D, D⁻¹ and D⁻¹RD for n = 4, entered by hand.
IntegerMatrix displayed_d4();
IntegerMatrix displayed_d4_inverse();
IntegerMatrix displayed_t4();

// x1² + x2² on [-2, 2]².
TableFunction sep2();

RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows);

}  // namespace multimod::fixtures
