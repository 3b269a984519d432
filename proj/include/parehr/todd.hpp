#pragma once

#include "parehr/mpoly.hpp"
#include "parehr/rational.hpp"

namespace parehr {

/// B_k with the z/(e^z - 1) convention: B_0 = 1, B_1 = -1/2, B_2 = 1/6,
/// odd indices >= 3 vanish.  Memoized; exact.
Rational bernoulli(unsigned k);

/// Coefficient of the Todd series sum_k todd_coefficient(k) (d/dh)^k, i.e.
/// (-1)^k B_k / k!.  The first values are 1, 1/2, 1/12, 0, -1/720.
Rational todd_coefficient(unsigned k);

/// One-variable Todd operator: sum_{k=0}^{deg_v p} (-1)^k B_k/k! d^k p/dv^k.
/// The sum is finite because p is a polynomial; truncating at any K >= deg_v p
/// changes nothing.
MPoly todd_apply(const MPoly& p, VarId v);

/// Applies the Todd operator over every H-block variable of p and evaluates
/// at h = 0.  Since the operators commute and only the fully differentiated
/// part of each h-power survives the evaluation, the result is computed in a
/// single pass: a term c * b^beta * prod h_i^{a_i} contributes
/// c * (-1)^{sum a_i} * prod B_{a_i} * b^beta.
MPoly todd_apply_all_and_zero(const MPoly& p);

}  // namespace parehr
