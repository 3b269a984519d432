#pragma once

#include "parehr/integrate.hpp"
#include "parehr/pipeline.hpp"
#include "parehr/polytope.hpp"

namespace parehr {

/// Ground truth by exhaustive enumeration.  Deliberately naive: exact
/// bounding box from the basic feasible points, then membership test per
/// integer point.  Exponential, desk-scale only; every pipeline output is
/// validated against these.
namespace oracle {

/// All integer points of P_A(b); empty vector for an infeasible b.
/// Throws UnboundedError if A admits a recession ray.
std::vector<IntVec> lattice_points(const HPolytope& P, const IntVec& b);

/// sum of w over the integer points of P_A(b), exact.
Rational weighted_count(const HPolytope& P, const IntVec& b, const MPoly& w);

/// Weighted Ehrhart polynomial recovered from the counts of the dilates
/// t*b for t = 0..d+m, by an exact Vandermonde solve.  An independent
/// computational path from the Todd-operator pipeline.
EhrhartPoly ehrhart_by_interpolation(const HPolytope& P, const IntVec& b, const WeightPoly& w);

}  // namespace oracle

}  // namespace parehr
