#pragma once

#include "parehr/mpoly.hpp"
#include "parehr/polytope.hpp"

namespace parehr {

/// Polynomial weight on lattice points: lives in the X-block only.
struct WeightPoly {
    MPoly w;
    unsigned m = 0;          // total degree
    bool homogeneous = true; // every term has X-degree exactly m

    /// Validates the block constraint and fills in degree/homogeneity.
    static WeightPoly from_poly(MPoly p);
};

/// Exact integral of a homogeneous degree-m polynomial (m >= 1) over a
/// parametric d-simplex, by the Lasserre-Avrachenkov vertex-sum quadrature:
///
///   vol(S) / (2^m m! C(m+d, m)) *
///       sum_{1 <= i_1 <= ... <= i_m <= d+1} sum_{eps in {+-1}^m}
///           eps_1...eps_m f(eps_1 s_{i_1} + ... + eps_m s_{i_m})
///
/// where vol(S) is the signed parametric volume made positive at b0 via the
/// frozen orientation sign.  f is composed symbolically, so the result is a
/// polynomial in the (b, h) blocks.
MPoly integrate_over_simplex(const WeightPoly& f, const std::vector<ParametricVertex>& simplex,
                             int sign);

/// Degree-0 case: the quadrature sum is empty for m = 0, so the integral is
/// just c * vol(S).
MPoly integrate_over_simplex_degree0(const Rational& c,
                                     const std::vector<ParametricVertex>& simplex, int sign);

/// Integral of an arbitrary X-block polynomial over the whole triangulated
/// polytope: splits into homogeneous components, integrates each over each
/// simplex, and sums exactly.
MPoly integrate_over_polytope(const MPoly& w, const ParametricTriangulation& tri);

}  // namespace parehr
