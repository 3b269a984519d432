#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "parehr/integrate.hpp"
#include "parehr/polytope.hpp"
#include "parehr/upoly.hpp"

namespace parehr {

/// The single polynomial in b that equals the weighted lattice-point count of
/// P_A(b) on the closed type cone of the base polytope.
struct ParametricCount {
    MPoly poly;  // B-block only, degree <= d + m
    HPolytope polytope;
    std::vector<VertexBasis> bases;
    int d = 0;
    unsigned m = 0;  // weight degree (cap for the Ehrhart degree)
};

/// Weighted Ehrhart polynomial ehr(t) = sum c_k t^k with k up to d + m.  The
/// coefficient list always has length degree_cap + 1, even when leading
/// coefficients vanish, so h* degree and sign-pattern length stay well-defined.
struct EhrhartPoly {
    UPoly coeffs;
    unsigned degree_cap = 0;
};

/// Parametric form: each t-coefficient is itself a polynomial in b.
struct ParametricEhrhart {
    std::vector<MPoly> coeffs;
    unsigned degree_cap = 0;
};

/// Numerator of the Ehrhart series over (1 - z)^{denom_exponent}.
struct HStarData {
    UPoly hstar;  // length denom_exponent, ascending in z
    unsigned denom_exponent = 0;

    unsigned degree_cap() const { return denom_exponent - 1; }
    bool is_zero() const { return up_degree(hstar) < 0; }
};

/// Runs the full parametric count: triangulate the base polytope, integrate
/// the weight over the perturbed simplices, apply the Todd operator, and set
/// h = 0.  Throws NotSmoothError / DegenerateError / UnboundedError.
ParametricCount parametric_weighted_count(const HPolytope& P, const WeightPoly& w);

/// Specializes the count at b -> t*b for a concrete right-hand side; checks
/// closed type-cone membership first (OutsideTypeConeError).
EhrhartPoly weighted_ehrhart(const ParametricCount& pc, const IntVec& b);

/// Same substitution with b left symbolic.
ParametricEhrhart weighted_ehrhart_symbolic(const ParametricCount& pc);

/// Eulerian polynomial A_i(z) under the generating-function convention
/// sum_{t>=0} t^i z^t = A_i(z)/(1-z)^{i+1}; so A_0 = 1, A_1 = z, A_2 = z+z^2.
UPoly eulerian(unsigned i);

/// h*-polynomial of the r-th dilate straight from Ehrhart coefficients:
/// h^{<r>}(z) = sum_i c_i r^i A_i(z) (1-z)^{k-i}, k = degree_cap.
/// r = 1 yields the weighted h*-polynomial itself.
HStarData hstar_dilated(const EhrhartPoly& e, unsigned long r = 1);

/// All complex roots of the h*-polynomial, each accurate to >= 10 significant
/// digits.  Simultaneous (Durand-Kerner) iteration in 256-bit floats over the
/// exact coefficients, with the residual certificate
/// |h(root)| < 1e-20 * max|coeff| checked for every root.  This is the only
/// non-exact computation in the library.  Throws ZeroPolynomialError.
std::vector<std::complex<double>> hstar_roots(const HStarData& h);

/// Signs (-1, 0, +1) of h*_1 .. h*_{degree_cap}; the constant term is not
/// part of the pattern (it vanishes identically for homogeneous positive-
/// degree weights).
std::vector<int> sign_pattern(const HStarData& h);

/// "+,+,-" rendering of a sign pattern.
std::string sign_pattern_str(const std::vector<int>& signs);

}  // namespace parehr
