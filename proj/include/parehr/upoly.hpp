#pragma once

#include <string>
#include <vector>

#include "parehr/rational.hpp"

namespace parehr {

/// Dense univariate polynomial, ascending coefficients.  Used for the t- and
/// z-side of the pipeline where sparse multivariate machinery would be noise.
using UPoly = std::vector<Rational>;

UPoly up_trim(UPoly p);
int up_degree(const UPoly& p);  // -1 for the zero polynomial
UPoly up_add(UPoly a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(UPoly p, const Rational& c);
UPoly up_pow(const UPoly& p, unsigned k);
Rational up_eval(const UPoly& p, const Rational& x);

/// Canonical text, descending powers: "15*z^3 + 67*z^2 + 18*z"; zero -> "0".
std::string up_str(const UPoly& p, const std::string& var);

}  // namespace parehr
