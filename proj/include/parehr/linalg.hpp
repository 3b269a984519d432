#pragma once

#include <optional>
#include <vector>

#include "parehr/rational.hpp"

namespace parehr {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major, small dense matrices

Rational mat_det(QMat m);

/// Inverse by Gauss-Jordan; nullopt when singular.
std::optional<QMat> mat_inverse(QMat m);

/// Solves A x = rhs exactly; nullopt when singular.
std::optional<QVec> mat_solve(QMat a, QVec rhs);

QVec mat_apply(const QMat& m, const QVec& v);

/// Rank over the rationals (destroys no inputs; works on a copy).
int mat_rank(QMat m);

/// Basis of the kernel of m (n columns); each vector has length n.
std::vector<QVec> mat_kernel(QMat m);

}  // namespace parehr
