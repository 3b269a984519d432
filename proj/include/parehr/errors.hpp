#pragma once

#include <stdexcept>
#include <string>

namespace parehr {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The polyhedron has a recession direction (no vertex enumeration possible).
struct UnboundedError : Error {
    using Error::Error;
};

/// Empty, lower-dimensional, or non-simple input where a simple full-dimensional
/// polytope is required.
struct DegenerateError : Error {
    using Error::Error;
};

/// A vertex cone is not generated by a lattice basis.
struct NotSmoothError : Error {
    using Error::Error;
};

/// Weight passed to the simplex quadrature is not homogeneous.
struct NotHomogeneousError : Error {
    using Error::Error;
};

/// Right-hand side vector is outside the closed type cone of the base polytope.
struct OutsideTypeConeError : Error {
    using Error::Error;
};

/// Polynomial evaluation with an unassigned variable.
struct MissingAssignmentError : Error {
    using Error::Error;
};

/// Alcoved parameter vector violates a triangle (or 2-cycle) inequality.
struct NotMetricError : Error {
    using Error::Error;
};

/// A rejection-sampling loop ran out of its retry budget.
struct ExhaustedAttemptsError : Error {
    using Error::Error;
};

/// Root finding requested for the zero polynomial.
struct ZeroPolynomialError : Error {
    using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace parehr
