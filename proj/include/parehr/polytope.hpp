#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parehr/linalg.hpp"
#include "parehr/mpoly.hpp"

namespace parehr {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;

/// P_A(b) = { x : A x <= b } with fixed integer facet normals A (rows) and a
/// base right-hand side b0.  Boundedness / dimension / simplicity are
/// properties of the geometry and are checked by the operations that need
/// them, against the base point b0.
struct HPolytope {
    IntMat A;
    IntVec b0;

    HPolytope(IntMat a, IntVec b);

    int n() const { return static_cast<int>(A.size()); }
    int d() const { return static_cast<int>(A.empty() ? 0 : A[0].size()); }
};

/// A vertex of a simple polytope, identified by its d tight facets.
struct VertexBasis {
    std::vector<int> facet_set;  // sorted row indices, size d
    QMat inverse;                // A_I^{-1}
    QVec vertex;                 // A_I^{-1} b0_I
};

/// Vertex coordinates as degree-1 polynomials in the B/H blocks: the motion
/// of the vertex as the walls move.
struct ParametricVertex {
    std::vector<MPoly> coords;
};

/// Triangulation of P_A(b0) whose simplices track wall motion through their
/// parametric vertices.  orientation_signs freeze the sign of the vertex
/// difference determinant at b0 so that signed volumes stay polynomial.
struct ParametricTriangulation {
    int d = 0;
    std::vector<ParametricVertex> vertices;       // one per polytope vertex
    std::vector<QVec> vertex_points;              // numeric coordinates at b0
    std::vector<std::vector<int>> simplices;      // (d+1)-tuples of vertex ids
    std::vector<int> orientation_signs;           // +-1 per simplex

    std::vector<ParametricVertex> simplex_vertices(std::size_t s) const;
};

/// True when {x : Ax <= 0} = {0}; depends only on A.
bool is_bounded(const IntMat& A);

/// All basic feasible points of A x <= b (dedup'd); the oracle's bounding
/// boxes are built from these.  Requires boundedness.
std::vector<QVec> basic_feasible_points(const IntMat& A, const IntVec& b);

/// One VertexBasis per vertex of P_A(b0).  Throws UnboundedError, or
/// DegenerateError when the polytope is empty, not full-dimensional, or has
/// a non-simple vertex (more than d tight facets).
std::vector<VertexBasis> enumerate_vertices(const HPolytope& P);

/// Vertex as polynomials in b and h: A_I^{-1} (b_I + h_I).
ParametricVertex parametric_vertex(const VertexBasis& vb);

/// Every vertex simple with unimodular tight-facet submatrix.  Never throws
/// for bounded full-dimensional input; non-simple vertices yield false.
bool is_smooth(const HPolytope& P);

/// Closed type-cone membership: for every basis I the point A_I^{-1} b_I
/// still satisfies A x <= b.  Coarsenings (walls meeting) are allowed.
bool in_type_cone(const HPolytope& P, const std::vector<VertexBasis>& bases, const QVec& b);
bool in_type_cone(const HPolytope& P, const std::vector<VertexBasis>& bases, const IntVec& b);

/// Placing (incremental) triangulation over the vertices of P_A(b0), taken
/// in lexicographic coordinate order; deterministic.  `order_seed == 0`
/// gives the canonical order, other seeds shuffle the insertion order (used
/// to cross-check triangulation independence).
ParametricTriangulation triangulate(const HPolytope& P, const std::vector<VertexBasis>& bases,
                                    std::uint64_t order_seed = 0);

/// Signed simplex volume sign*det(s_2-s_1, ..., s_{d+1}-s_1)/d! as a
/// polynomial in (b, h); positive at b0 by choice of sign.
MPoly parametric_volume(const std::vector<ParametricVertex>& simplex, int sign);

/// Sum of parametric simplex volumes: the volume of P_A(b+h) on the type cone.
MPoly parametric_volume(const ParametricTriangulation& tri);

std::string format_point(const QVec& p);

}  // namespace parehr
