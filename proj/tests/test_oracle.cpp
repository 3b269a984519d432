#include <doctest.h>

#include <algorithm>

#include "parehr/alcoved.hpp"
#include "parehr/errors.hpp"
#include "parehr/oracle.hpp"
#include "test_support.hpp"

using namespace parehr;
using namespace parehr::testing;

namespace {
const VarId x1 = VarId::x(0), x2 = VarId::x(1);
MPoly V(VarId v) { return MPoly::variable(v); }
}  // namespace

TEST_CASE("lattice point enumeration") {
    const HPolytope seg({{1}, {-1}}, {3, 0});
    auto pts = oracle::lattice_points(seg, {3, 0});
    REQUIRE(pts.size() == 4);
    std::sort(pts.begin(), pts.end());
    CHECK(pts == std::vector<IntVec>{{0}, {1}, {2}, {3}});

    const HPolytope sq({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1, 1, 0, 0});
    CHECK(oracle::lattice_points(sq, {1, 1, 0, 0}).size() == 4);

    // infeasible b: empty list, no error
    CHECK(oracle::lattice_points(sq, {-2, 1, 0, 0}).empty());

    CHECK_THROWS_AS(oracle::lattice_points(HPolytope({{1, 0}, {0, 1}, {1, 1}}, {1, 1, 1}),
                                           {1, 1, 1}),
                    UnboundedError);
}

TEST_CASE("lattice count invariant under row permutation") {
    const IntMat A = alcoved_matrix(2);
    const IntVec b{3, 5, 4, 8, 3, 0};
    const auto base = oracle::lattice_points(HPolytope(A, b), b).size();
    const std::vector<std::size_t> perm{5, 3, 1, 0, 4, 2};
    IntMat A2;
    IntVec b2;
    for (std::size_t i : perm) {
        A2.push_back(A[i]);
        b2.push_back(b[i]);
    }
    CHECK(oracle::lattice_points(HPolytope(A2, b2), b2).size() == base);
}

TEST_CASE("weighted counts") {
    const HPolytope seg({{1}, {-1}}, {3, 0});
    CHECK(oracle::weighted_count(seg, {3, 0}, V(x1)) == Rational(6));
    CHECK(oracle::weighted_count(seg, {3, 0}, MPoly()) == Rational(0));
    // frozen: hexagon at (3,5,4,8,3,0) with w = -3x + 2y sums to 25
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    const MPoly w = V(x1).scaled(Rational(-3)) + V(x2).scaled(Rational(2));
    CHECK(oracle::weighted_count(hex, {3, 5, 4, 8, 3, 0}, w) == Rational(25));
}

TEST_CASE("interpolated Ehrhart polynomials") {
    const HPolytope sq({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1, 1, 0, 0});
    const auto esq = oracle::ehrhart_by_interpolation(sq, {1, 1, 0, 0},
                                                      WeightPoly::from_poly(MPoly(1)));
    CHECK(esq.coeffs == UPoly{Rational(1), Rational(2), Rational(1)});

    const HPolytope seg({{1}, {-1}}, {3, 0});
    const auto eseg =
        oracle::ehrhart_by_interpolation(seg, {3, 0}, WeightPoly::from_poly(V(x1)));
    CHECK(eseg.coeffs == UPoly{Rational(0), Rational(3, 2), Rational(9, 2)});

    const auto zero = oracle::ehrhart_by_interpolation(seg, {3, 0}, WeightPoly::from_poly(MPoly()));
    CHECK(up_degree(zero.coeffs) == -1);
}

TEST_CASE("dilation coherence between enumeration and the parametric count") {
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(MPoly(1)));
    for (std::int64_t t = 1; t <= 4; ++t) {
        IntVec tb(6);
        for (int i = 0; i < 6; ++i) tb[i] = t * hex.b0[i];
        std::map<VarId, Rational> at;
        for (int i = 0; i < 6; ++i) at[VarId::b(i)] = Rational(tb[i]);
        CHECK(pc.poly.eval(at) ==
              Rational(static_cast<long>(oracle::lattice_points(hex, tb).size())));
    }
}

TEST_CASE("interpolation agrees with the pipeline on mixed weights") {
    Rng rng(515151);
    for (int rep = 0; rep < 6; ++rep) {
        const auto spec = random_alcoved(2, 5, rng.engine);
        const HPolytope P = spec.polytope();
        const MPoly w = rep % 2 == 0 ? V(x1) * V(x2) : V(x1).scaled(Rational(2)) - V(x2);
        const auto pc = parametric_weighted_count(P, WeightPoly::from_poly(w));
        const auto via_pipeline = weighted_ehrhart(pc, P.b0);
        const auto via_interp = oracle::ehrhart_by_interpolation(P, P.b0, WeightPoly::from_poly(w));
        CHECK(via_pipeline.coeffs == via_interp.coeffs);
    }
}
