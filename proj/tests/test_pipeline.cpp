#include <doctest.h>

#include <complex>

#include "parehr/alcoved.hpp"
#include "parehr/errors.hpp"
#include "parehr/oracle.hpp"
#include "parehr/pipeline.hpp"
#include "test_support.hpp"

using namespace parehr;
using namespace parehr::testing;

namespace {

const VarId x1 = VarId::x(0), x2 = VarId::x(1);
MPoly V(VarId v) { return MPoly::variable(v); }

HPolytope unit_square() {
    return HPolytope({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1, 1, 0, 0});
}

// w = -3x + 2y over the alcoved hexagon family
MPoly nonconvexity_weight() { return V(x1).scaled(Rational(-3)) + V(x2).scaled(Rational(2)); }

EhrhartPoly dilate_inputs(const EhrhartPoly& e, unsigned long r) {
    EhrhartPoly out{e.coeffs, e.degree_cap};
    Rational pw(1);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        out.coeffs[i] *= pw;
        pw *= Rational(static_cast<long>(r));
    }
    return out;
}

}  // namespace

TEST_CASE("segment parametric count in closed form") {
    const HPolytope seg({{1}, {-1}}, {3, 0});
    const auto pc = parametric_weighted_count(seg, WeightPoly::from_poly(V(x1)));
    CHECK(pc.poly.str() == "1/2*b1^2 - 1/2*b2^2 + 1/2*b1 - 1/2*b2");
    CHECK(pc.d == 1);
    CHECK(pc.m == 1);
    // 20 random nondegenerate (b1, b2) against direct summation
    Rng rng(121212);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t b1 = rng.uniform(-5, 12), b2 = rng.uniform(-5, 12);
        if (b1 + b2 < 0) continue;  // empty segment is outside every cone point
        std::map<VarId, Rational> at{{VarId::b(0), Rational(b1)}, {VarId::b(1), Rational(b2)}};
        Rational direct(0);
        for (std::int64_t p = -b2; p <= b1; ++p) direct += Rational(p);
        CHECK(pc.poly.eval(at) == direct);
    }
}

TEST_CASE("unweighted count matches the oracle at b0") {
    for (const auto& P :
         {unit_square(), HPolytope(alcoved_matrix(2), {3, 5, 4, 8, 3, 0})}) {
        const auto pc = parametric_weighted_count(P, WeightPoly::from_poly(MPoly(1)));
        std::map<VarId, Rational> at;
        for (int i = 0; i < P.n(); ++i) at[VarId::b(i)] = Rational(P.b0[i]);
        const Rational counted = pc.poly.eval(at);
        CHECK(counted == Rational(static_cast<long>(oracle::lattice_points(P, P.b0).size())));
    }
}

TEST_CASE("non-smooth input is rejected with a diagnostic") {
    const HPolytope fat({{2, 0}, {0, 1}, {-1, 0}, {0, -1}}, {2, 1, 0, 0});
    CHECK_THROWS_AS(parametric_weighted_count(fat, WeightPoly::from_poly(MPoly(1))),
                    NotSmoothError);
    try {
        parametric_weighted_count(fat, WeightPoly::from_poly(MPoly(1)));
    } catch (const NotSmoothError& e) {
        CHECK(std::string(e.what()).find("vertex") != std::string::npos);
    }
}

TEST_CASE("weighted ehrhart of the unit square is (t+1)^2") {
    const auto pc = parametric_weighted_count(unit_square(), WeightPoly::from_poly(MPoly(1)));
    const auto e = weighted_ehrhart(pc, {1, 1, 0, 0});
    CHECK(e.coeffs == UPoly{Rational(1), Rational(2), Rational(1)});
    CHECK(e.degree_cap == 2);
}

TEST_CASE("weighted ehrhart of the segment with w = x") {
    const HPolytope seg({{1}, {-1}}, {3, 0});
    const auto pc = parametric_weighted_count(seg, WeightPoly::from_poly(V(x1)));
    const auto e = weighted_ehrhart(pc, {3, 0});
    CHECK(e.coeffs == UPoly{Rational(0), Rational(3, 2), Rational(9, 2)});
}

TEST_CASE("ehrhart outside the type cone is rejected") {
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(nonconvexity_weight()));
    CHECK_THROWS_AS(weighted_ehrhart(pc, {1, 5, 1, 1, 0, 0}), OutsideTypeConeError);
    CHECK_THROWS_AS(weighted_ehrhart(pc, {1, 1}), OutsideTypeConeError);
}

TEST_CASE("symbolic ehrhart specializes to the concrete one") {
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(V(x1) * V(x2)));
    const auto sym = weighted_ehrhart_symbolic(pc);
    Rng rng(606060);
    int tested = 0;
    while (tested < 6) {
        IntVec b(6);
        const int scale = rng.uniform(1, 3);
        for (auto& v : b) v = 0;
        for (int i = 0; i < 6; ++i) b[i] = scale * hex.b0[i] + rng.uniform(0, 2);
        if (!in_type_cone(hex, pc.bases, b)) continue;
        ++tested;
        const auto conc = weighted_ehrhart(pc, b);
        std::map<VarId, Rational> at;
        for (int i = 0; i < 6; ++i) at[VarId::b(i)] = Rational(b[i]);
        for (unsigned k = 0; k <= sym.degree_cap; ++k)
            CHECK(sym.coeffs[k].eval(at) == conc.coeffs[k]);
    }
}

TEST_CASE("eulerian polynomials under the generating convention") {
    CHECK(eulerian(0) == UPoly{Rational(1)});
    CHECK(eulerian(1) == UPoly{Rational(0), Rational(1)});
    CHECK(eulerian(2) == UPoly{Rational(0), Rational(1), Rational(1)});
    CHECK(eulerian(3) == UPoly{Rational(0), Rational(1), Rational(4), Rational(1)});
    CHECK(eulerian(4) == UPoly{Rational(0), Rational(1), Rational(11), Rational(11), Rational(1)});
    for (unsigned i = 0; i <= 8; ++i) CHECK(up_eval(eulerian(i), Rational(1)) == factorial(i));
}

TEST_CASE("hstar of the unit square") {
    const auto pc = parametric_weighted_count(unit_square(), WeightPoly::from_poly(MPoly(1)));
    const auto e = weighted_ehrhart(pc, {1, 1, 0, 0});
    const auto h1 = hstar_dilated(e, 1);
    CHECK(h1.hstar == UPoly{Rational(1), Rational(1), Rational(0)});
    CHECK(h1.denom_exponent == 3);
    // r = 2: h* of the 2x2 square; h(1) = 2! * area = 8
    const auto h2 = hstar_dilated(e, 2);
    CHECK(h2.hstar == UPoly{Rational(1), Rational(6), Rational(1)});
    CHECK(up_eval(h2.hstar, Rational(1)) == Rational(8));
}

TEST_CASE("nonconvexity example hstar values") {
    const IntVec v{3, 5, 4, 8, 3, 0}, step{-1, 2, 0, 1, 0, 0};
    const HPolytope hex(alcoved_matrix(2), v);
    const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(nonconvexity_weight()));
    const std::vector<UPoly> expected{
        UPoly{Rational(0), Rational(25), Rational(65), Rational(10)},
        UPoly{Rational(0), Rational(-7), Rational(-37), Rational(-10)},
        UPoly{Rational(0), Rational(-10), Rational(-39), Rational(-9)},
        UPoly{Rational(0), Rational(18), Rational(67), Rational(15)},
    };
    for (int i = 0; i < 4; ++i) {
        IntVec b(6);
        for (int k = 0; k < 6; ++k) b[k] = v[k] + i * step[k];
        const auto h = hstar_dilated(weighted_ehrhart(pc, b), 1);
        CHECK(h.hstar == expected[i]);
    }
}

TEST_CASE("hstar consistency with the Ehrhart series expansion") {
    // sum_t ehr(t) z^t truncated == hstar / (1-z)^{k+1} truncated
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    for (const MPoly& w : {MPoly(1), V(x1) * V(x2), nonconvexity_weight(),
                           MPoly::variable(x1, 2) + V(x2)}) {
        const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(w));
        const auto e = weighted_ehrhart(pc, hex.b0);
        const auto h = hstar_dilated(e, 1);
        const unsigned k = e.degree_cap;
        const unsigned cutoff = 3 * k;
        for (unsigned t = 0; t <= cutoff; ++t) {
            // series coefficient of hstar/(1-z)^{k+1} at z^t
            Rational series(0);
            for (unsigned j = 0; j < h.hstar.size() && j <= t; ++j)
                series += h.hstar[j] * binomial(t - j + k, k);
            CHECK(series == up_eval(e.coeffs, Rational(static_cast<long>(t))));
        }
    }
}

TEST_CASE("dilation transform consistency") {
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(nonconvexity_weight()));
    const auto e = weighted_ehrhart(pc, hex.b0);
    for (unsigned long r : {2ul, 3ul, 5ul})
        CHECK(hstar_dilated(e, r).hstar == hstar_dilated(dilate_inputs(e, r), 1).hstar);
    // hstar(1) = k! * leading coefficient
    const auto h = hstar_dilated(e, 1);
    CHECK(up_eval(h.hstar, Rational(1)) == factorial(e.degree_cap) * e.coeffs.back());
}

TEST_CASE("hstar roots with the residual certificate") {
    // 1 + z
    HStarData h1{UPoly{Rational(1), Rational(1)}, 2};
    auto r1 = hstar_roots(h1);
    REQUIRE(r1.size() == 1);
    CHECK(std::abs(r1[0] - std::complex<double>(-1.0, 0.0)) < 1e-12);

    // z + 4z^2 + z^3 -> {0, -2 +- sqrt(3)}
    HStarData h3{UPoly{Rational(0), Rational(1), Rational(4), Rational(1)}, 4};
    auto r3 = hstar_roots(h3);
    REQUIRE(r3.size() == 3);
    CHECK(std::abs(r3[0] - std::complex<double>(-2.0 - std::sqrt(3.0), 0.0)) < 1e-12);
    CHECK(std::abs(r3[1] - std::complex<double>(-2.0 + std::sqrt(3.0), 0.0)) < 1e-12);
    CHECK(std::abs(r3[2]) < 1e-12);

    // 10z^3 + 65z^2 + 25z -> {0, (-65 +- sqrt(3225))/20}
    HStarData hp{UPoly{Rational(0), Rational(25), Rational(65), Rational(10)}, 4};
    auto rp = hstar_roots(hp);
    REQUIRE(rp.size() == 3);
    const double disc = std::sqrt(4225.0 - 1000.0);
    CHECK(std::abs(rp[0] - std::complex<double>((-65.0 - disc) / 20.0, 0.0)) < 1e-12);
    CHECK(std::abs(rp[1] - std::complex<double>((-65.0 + disc) / 20.0, 0.0)) < 1e-12);
    CHECK(std::abs(rp[2]) < 1e-12);

    CHECK_THROWS_AS(hstar_roots(HStarData{UPoly{Rational(0)}, 3}), ZeroPolynomialError);
}

TEST_CASE("sign patterns") {
    CHECK(sign_pattern(HStarData{UPoly{Rational(0), Rational(25), Rational(65), Rational(10)}, 4}) ==
          std::vector<int>{1, 1, 1});
    CHECK(sign_pattern(HStarData{UPoly{Rational(0), Rational(-10), Rational(-39), Rational(-9)}, 4}) ==
          std::vector<int>{-1, -1, -1});
    CHECK(sign_pattern(HStarData{UPoly{Rational(0), Rational(0), Rational(0), Rational(0)}, 4}) ==
          std::vector<int>{0, 0, 0});
    CHECK(sign_pattern_str({1, 1, -1}) == "+,+,-");
    CHECK(sign_pattern_str({0, -1}) == "0,-");
}

TEST_CASE("base-point independence inside the unique d=2 maximal cone") {
    // 2-dimensional alcoved polytopes have a single maximal type cone, so
    // the parametric count cannot depend on which maximal base was used
    const MPoly w = V(x1) * V(x2);
    const auto from_base = [&](const IntVec& b0) {
        return parametric_weighted_count(HPolytope(alcoved_matrix(2), b0),
                                         WeightPoly::from_poly(w))
            .poly;
    };
    const MPoly reference = from_base({3, 5, 4, 8, 3, 0});
    CHECK(from_base({1, 2, 1, 2, 1, 1}) == reference);
    CHECK(from_base({2, 7, 4, 9, 3, 0}) == reference);
    Rng rng(808080);
    for (int rep = 0; rep < 3; ++rep)
        CHECK(from_base(random_alcoved(2, 9, rng.engine).b) == reference);
}

TEST_CASE("one polynomial serves the whole closed cone") {
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(V(x1) * V(x2)));
    Rng rng(70707);
    int tested = 0;
    while (tested < 10) {
        IntVec b(6);
        const int scale = rng.uniform(1, 3);
        for (int i = 0; i < 6; ++i) b[i] = scale * hex.b0[i] + rng.uniform(0, 3);
        if (!in_type_cone(hex, pc.bases, b)) continue;
        ++tested;
        std::map<VarId, Rational> at;
        for (int i = 0; i < 6; ++i) at[VarId::b(i)] = Rational(b[i]);
        CHECK(pc.poly.eval(at) == oracle::weighted_count(hex, b, V(x1) * V(x2)));
    }
}

TEST_CASE("3-cube with weight x1: arithmetic-series closed form") {
    // sum over [0,t]^3 of p1 = (t+1)^2 * t(t+1)/2, so ehr = (t^4+3t^3+3t^2+t)/2
    IntMat A;
    IntVec b;
    for (int i = 0; i < 3; ++i) {
        IntVec row(3, 0);
        row[i] = 1;
        A.push_back(row);
        b.push_back(1);
    }
    for (int i = 0; i < 3; ++i) {
        IntVec row(3, 0);
        row[i] = -1;
        A.push_back(row);
        b.push_back(0);
    }
    const HPolytope cube(A, b);
    const auto pc = parametric_weighted_count(cube, WeightPoly::from_poly(V(x1)));
    const auto e = weighted_ehrhart(pc, b);
    CHECK(e.coeffs == UPoly{Rational(0), Rational(1, 2), Rational(3, 2), Rational(3, 2),
                            Rational(1, 2)});
}

TEST_CASE("inhomogeneous weights go through the component split") {
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    const MPoly w = V(x1) * V(x2) + V(x1).scaled(Rational(3)) + MPoly(1);
    const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(w));
    CHECK(pc.m == 2);
    std::map<VarId, Rational> at;
    for (int i = 0; i < 6; ++i) at[VarId::b(i)] = Rational(hex.b0[i]);
    CHECK(pc.poly.eval(at) == oracle::weighted_count(hex, hex.b0, w));
    // linearity: the count polynomial splits the same way the weight does
    const auto p1 = parametric_weighted_count(hex, WeightPoly::from_poly(V(x1) * V(x2)));
    const auto p2 = parametric_weighted_count(hex, WeightPoly::from_poly(V(x1)));
    const auto p3 = parametric_weighted_count(hex, WeightPoly::from_poly(MPoly(1)));
    CHECK(pc.poly == p1.poly + p2.poly.scaled(Rational(3)) + p3.poly);
}

TEST_CASE("d=3 polytrope regression fixtures") {
    // maximal 3-dimensional alcoved polytope with 20 vertices; expected
    // values frozen from enumeration and re-derived here by the
    // interpolation oracle
    const IntVec b{4, 3, 3, 3, 4, 3, 2, 2, 4, 2, 3, 4};
    const HPolytope P(alcoved_matrix(3), b);
    REQUIRE(is_smooth(P));
    REQUIRE(enumerate_vertices(P).size() == 20);

    const auto pc1 = parametric_weighted_count(P, WeightPoly::from_poly(MPoly(1)));
    const auto e1 = weighted_ehrhart(pc1, b);
    const UPoly expect1{Rational(1), Rational(23, 2), Rational(53), Rational(193, 2)};
    CHECK(e1.coeffs == expect1);
    CHECK(oracle::ehrhart_by_interpolation(P, b, WeightPoly::from_poly(MPoly(1))).coeffs ==
          expect1);
    CHECK(hstar_dilated(e1, 1).hstar ==
          UPoly{Rational(1), Rational(158), Rational(366), Rational(54)});

    const auto pcx = parametric_weighted_count(P, WeightPoly::from_poly(V(x1)));
    const auto ex = weighted_ehrhart(pcx, b);
    const UPoly expectx{Rational(0), Rational(5, 12), Rational(113, 24), Rational(259, 12),
                        Rational(895, 24)};
    CHECK(ex.coeffs == expectx);
    CHECK(oracle::ehrhart_by_interpolation(P, b, WeightPoly::from_poly(V(x1))).coeffs == expectx);
    CHECK(hstar_dilated(ex, 1).hstar == UPoly{Rational(0), Rational(64), Rational(469),
                                              Rational(342), Rational(20)});

    // degree-3 weight: count at b0 against enumeration, h* frozen
    const MPoly w3 = V(x1) * V(x2) * V(VarId::x(2));
    const auto pc3 = parametric_weighted_count(P, WeightPoly::from_poly(w3));
    std::map<VarId, Rational> at;
    for (int i = 0; i < 12; ++i) at[VarId::b(i)] = Rational(b[i]);
    CHECK(pc3.poly.eval(at) == Rational(152));
    CHECK(pc3.poly.eval(at) == oracle::weighted_count(P, b, w3));
    CHECK(hstar_dilated(weighted_ehrhart(pc3, b), 1).hstar ==
          UPoly{Rational(0), Rational(152), Rational(5381), Rational(21664), Rational(16995),
                Rational(2407), Rational(24)});
}

TEST_CASE("a corrupted count polynomial is caught by the oracle check") {
    // negative control for verification: damage the count and the
    // oracle-equivalence loop must notice
    const HPolytope hex(alcoved_matrix(2), {3, 5, 4, 8, 3, 0});
    auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(V(x1) * V(x2)));
    pc.poly += MPoly(1);  // off-by-one everywhere
    std::map<VarId, Rational> at;
    for (int i = 0; i < 6; ++i) at[VarId::b(i)] = Rational(hex.b0[i]);
    CHECK(pc.poly.eval(at) != oracle::weighted_count(hex, hex.b0, V(x1) * V(x2)));
}

TEST_CASE("root convergence toward the Eulerian limit (smoke)") {
    const IntVec p1{2, 7, 4, 9, 3, 0};
    const HPolytope hex(alcoved_matrix(2), p1);
    const auto pc = parametric_weighted_count(hex, WeightPoly::from_poly(nonconvexity_weight()));
    const auto e = weighted_ehrhart(pc, p1);
    const auto roots_at = [&](unsigned long r) { return hstar_roots(hstar_dilated(e, r)); };
    const double limit_lo = -2.0 - std::sqrt(3.0), limit_hi = -2.0 + std::sqrt(3.0);
    const auto far = roots_at(1000);
    REQUIRE(far.size() == 3);
    CHECK(std::abs(far[0].real() - limit_lo) < 1e-2);
    CHECK(std::abs(far[1].real() - limit_hi) < 1e-2);
    // monotone improvement from r = 10 to r = 1000
    const auto near = roots_at(10);
    CHECK(std::abs(far[1].real() - limit_hi) < std::abs(near[1].real() - limit_hi));
}
