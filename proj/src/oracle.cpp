#include "parehr/oracle.hpp"

#include <cassert>

#include "parehr/errors.hpp"
#include "parehr/linalg.hpp"

namespace parehr {
namespace oracle {

std::vector<IntVec> lattice_points(const HPolytope& P, const IntVec& b) {
    if (!is_bounded(P.A)) throw UnboundedError("oracle: P_A(b) is unbounded");
    const int d = P.d();
    const auto corners = basic_feasible_points(P.A, b);
    if (corners.empty()) return {};

    // exact per-coordinate bounds over the vertex set
    std::vector<mpz_class> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        Rational mn = corners[0][j], mx = corners[0][j];
        for (const auto& c : corners) {
            if (c[j] < mn) mn = c[j];
            if (c[j] > mx) mx = c[j];
        }
        lo[j] = mn.ceil();
        hi[j] = mx.floor();
    }

    std::vector<IntVec> points;
    IntVec p(d);
    auto recurse = [&](auto&& self, int j) -> void {
        if (j == d) {
            for (std::size_t r = 0; r < P.A.size(); ++r) {
                std::int64_t lhs = 0;
                for (int c = 0; c < d; ++c) lhs += P.A[r][c] * p[c];
                if (lhs > b[r]) return;
            }
            points.push_back(p);
            return;
        }
        assert(lo[j].fits_slong_p() && hi[j].fits_slong_p());
        for (std::int64_t v = lo[j].get_si(); v <= hi[j].get_si(); ++v) {
            p[j] = v;
            self(self, j + 1);
        }
    };
    recurse(recurse, 0);
    return points;
}

Rational weighted_count(const HPolytope& P, const IntVec& b, const MPoly& w) {
    Rational total(0);
    for (const auto& p : lattice_points(P, b)) {
        std::map<VarId, Rational> point;
        for (std::size_t j = 0; j < p.size(); ++j)
            point.emplace(VarId::x(static_cast<std::uint32_t>(j)), Rational(p[j]));
        total += w.eval(point);
    }
    return total;
}

EhrhartPoly ehrhart_by_interpolation(const HPolytope& P, const IntVec& b, const WeightPoly& w) {
    const unsigned cap = static_cast<unsigned>(P.d()) + w.m;
    // samples t = 0..cap; t = 0 gives {x : Ax <= 0} = {0}, i.e. w(0)
    QMat vandermonde;
    QVec counts;
    for (unsigned t = 0; t <= cap; ++t) {
        IntVec tb(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) tb[i] = static_cast<std::int64_t>(t) * b[i];
        counts.push_back(weighted_count(P, tb, w.w));
        QVec row;
        Rational power(1);
        for (unsigned j = 0; j <= cap; ++j) {
            row.push_back(power);
            power *= Rational(static_cast<long>(t));
        }
        vandermonde.push_back(std::move(row));
    }
    auto coeffs = mat_solve(std::move(vandermonde), std::move(counts));
    assert(coeffs);  // distinct nodes: never singular
    return EhrhartPoly{std::move(*coeffs), cap};
}

}  // namespace oracle
}  // namespace parehr
