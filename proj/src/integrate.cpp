#include "parehr/integrate.hpp"

#include <cassert>

#include "parehr/errors.hpp"

namespace parehr {

WeightPoly WeightPoly::from_poly(MPoly p) {
    for (VarId v : p.variables())
        if (v.block != VarBlock::X)
            throw ParseError("WeightPoly: weight must use x-block variables only, got " +
                             VarTable{}.name(v));
    WeightPoly wp;
    wp.m = p.total_degree();
    wp.homogeneous = true;
    for (const auto& [mono, c] : p.terms())
        if (mono.total_degree() != wp.m) wp.homogeneous = false;
    wp.w = std::move(p);
    return wp;
}

namespace {

// Multisets 1 <= i_1 <= ... <= i_m <= count, lexicographically.
template <class Fn>
void for_each_multiset(unsigned m, unsigned count, Fn fn) {
    std::vector<unsigned> idx(m, 0);
    while (true) {
        fn(const_cast<const std::vector<unsigned>&>(idx));
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0 && idx[pos] == count - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (unsigned j = pos + 1; j < m; ++j) idx[j] = idx[pos];
    }
}

}  // namespace

MPoly integrate_over_simplex(const WeightPoly& f, const std::vector<ParametricVertex>& simplex,
                             int sign) {
    if (!f.homogeneous || f.m == 0)
        throw NotHomogeneousError("integrate_over_simplex: weight must be homogeneous of degree >= 1");
    const unsigned m = f.m;
    const unsigned d = static_cast<unsigned>(simplex[0].coords.size());
    assert(simplex.size() == d + 1);

    MPoly quad_sum;
    for_each_multiset(m, d + 1, [&](const std::vector<unsigned>& pick) {
        // eps runs over {+-1}^m, lexicographic with +1 first
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            int eps_product = 1;
            std::vector<int> eps(m);
            for (unsigned k = 0; k < m; ++k) {
                eps[k] = (mask >> (m - 1 - k)) & 1 ? -1 : 1;
                eps_product *= eps[k];
            }
            std::map<VarId, MPoly> point;  // x_j -> sum_k eps_k s_{i_k}[j]
            for (unsigned j = 0; j < d; ++j) {
                MPoly coord;
                for (unsigned k = 0; k < m; ++k) {
                    const MPoly& sj = simplex[pick[k]].coords[j];
                    if (eps[k] == 1)
                        coord += sj;
                    else
                        coord -= sj;
                }
                point.emplace(VarId::x(j), std::move(coord));
            }
            MPoly value = f.w.substitute(point);
            if (eps_product == 1)
                quad_sum += value;
            else
                quad_sum -= value;
        }
    });

    const Rational prefactor =
        (Rational(1) / (Rational(2).pow(m) * factorial(m) * binomial(m + d, m)));
    return parametric_volume(simplex, sign) * quad_sum.scaled(prefactor);
}

MPoly integrate_over_simplex_degree0(const Rational& c,
                                     const std::vector<ParametricVertex>& simplex, int sign) {
    if (c.is_zero()) return MPoly();
    return parametric_volume(simplex, sign).scaled(c);
}

MPoly integrate_over_polytope(const MPoly& w, const ParametricTriangulation& tri) {
    MPoly total;
    for (const auto& [deg, component] : WeightPoly::from_poly(w).w.homogeneous_components(VarBlock::X)) {
        if (deg == 0) {
            const Rational c = component.constant_term();
            for (std::size_t s = 0; s < tri.simplices.size(); ++s)
                total += integrate_over_simplex_degree0(c, tri.simplex_vertices(s),
                                                        tri.orientation_signs[s]);
        } else {
            WeightPoly f;
            f.w = component;
            f.m = deg;
            f.homogeneous = true;
            for (std::size_t s = 0; s < tri.simplices.size(); ++s)
                total += integrate_over_simplex(f, tri.simplex_vertices(s),
                                                tri.orientation_signs[s]);
        }
    }
    return total;
}

}  // namespace parehr
