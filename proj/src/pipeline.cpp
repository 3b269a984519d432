#include "parehr/pipeline.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "parehr/errors.hpp"
#include "parehr/todd.hpp"

namespace parehr {

ParametricCount parametric_weighted_count(const HPolytope& P, const WeightPoly& w) {
    auto bases = enumerate_vertices(P);  // rejects unbounded / degenerate / non-simple
    for (const auto& vb : bases) {
        const Rational det_inv = mat_det(vb.inverse);
        if (!(det_inv == Rational(1) || det_inv == Rational(-1)))
            throw NotSmoothError("parametric_weighted_count: vertex " + format_point(vb.vertex) +
                                 " has a non-unimodular facet basis (|det A_I| = " +
                                 det_inv.reciprocal().abs().str() + ")");
    }
    auto tri = triangulate(P, bases);
    const MPoly integral = integrate_over_polytope(w.w, tri);
    MPoly counted = todd_apply_all_and_zero(integral);

    assert(!counted.uses_block(VarBlock::H));
    assert(!counted.uses_block(VarBlock::X));
    assert(counted.total_degree() <= static_cast<std::uint32_t>(P.d()) + w.m);

    ParametricCount pc{std::move(counted), P, std::move(bases), P.d(), w.m};
    return pc;
}

namespace {

UPoly collect_t_coeffs(const MPoly& in_t, unsigned cap) {
    UPoly coeffs(cap + 1, Rational(0));
    for (const auto& [power, piece] : in_t.collect(VarId::t())) {
        if (power > cap)
            throw Error("weighted_ehrhart: degree exceeds d+m cap");  // unreachable by construction
        assert(piece.is_constant());
        coeffs[power] = piece.constant_term();
    }
    return coeffs;
}

}  // namespace

EhrhartPoly weighted_ehrhart(const ParametricCount& pc, const IntVec& b) {
    if (b.size() != static_cast<std::size_t>(pc.polytope.n()))
        throw OutsideTypeConeError("weighted_ehrhart: b has wrong length");
    if (!in_type_cone(pc.polytope, pc.bases, b))
        throw OutsideTypeConeError("weighted_ehrhart: b outside the closed type cone of b0");
    std::map<VarId, MPoly> sub;
    for (std::size_t i = 0; i < b.size(); ++i)
        sub.emplace(VarId::b(static_cast<std::uint32_t>(i)),
                    MPoly::variable(VarId::t()).scaled(Rational(static_cast<long>(b[i]))));
    const MPoly in_t = pc.poly.substitute(sub);
    const unsigned cap = static_cast<unsigned>(pc.d) + pc.m;
    return EhrhartPoly{collect_t_coeffs(in_t, cap), cap};
}

ParametricEhrhart weighted_ehrhart_symbolic(const ParametricCount& pc) {
    std::map<VarId, MPoly> sub;
    for (int i = 0; i < pc.polytope.n(); ++i) {
        const VarId bi = VarId::b(static_cast<std::uint32_t>(i));
        sub.emplace(bi, MPoly::variable(VarId::t()) * MPoly::variable(bi));
    }
    const MPoly in_t = pc.poly.substitute(sub);
    const unsigned cap = static_cast<unsigned>(pc.d) + pc.m;
    ParametricEhrhart pe;
    pe.degree_cap = cap;
    pe.coeffs.assign(cap + 1, MPoly());
    for (const auto& [power, piece] : in_t.collect(VarId::t())) {
        assert(power <= cap);
        pe.coeffs[power] = piece;
    }
    return pe;
}

UPoly eulerian(unsigned i) {
    static std::vector<UPoly> table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= i) {
        const unsigned n = static_cast<unsigned>(table.size());
        // A_n(z) = (1-z)^{n+1} * sum_t t^n z^t truncated at degree n:
        // a_j = sum_{s<=j} (-1)^{j-s} C(n+1, j-s) s^n, with 0^0 = 1.
        UPoly a(n + 1, Rational(0));
        for (unsigned j = 0; j <= n; ++j) {
            Rational acc(0);
            for (unsigned s = 0; s <= j; ++s) {
                Rational power(1);
                if (n > 0) {
                    mpz_class p;
                    mpz_ui_pow_ui(p.get_mpz_t(), s, n);
                    power = Rational(p);
                } else if (s == 0) {
                    power = Rational(1);
                }
                Rational term = binomial(n + 1, j - s) * power;
                if ((j - s) % 2 == 1) term = -term;
                acc += term;
            }
            a[j] = acc;
        }
        table.push_back(std::move(a));
    }
    return table[i];
}

HStarData hstar_dilated(const EhrhartPoly& e, unsigned long r) {
    if (r == 0) throw Error("hstar_dilated: dilation factor must be positive");
    const unsigned k = e.degree_cap;
    const UPoly one_minus_z{Rational(1), Rational(-1)};
    UPoly acc(k + 1, Rational(0));
    Rational r_pow(1);
    const Rational r_q(static_cast<long>(r));
    for (unsigned i = 0; i <= k; ++i) {
        if (i > 0) r_pow *= r_q;
        if (i < e.coeffs.size() && !e.coeffs[i].is_zero()) {
            UPoly term = up_scale(eulerian(i), e.coeffs[i] * r_pow);
            term = up_mul(term, up_pow(one_minus_z, k - i));
            acc = up_add(std::move(acc), term);
        }
    }
    acc.resize(k + 1, Rational(0));  // degree <= k by construction
    return HStarData{std::move(acc), k + 1};
}

// ---------------------------------------------------------------------------
// root finding (the quarantined non-exact corner)

namespace {

constexpr unsigned kRootPrecisionBits = 256;

struct MpComplex {
    mpf_class re{0, kRootPrecisionBits};
    mpf_class im{0, kRootPrecisionBits};
};

MpComplex c_add(const MpComplex& a, const MpComplex& b) {
    MpComplex r;
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}

MpComplex c_sub(const MpComplex& a, const MpComplex& b) {
    MpComplex r;
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

MpComplex c_mul(const MpComplex& a, const MpComplex& b) {
    MpComplex r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

MpComplex c_div(const MpComplex& a, const MpComplex& b) {
    MpComplex r;
    mpf_class denom(b.re * b.re + b.im * b.im, kRootPrecisionBits);
    r.re = (a.re * b.re + a.im * b.im) / denom;
    r.im = (a.im * b.re - a.re * b.im) / denom;
    return r;
}

mpf_class c_abs2(const MpComplex& a) {
    return mpf_class(a.re * a.re + a.im * a.im, kRootPrecisionBits);
}

MpComplex horner(const std::vector<MpComplex>& coeffs_desc, const MpComplex& x) {
    MpComplex acc = coeffs_desc.front();
    for (std::size_t i = 1; i < coeffs_desc.size(); ++i)
        acc = c_add(c_mul(acc, x), coeffs_desc[i]);
    return acc;
}

}  // namespace

std::vector<std::complex<double>> hstar_roots(const HStarData& h) {
    const int deg = up_degree(h.hstar);
    if (deg < 0) throw ZeroPolynomialError("hstar_roots: zero polynomial");

    std::vector<std::complex<double>> roots;
    // deflate exact zero roots (trailing z powers)
    int low = 0;
    while (h.hstar[low].is_zero()) ++low;
    for (int i = 0; i < low; ++i) roots.emplace_back(0.0, 0.0);
    const int k = deg - low;
    if (k == 0) {
        std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        return roots;
    }

    // monic coefficients of the deflated polynomial, descending
    std::vector<MpComplex> coeffs(k + 1);
    const Rational lead = h.hstar[deg];
    for (int i = 0; i <= k; ++i) {
        const Rational c = h.hstar[low + (k - i)] / lead;
        coeffs[i].re = mpf_class(c.raw(), kRootPrecisionBits);
    }

    // Durand-Kerner from the usual (0.4 + 0.9i)^j spiral of start values
    std::vector<MpComplex> x(k);
    MpComplex seed;
    seed.re = mpf_class(0.4, kRootPrecisionBits);
    seed.im = mpf_class(0.9, kRootPrecisionBits);
    MpComplex cur;
    cur.re = mpf_class(1, kRootPrecisionBits);
    for (int j = 0; j < k; ++j) {
        cur = c_mul(cur, seed);
        x[j] = cur;
    }
    mpf_class tol(1e-60, kRootPrecisionBits);
    for (int iter = 0; iter < 2000; ++iter) {
        mpf_class worst(0, kRootPrecisionBits);
        for (int j = 0; j < k; ++j) {
            MpComplex denom;
            denom.re = mpf_class(1, kRootPrecisionBits);
            for (int l = 0; l < k; ++l) {
                if (l == j) continue;
                denom = c_mul(denom, c_sub(x[j], x[l]));
            }
            const MpComplex delta = c_div(horner(coeffs, x[j]), denom);
            x[j] = c_sub(x[j], delta);
            const mpf_class d2 = c_abs2(delta);
            if (d2 > worst) worst = d2;
        }
        if (worst < tol * tol) break;
    }

    // residual certificate against the exact input coefficients
    mpf_class norm(0, kRootPrecisionBits);
    for (const auto& c : h.hstar) {
        mpf_class a(c.abs().raw(), kRootPrecisionBits);
        if (a > norm) norm = a;
    }
    std::vector<MpComplex> exact_desc(deg + 1);
    for (int i = 0; i <= deg; ++i)
        exact_desc[i].re = mpf_class(h.hstar[deg - i].raw(), kRootPrecisionBits);
    const mpf_class bound = mpf_class(1e-20, kRootPrecisionBits) * norm;
    for (int j = 0; j < k; ++j) {
        const mpf_class resid2 = c_abs2(horner(exact_desc, x[j]));
        if (!(resid2 < bound * bound))
            throw Error("hstar_roots: residual certificate failed (root did not converge)");
        roots.emplace_back(x[j].re.get_d(), x[j].im.get_d());
    }
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

std::vector<int> sign_pattern(const HStarData& h) {
    std::vector<int> signs;
    const unsigned cap = h.degree_cap();
    signs.reserve(cap);
    for (unsigned i = 1; i <= cap; ++i)
        signs.push_back(i < h.hstar.size() ? h.hstar[i].sign() : 0);
    return signs;
}

std::string sign_pattern_str(const std::vector<int>& signs) {
    std::string out;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) out += ",";
        out += signs[i] > 0 ? "+" : signs[i] < 0 ? "-" : "0";
    }
    return out;
}

}  // namespace parehr
