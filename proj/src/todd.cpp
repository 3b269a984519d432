#include "parehr/todd.hpp"

#include <cassert>
#include <mutex>
#include <vector>

namespace parehr {

namespace {

}  // namespace

// sum_{i=0}^{k} C(k+1, i) B_i = 0 for k >= 1, solved for B_k.  The memo
// table only grows and is read back under the same lock, so concurrent use
// is safe.
Rational bernoulli(unsigned k) {
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k) {
        const unsigned m = static_cast<unsigned>(table.size());
        Rational acc(0);
        for (unsigned i = 0; i < m; ++i) acc += binomial(m + 1, i) * table[i];
        table.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return table[k];
}

Rational todd_coefficient(unsigned k) {
    Rational c = bernoulli(k) / factorial(k);
    return (k % 2 == 1) ? -c : c;
}

namespace {

// The two Bernoulli sign conventions differ exactly in B_1; pin the series
// 1 + x/2 + x^2/12 once per process.
struct ToddConventionCheck {
    ToddConventionCheck() {
        assert(todd_coefficient(0) == Rational(1));
        assert(todd_coefficient(1) == Rational(1, 2));
        assert(todd_coefficient(2) == Rational(1, 12));
    }
};
const ToddConventionCheck todd_convention_check{};

}  // namespace

MPoly todd_apply(const MPoly& p, VarId v) {
    MPoly result = p;  // k = 0
    MPoly derivative = p;
    const std::uint32_t cap = p.degree_in(v);
    for (std::uint32_t k = 1; k <= cap; ++k) {
        derivative = derivative.partial(v, 1);
        result += derivative.scaled(todd_coefficient(k));
    }
    return result;
}

MPoly todd_apply_all_and_zero(const MPoly& p) {
    MPoly result;
    for (const auto& [m, c] : p.terms()) {
        Rational factor = c;
        Monomial rest;
        for (const auto& [v, e] : m.powers()) {
            if (v.block == VarBlock::H) {
                const Rational b = bernoulli(e);
                if (b.is_zero()) {
                    factor = Rational(0);
                    break;
                }
                factor *= (e % 2 == 1) ? -b : b;
            } else {
                rest = rest.times(Monomial::var(v, e));
            }
        }
        if (!factor.is_zero()) result += MPoly::term(factor, rest);
    }
    return result;
}

}  // namespace parehr
