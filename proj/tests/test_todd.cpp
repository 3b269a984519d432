#include <doctest.h>

#include "parehr/todd.hpp"
#include "test_support.hpp"

using namespace parehr;
using namespace parehr::testing;

namespace {
const VarId b1 = VarId::b(0), b2 = VarId::b(1);
const VarId h1 = VarId::h(0), h2 = VarId::h(1);
MPoly V(VarId v) { return MPoly::variable(v); }
}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    for (unsigned j = 1; j <= 10; ++j) CHECK(bernoulli(2 * j + 1) == Rational(0));
}

TEST_CASE("bernoulli defining recurrence") {
    // sum_{i=0}^{k} C(k+1, i) B_i = 0 for all k >= 1 in the table range
    for (unsigned k = 1; k <= 18; ++k) {
        Rational acc(0);
        for (unsigned i = 0; i <= k; ++i) acc += binomial(k + 1, i) * bernoulli(i);
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("todd series coefficients") {
    CHECK(todd_coefficient(0) == Rational(1));
    CHECK(todd_coefficient(1) == Rational(1, 2));
    CHECK(todd_coefficient(2) == Rational(1, 12));
    CHECK(todd_coefficient(3) == Rational(0));
    CHECK(todd_coefficient(4) == Rational(-1, 720));
}

TEST_CASE("todd_apply on small polynomials") {
    CHECK(todd_apply(MPoly(7), h1) == MPoly(7));
    CHECK(todd_apply(V(h1), h1) == V(h1) + MPoly(Rational(1, 2)));
    CHECK(todd_apply(MPoly::variable(h1, 2), h1) ==
          MPoly::variable(h1, 2) + V(h1) + MPoly(Rational(1, 6)));
}

TEST_CASE("todd_apply_all_and_zero on small polynomials") {
    // ((b1+h1)^2 - h2^2)/2 -> b1(b1+1)/2
    const MPoly p = ((V(b1) + V(h1)) * (V(b1) + V(h1)) - V(h2) * V(h2)).scaled(Rational(1, 2));
    CHECK(todd_apply_all_and_zero(p) ==
          (V(b1) * V(b1)).scaled(Rational(1, 2)) + V(b1).scaled(Rational(1, 2)));
    // b1 + b2 + h1 + h2 -> b1 + b2 + 1: the lattice point count of [-b2, b1]
    CHECK(todd_apply_all_and_zero(V(b1) + V(b2) + V(h1) + V(h2)) == V(b1) + V(b2) + MPoly(1));
    // no h variables: unchanged
    const MPoly q = V(b1) * V(b2) + MPoly(3);
    CHECK(todd_apply_all_and_zero(q) == q);
}

TEST_CASE("todd operators commute and are linear") {
    Rng rng(777001);
    const auto pool = default_pool();
    for (int i = 0; i < 120; ++i) {
        const MPoly p = random_mpoly(rng, pool), q = random_mpoly(rng, pool);
        CHECK(todd_apply(todd_apply(p, h1), h2) == todd_apply(todd_apply(p, h2), h1));
        const Rational a = random_rational(rng), b = random_rational(rng);
        CHECK(todd_apply(p.scaled(a) + q.scaled(b), h1) ==
              todd_apply(p, h1).scaled(a) + todd_apply(q, h1).scaled(b));
    }
}

TEST_CASE("truncation safety") {
    // applying the series beyond the h-degree changes nothing
    Rng rng(777002);
    const auto pool = default_pool();
    for (int i = 0; i < 100; ++i) {
        const MPoly p = random_mpoly(rng, pool);
        const std::uint32_t deg = p.degree_in(h1);
        MPoly truncated = p;
        MPoly derivative = p;
        for (std::uint32_t k = 1; k <= deg + 3; ++k) {
            derivative = derivative.partial(h1, 1);
            truncated += derivative.scaled(todd_coefficient(k));
        }
        CHECK(truncated == todd_apply(p, h1));
    }
}

TEST_CASE("single-pass todd+h=0 equals the compositional route") {
    Rng rng(777003);
    const auto pool = default_pool();
    for (int i = 0; i < 120; ++i) {
        const MPoly p = random_mpoly(rng, pool);
        MPoly composed = p;
        for (VarId v : p.variables())
            if (v.block == VarBlock::H) composed = todd_apply(composed, v);
        std::map<VarId, MPoly> h_to_zero;
        for (VarId v : composed.variables())
            if (v.block == VarBlock::H) h_to_zero.emplace(v, MPoly());
        composed = composed.substitute(h_to_zero);
        CHECK(composed == todd_apply_all_and_zero(p));
    }
}
