#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parehr/rational.hpp"
#include "parehr/varid.hpp"

namespace parehr {

/// Exponent vector over VarIds.  Canonical form: pairs sorted by variable,
/// all exponents >= 1 (absent variable means exponent 0), so equality is
/// plain structural equality.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(VarId v, std::uint32_t e = 1);

    bool is_one() const { return powers_.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(VarBlock block) const;
    std::uint32_t exponent(VarId v) const;
    const std::vector<std::pair<VarId, std::uint32_t>>& powers() const { return powers_; }

    Monomial times(const Monomial& o) const;
    /// Copy with variable v removed (exponent set to 0).
    Monomial without(VarId v) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic: first by total degree, ties broken by the
    /// earliest variable (in VarId order) with differing exponent, larger
    /// exponent ranking higher.  Returns <0, 0, >0.
    static int compare(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<VarId, std::uint32_t>> powers_;
    friend class MPoly;
};

struct MonomialGrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) < 0;
    }
};

/// Sparse multivariate polynomial over Rational.  Values are immutable in
/// spirit: every operation returns a fresh polynomial, so sharing across
/// threads needs no synchronization.  Term storage is ordered by the
/// canonical graded-lex order, which makes equality, printing and JSON
/// output deterministic.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGrlexLess>;

    MPoly() = default;
    MPoly(Rational c);
    MPoly(int c) : MPoly(Rational(c)) {}

    static MPoly variable(VarId v, std::uint32_t e = 1);
    static MPoly term(Rational c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of an exact monomial (zero if absent).
    Rational coefficient(const Monomial& m) const;
    /// Constant term.
    Rational constant_term() const { return coefficient(Monomial{}); }

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(VarBlock block) const;
    std::uint32_t degree_in(VarId v) const;

    std::vector<VarId> variables() const;
    bool uses_block(VarBlock block) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly scaled(const Rational& c) const;
    MPoly pow(std::uint32_t k) const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// Simultaneous substitution of variables by polynomials; unmapped
    /// variables are left untouched, map entries for absent variables are
    /// ignored.
    MPoly substitute(const std::map<VarId, MPoly>& images) const;

    /// Exact iterated partial derivative d^order/dv^order.
    MPoly partial(VarId v, std::uint32_t order) const;

    /// Full evaluation; throws MissingAssignmentError if some variable of
    /// the polynomial has no assignment.
    Rational eval(const std::map<VarId, Rational>& point) const;

    /// Splits into components homogeneous in the given block, highest block
    /// degree first.  Summing the components reproduces the input.
    std::vector<std::pair<std::uint32_t, MPoly>> homogeneous_components(VarBlock block) const;

    /// Collects by powers of one variable: result[k] contains the terms with
    /// exponent k on v, with v itself removed.
    std::map<std::uint32_t, MPoly> collect(VarId v) const;

    /// Canonical text form: terms in decreasing graded-lex order, exact
    /// rational coefficients, e.g. "1/2*b1^2 + 1/2*b1 - 1/2*b2^2 - 1/2*b2".
    std::string str(const VarTable& vars = {}) const;

    /// Parses the canonical text form (sums of '*'-separated power products
    /// with rational coefficients).  Inverse of str() for valid input.
    static MPoly parse(const std::string& text, const VarTable& vars = {});

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

/// Determinant of a square MPoly matrix by cofactor expansion.
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m);

}  // namespace parehr
