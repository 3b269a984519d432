#include "parehr/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parehr/errors.hpp"

namespace parehr {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(VarId v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.powers_.emplace_back(v, e);
    return m;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : powers_) d += e;
    return d;
}

std::uint32_t Monomial::degree_in(VarBlock block) const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : powers_)
        if (v.block == block) d += e;
    return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
    for (const auto& [u, e] : powers_)
        if (u == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.powers_.reserve(powers_.size() + o.powers_.size());
    auto a = powers_.begin(), b = o.powers_.begin();
    while (a != powers_.end() && b != o.powers_.end()) {
        if (a->first == b->first) {
            r.powers_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        } else if (a->first < b->first) {
            r.powers_.push_back(*a++);
        } else {
            r.powers_.push_back(*b++);
        }
    }
    r.powers_.insert(r.powers_.end(), a, powers_.end());
    r.powers_.insert(r.powers_.end(), b, o.powers_.end());
    return r;
}

Monomial Monomial::without(VarId v) const {
    Monomial r;
    for (const auto& p : powers_)
        if (p.first != v) r.powers_.push_back(p);
    return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    const std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
        if (i->first == j->first) {
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
            ++i;
            ++j;
        } else if (i->first < j->first) {
            return 1;  // a has positive exponent on an earlier variable
        } else {
            return -1;
        }
    }
    if (i != a.powers_.end()) return 1;
    if (j != b.powers_.end()) return -1;
    return 0;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(Rational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

MPoly MPoly::variable(VarId v, std::uint32_t e) {
    MPoly p;
    p.terms_.emplace(Monomial::var(v, e), Rational(1));
    return p;
}

MPoly MPoly::term(Rational c, Monomial m) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MPoly::total_degree() const {
    // map is graded: the last term has maximal total degree
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

std::uint32_t MPoly::degree_in(VarBlock block) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(block));
    return d;
}

std::uint32_t MPoly::degree_in(VarId v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

std::vector<VarId> MPoly::variables() const {
    std::vector<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.powers()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool MPoly::uses_block(VarBlock block) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.powers())
            if (v.block == block) return true;
    return false;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

MPoly MPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return MPoly();
    MPoly r(*this);
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

MPoly MPoly::pow(std::uint32_t k) const {
    MPoly r(Rational(1));
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& images) const {
    // cache image powers across terms
    std::map<VarId, std::vector<MPoly>> powers;
    for (const auto& [v, img] : images) powers[v] = {MPoly(Rational(1))};
    auto power_of = [&](VarId v, std::uint32_t e) -> const MPoly& {
        auto& cache = powers.at(v);
        while (cache.size() <= e) cache.push_back(cache.back() * images.at(v));
        return cache[e];
    };

    MPoly result;
    for (const auto& [m, c] : terms_) {
        Monomial untouched;
        MPoly factor(c);
        bool any_mapped = false;
        for (const auto& [v, e] : m.powers()) {
            if (images.count(v)) {
                factor = factor * power_of(v, e);
                any_mapped = true;
            } else {
                untouched.powers_.emplace_back(v, e);
            }
        }
        if (!any_mapped) {
            result.add_term(m, c);
        } else {
            for (const auto& [fm, fc] : factor.terms_) result.add_term(fm.times(untouched), fc);
        }
    }
    return result;
}

MPoly MPoly::partial(VarId v, std::uint32_t order) const {
    if (order == 0) return *this;
    MPoly r;
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.exponent(v);
        if (e < order) continue;
        Rational coeff = c;
        for (std::uint32_t k = 0; k < order; ++k) coeff *= Rational(static_cast<long>(e - k));
        Monomial reduced = m.without(v);
        if (e > order) reduced = reduced.times(Monomial::var(v, e - order));
        r.add_term(reduced, coeff);
    }
    return r;
}

Rational MPoly::eval(const std::map<VarId, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational val = c;
        for (const auto& [v, e] : m.powers()) {
            auto it = point.find(v);
            if (it == point.end())
                throw MissingAssignmentError("eval: no assignment for variable " +
                                             VarTable{}.name(v));
            val *= it->second.pow(e);
        }
        total += val;
    }
    return total;
}

std::vector<std::pair<std::uint32_t, MPoly>> MPoly::homogeneous_components(VarBlock block) const {
    std::map<std::uint32_t, MPoly> by_degree;
    for (const auto& [m, c] : terms_) by_degree[m.degree_in(block)].add_term(m, c);
    std::vector<std::pair<std::uint32_t, MPoly>> out;
    for (auto it = by_degree.rbegin(); it != by_degree.rend(); ++it)
        out.emplace_back(it->first, std::move(it->second));
    return out;
}

std::map<std::uint32_t, MPoly> MPoly::collect(VarId v) const {
    std::map<std::uint32_t, MPoly> out;
    for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(m.without(v), c);
    return out;
}

// ---------------------------------------------------------------------------
// text form

std::string MPoly::str(const VarTable& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << mag.str();
        } else {
            bool printed = false;
            if (!mag.is_one()) {
                os << mag.str();
                printed = true;
            }
            for (const auto& [v, e] : m.powers()) {
                if (printed) os << "*";
                os << vars.name(v);
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

}  // namespace

MPoly MPoly::parse(const std::string& text, const VarTable& vars) {
    Lexer lx{text};
    MPoly result;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.peek() == '-') sign = -1;
            ++lx.i;
        } else if (!first) {
            throw ParseError("MPoly: expected '+' or '-' near position " + std::to_string(lx.i));
        }
        first = false;
        if (lx.eof()) throw ParseError("MPoly: dangling sign");

        Rational coeff(sign);
        Monomial mono;
        bool expect_factor = true;
        bool saw_factor = false;
        while (expect_factor) {
            lx.skip_ws();
            if (lx.i < lx.s.size() &&
                (std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))) {
                std::size_t start = lx.i;
                while (lx.i < lx.s.size() &&
                       (std::isdigit(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '/'))
                    ++lx.i;
                coeff *= Rational::from_string(lx.s.substr(start, lx.i - start));
            } else if (lx.i < lx.s.size() &&
                       std::isalpha(static_cast<unsigned char>(lx.s[lx.i]))) {
                std::size_t start = lx.i;
                while (lx.i < lx.s.size() &&
                       (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
                    ++lx.i;
                const std::string name = lx.s.substr(start, lx.i - start);
                auto v = vars.lookup(name);
                if (!v) throw ParseError("MPoly: unknown variable '" + name + "'");
                std::uint32_t e = 1;
                lx.skip_ws();
                if (lx.i < lx.s.size() && lx.s[lx.i] == '^') {
                    ++lx.i;
                    lx.skip_ws();
                    std::size_t es = lx.i;
                    while (lx.i < lx.s.size() &&
                           std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
                        ++lx.i;
                    if (es == lx.i) throw ParseError("MPoly: missing exponent");
                    e = static_cast<std::uint32_t>(std::stoul(lx.s.substr(es, lx.i - es)));
                }
                mono = mono.times(Monomial::var(v.value(), e));
            } else {
                throw ParseError("MPoly: unexpected character near position " +
                                 std::to_string(lx.i));
            }
            saw_factor = true;
            lx.skip_ws();
            if (lx.i < lx.s.size() && lx.s[lx.i] == '*') {
                ++lx.i;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw ParseError("MPoly: empty term");
        result.add_term(mono, coeff);
    }
    return result;
}

// ---------------------------------------------------------------------------

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return MPoly(Rational(1));
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    MPoly det;
    std::vector<std::vector<MPoly>> minor(n - 1, std::vector<MPoly>(n - 1));
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k].is_zero()) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        MPoly cof = m[0][k] * mpoly_det(minor);
        if (k % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

}  // namespace parehr
