#include "parehr/rational.hpp"

#include <ostream>

namespace parehr {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw ParseError("Rational: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw ParseError("Rational: zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned k) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), k);
    return Rational(std::move(r));  // num/den already coprime, powers stay coprime
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

}  // namespace parehr
