#include "terj/rational.hpp"

#include <ostream>

namespace terj {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw Error("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

long Rational::to_long() const {
    if (!is_integer()) throw Error("not an integer: " + str());
    mpz_class n = numerator();
    if (!n.fits_slong_p()) throw Error("integer too large for long: " + str());
    return n.get_si();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(v_.get_den(), v_.get_num()));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) throw Error("square root of negative rational");
    const mpz_class& num = v_.get_num();
    const mpz_class& den = v_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace terj
