#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

#include "terj/errors.hpp"

namespace terj {

/// Exact rational scalar, always kept in lowest terms with positive
/// denominator (canonical form is maintained by GMP's mpq layer).
///
/// Serialization is "p" for integers and "p/q" otherwise — never decimals.
class Rational {
public:
    /// Zero.
    Rational() : v_(0) {}
    /// Integer value (implicit: lets matrix code mix ints and rationals).
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(static_cast<long>(v)) {}
    /// num/den in lowest terms; throws DivisionByZero if den == 0.
    Rational(long num, long den);
    /// Adopt an mpq value (canonicalized).
    explicit Rational(mpq_class v);

    /// Parse "p" or "p/q" (optional leading '-'); throws Error on bad syntax,
    /// DivisionByZero on zero denominator.
    static Rational from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Exact conversion to long; throws Error if not an integer or too large.
    long to_long() const;

    /// Greatest integer <= value / least integer >= value.
    mpz_class floor() const;
    mpz_class ceil() const;

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Rational inv() const;

    /// Exact square root if the value is a perfect square of a rational
    /// (returns the nonnegative root), std::nullopt otherwise.
    /// Throws Error on negative input.
    std::optional<Rational> sqrt_exact() const;

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace terj
