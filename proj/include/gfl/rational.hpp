#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gfl {

/*
 * Arbitrary-precision rational scalar backed by GMP.
 *
 * Canonical form is maintained at all times: denominator > 0,
 * gcd(|num|, den) = 1, and zero is stored as 0/1.  All certificate
 * arithmetic in this library runs on these values; there is no
 * floating-point fallback on the exact paths.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "num/den", "num", or a decimal string such as "2.5" (converted
    /// exactly, never through a double).
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

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

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Largest integer <= value.
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return r;
    }
    /// Smallest integer >= value.
    mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return r;
    }

    double to_double() const { return v_.get_d(); }

    /// Serialized form used in every JSON/CSV surface: always "num/den",
    /// e.g. "-3/2", "0/1".
    std::string str() const { return num().get_str() + "/" + den().get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// den != 0 required; result is reduced and sign-normalized.
inline Rational make_rational(long num, long den) { return Rational(num, den); }

}  // namespace gfl
