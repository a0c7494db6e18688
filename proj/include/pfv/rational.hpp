#ifndef PFV_RATIONAL_HPP
#define PFV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include <pfv/errors.hpp>

namespace pfv {

/*
 * Arbitrary-precision rational scalar, a thin wrapper around GMP's
 * mpq_class that is always kept in canonical form (reduced fraction,
 * positive denominator) and throws instead of aborting on division
 * by zero.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) { v_.canonicalize(); }
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw division_by_zero();
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw division_by_zero();
        v_.canonicalize();
    }
    // Parses "n" or "n/d".
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) { return Rational(s); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
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

    Rational inv() const {
        if (is_zero()) throw division_by_zero();
        return Rational(mpq_class(1) / v_);
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rational factorial(long n) {
    if (n < 0) throw math_error("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

// Generalized binomial coefficient C(x, t) = x(x-1)...(x-t+1)/t! for
// integer x (possibly negative) and t >= 0.
inline Rational binomial(long x, long t) {
    if (t < 0) return Rational(0);
    mpz_class num(1);
    for (long i = 0; i < t; ++i) num *= mpz_class(x - i);
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(t));
    return Rational(num, den);
}

} // namespace pfv

#endif
