#ifndef PFV_RATFUNCK_HPP
#define PFV_RATFUNCK_HPP

#include <string>
#include <utility>

#include <pfv/errors.hpp>
#include <pfv/polyk.hpp>
#include <pfv/rational.hpp>

namespace pfv {

/*
 * Field of rational functions Q(k) in the formal level parameter.
 * Canonical form: gcd(num, den) = 1 and den monic, so equality is
 * plain component comparison.  This is the scalar type used for
 * "symbolic in k" computations; Rational is the concrete counterpart.
 */
class RatFuncK {
public:
    RatFuncK() : num_(), den_(1) {}
    RatFuncK(long c) : num_(c), den_(1) {}
    RatFuncK(const Rational& c) : num_(c), den_(1) {}
    RatFuncK(const PolyK& p) : num_(p), den_(1) {}
    RatFuncK(PolyK num, PolyK den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero();
        normalize();
    }

    // The generator k of the field.
    static RatFuncK k() { return RatFuncK(PolyK::var()); }

    const PolyK& num() const { return num_; }
    const PolyK& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFuncK operator-() const { return RatFuncK(-num_, den_, no_normalize_tag{}); }

    friend RatFuncK operator+(const RatFuncK& a, const RatFuncK& b) {
        return RatFuncK(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncK operator-(const RatFuncK& a, const RatFuncK& b) {
        return RatFuncK(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncK operator*(const RatFuncK& a, const RatFuncK& b) {
        return RatFuncK(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFuncK operator/(const RatFuncK& a, const RatFuncK& b) {
        if (b.is_zero()) throw division_by_zero();
        return RatFuncK(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFuncK& operator+=(const RatFuncK& o) { return *this = *this + o; }
    RatFuncK& operator-=(const RatFuncK& o) { return *this = *this - o; }
    RatFuncK& operator*=(const RatFuncK& o) { return *this = *this * o; }
    RatFuncK& operator/=(const RatFuncK& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncK& a, const RatFuncK& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncK& a, const RatFuncK& b) { return !(a == b); }

    RatFuncK inv() const {
        if (is_zero()) throw division_by_zero();
        return RatFuncK(den_, num_);
    }

    RatFuncK pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFuncK r(1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    // Specialize k to a concrete rational value.
    Rational instantiate(const Rational& k0) const {
        const Rational d = den_.eval(k0);
        if (d.is_zero()) {
            throw pole_error("denominator " + den_.str() + " vanishes at k = " + k0.str());
        }
        return num_.eval(k0) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        const std::string n = num_.str();
        const std::string d = den_.str();
        const std::string np = (num_.degree() > 0 && num_.coeffs().size() > 1) ? "(" + n + ")" : n;
        return np + "/(" + d + ")";
    }

private:
    struct no_normalize_tag {};
    RatFuncK(PolyK num, PolyK den, no_normalize_tag)
        : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = PolyK(1);
            return;
        }
        PolyK g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        const Rational lead = den_.leading();
        if (lead != Rational(1)) {
            const Rational li = lead.inv();
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }

    PolyK num_;
    PolyK den_;
};

// --- uniform helpers so templated code can treat both scalar fields alike ---

template <class F>
inline Rational instantiate_k(const F& x, const Rational& k0);

template <>
inline Rational instantiate_k<Rational>(const Rational& x, const Rational&) {
    return x;
}

template <>
inline Rational instantiate_k<RatFuncK>(const RatFuncK& x, const Rational& k0) {
    return x.instantiate(k0);
}

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const RatFuncK& x) { return x.str(); }

} // namespace pfv

#endif
