#ifndef PFV_POLYK_HPP
#define PFV_POLYK_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <pfv/errors.hpp>
#include <pfv/rational.hpp>

namespace pfv {

/*
 * Dense univariate polynomial over the rationals, used as numerator /
 * denominator of the coefficient field Q(k).  Coefficients are stored
 * lowest degree first and trailing zeros are trimmed, so the zero
 * polynomial has an empty coefficient vector and degree() == -1.
 */
class PolyK {
public:
    PolyK() = default;
    PolyK(long c) { if (c != 0) c_.push_back(Rational(c)); }
    PolyK(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    explicit PolyK(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    // The variable k itself.
    static PolyK var() { return PolyK(std::vector<Rational>{Rational(0), Rational(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    PolyK operator-() const {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return PolyK(std::move(r));
    }

    friend PolyK operator+(const PolyK& a, const PolyK& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
        }
        return PolyK(std::move(r));
    }
    friend PolyK operator-(const PolyK& a, const PolyK& b) { return a + (-b); }

    friend PolyK operator*(const PolyK& a, const PolyK& b) {
        if (a.is_zero() || b.is_zero()) return PolyK();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return PolyK(std::move(r));
    }

    PolyK& operator+=(const PolyK& o) { return *this = *this + o; }
    PolyK& operator-=(const PolyK& o) { return *this = *this - o; }
    PolyK& operator*=(const PolyK& o) { return *this = *this * o; }

    friend bool operator==(const PolyK& a, const PolyK& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyK& a, const PolyK& b) { return !(a == b); }

    PolyK scaled(const Rational& s) const {
        if (s.is_zero()) return PolyK();
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return PolyK(std::move(r));
    }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<PolyK, PolyK> divmod(const PolyK& d) const {
        if (d.is_zero()) throw division_by_zero();
        PolyK r = *this;
        std::vector<Rational> q;
        if (r.degree() >= d.degree()) {
            q.assign(static_cast<size_t>(r.degree() - d.degree() + 1), Rational(0));
        }
        const Rational lead_inv = d.leading().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const long shift = r.degree() - d.degree();
            const Rational c = r.leading() * lead_inv;
            q[static_cast<size_t>(shift)] = c;
            std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
            for (const Rational& dc : d.c_) sub.push_back(dc * c);
            r = r - PolyK(std::move(sub));
        }
        return {PolyK(std::move(q)), r};
    }

    PolyK monic() const {
        if (is_zero()) return PolyK();
        return scaled(leading().inv());
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::string str(const std::string& name = "k") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            const Rational& c = c_[i];
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += (c.sign() < 0) ? " - " : " + ";
            }
            const bool unit = (a == Rational(1)) && i != 0;
            if (!unit) out += a.str();
            if (i >= 1) {
                if (!unit) out += "*";
                out += name;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Monic gcd via the Euclidean algorithm over Q.
inline PolyK poly_gcd(PolyK a, PolyK b) {
    while (!b.is_zero()) {
        PolyK r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace pfv

#endif
