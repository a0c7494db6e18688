#ifndef PFV_WPOLY_HPP
#define PFV_WPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <pfv/errors.hpp>
#include <pfv/ratfunck.hpp>

namespace pfv {

/*
 * A polynomial ring with positively weighted variables.  Rings are
 * immutable and shared; two WPoly values interoperate iff their rings
 * compare equal (same variable names and weights).
 */
struct WRing {
    std::vector<std::string> vars;
    std::vector<long> weights;

    size_t nvars() const { return vars.size(); }

    friend bool operator==(const WRing& a, const WRing& b) {
        return a.vars == b.vars && a.weights == b.weights;
    }
};

using WRingPtr = std::shared_ptr<const WRing>;

inline WRingPtr make_ring(std::vector<std::string> vars, std::vector<long> weights) {
    if (vars.size() != weights.size()) throw ring_mismatch("vars/weights size mismatch");
    for (long w : weights) {
        if (w <= 0) throw ring_mismatch("weights must be positive");
    }
    return std::make_shared<const WRing>(WRing{std::move(vars), std::move(weights)});
}

using Exps = std::vector<int>;

inline long wdeg(const WRing& r, const Exps& e) {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * r.weights[i];
    return d;
}

/*
 * Term order: graded by weighted degree, then lexicographically with
 * earlier variables dominating ("y before z").  Within a fixed weight
 * the monomials therefore run y^n, y^(n-2) z, y^(n-4) z^2, ...
 */
struct MonoOrder {
    std::vector<long> weights;
    bool operator()(const Exps& a, const Exps& b) const {
        long wa = 0, wb = 0;
        for (size_t i = 0; i < weights.size(); ++i) {
            wa += static_cast<long>(a[i]) * weights[i];
            wb += static_cast<long>(b[i]) * weights[i];
        }
        if (wa != wb) return wa < wb;
        return a > b;  // lexicographically larger exponent vector comes first
    }
};

template <class F>
class WPoly {
public:
    using TermMap = std::map<Exps, F, MonoOrder>;

    explicit WPoly(WRingPtr ring)
        : ring_(std::move(ring)), terms_(MonoOrder{ring_->weights}) {}

    static WPoly zero(WRingPtr ring) { return WPoly(std::move(ring)); }

    static WPoly constant(WRingPtr ring, const F& c) {
        WPoly p(std::move(ring));
        if (!c.is_zero()) p.terms_.emplace(Exps(p.ring_->nvars(), 0), c);
        return p;
    }

    static WPoly monomial(WRingPtr ring, const Exps& e, const F& c) {
        WPoly p(std::move(ring));
        if (e.size() != p.ring_->nvars()) throw ring_mismatch("exponent arity mismatch");
        for (int x : e) {
            if (x < 0) throw ring_mismatch("negative exponent");
        }
        if (!c.is_zero()) p.terms_.emplace(e, c);
        return p;
    }

    static WPoly var(WRingPtr ring, size_t i) {
        Exps e(ring->nvars(), 0);
        e[i] = 1;
        return monomial(std::move(ring), e, F(1));
    }

    const WRingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    F coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0) : it->second;
    }

    void add_term(const Exps& e, const F& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    WPoly operator-() const {
        WPoly r(ring_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend WPoly operator+(const WPoly& a, const WPoly& b) {
        a.check_ring(b);
        WPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend WPoly operator-(const WPoly& a, const WPoly& b) {
        a.check_ring(b);
        WPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend WPoly operator*(const WPoly& a, const WPoly& b) {
        a.check_ring(b);
        WPoly r(a.ring_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exps e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend WPoly operator*(const F& s, const WPoly& p) {
        WPoly r(p.ring_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
        return r;
    }

    WPoly& operator+=(const WPoly& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    WPoly& operator-=(const WPoly& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    WPoly& operator*=(const WPoly& o) { return *this = *this * o; }

    friend bool operator==(const WPoly& a, const WPoly& b) {
        return *a.ring_ == *b.ring_ &&
               std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
    }
    friend bool operator!=(const WPoly& a, const WPoly& b) { return !(a == b); }

    WPoly pow(long n) const {
        if (n < 0) throw math_error("negative power of polynomial");
        WPoly r = constant(ring_, F(1));
        WPoly base = *this;
        for (; n > 0; n >>= 1) {
            if (n & 1) r *= base;
            if (n > 1) base *= base;
        }
        return r;
    }

    // Weight of a homogeneous polynomial; nullopt for 0 or mixed weight.
    std::optional<long> homogeneous_weight() const {
        if (terms_.empty()) return std::nullopt;
        long w = wdeg(*ring_, terms_.begin()->first);
        for (const auto& [e, c] : terms_) {
            if (wdeg(*ring_, e) != w) return std::nullopt;
        }
        return w;
    }

    WPoly weight_component(long n) const {
        WPoly r(ring_);
        for (const auto& [e, c] : terms_) {
            if (wdeg(*ring_, e) == n) r.terms_.emplace(e, c);
        }
        return r;
    }

    long max_weight() const {
        return terms_.empty() ? 0 : wdeg(*ring_, terms_.rbegin()->first);
    }

    // Partial derivative with respect to variable i.
    WPoly d(size_t i) const {
        WPoly r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exps f = e;
            --f[i];
            r.add_term(f, F(e[i]) * c);
        }
        return r;
    }

    // Ring homomorphism sending variable i to images[i].
    WPoly substitute(const WRingPtr& target, const std::vector<WPoly>& images) const {
        if (images.size() != ring_->nvars()) throw ring_mismatch("wrong number of images");
        for (const auto& im : images) {
            if (!(*im.ring() == *target)) throw ring_mismatch("image outside target ring");
        }
        WPoly r(target);
        for (const auto& [e, c] : terms_) {
            WPoly t = constant(target, c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0) t *= images[i].pow(e[i]);
            }
            r += t;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // Print highest weight first for readability.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) out << " + ";
            first = false;
            out << "(" << scalar_str(c) << ")";
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out << "*" << ring_->vars[i];
                if (e[i] > 1) out << "^" << e[i];
            }
        }
        return out.str();
    }

private:
    void check_ring(const WPoly& o) const {
        if (!(*ring_ == *o.ring_)) throw ring_mismatch("operands live in different rings");
    }

    WRingPtr ring_;
    TermMap terms_;
};

/*
 * A derivation of the ring, given by its images on the variables.  For
 * a weight-homogeneous derivation every image has weight
 * weight(var) + weight_shift.
 */
template <class F>
struct Derivation {
    WRingPtr ring;
    std::vector<WPoly<F>> images;
    long weight_shift = 0;
};

template <class F>
Derivation<F> make_derivation(WRingPtr ring, std::vector<WPoly<F>> images, long weight_shift) {
    if (images.size() != ring->nvars()) throw ring_mismatch("wrong number of derivation images");
    for (size_t i = 0; i < images.size(); ++i) {
        if (!(*images[i].ring() == *ring)) throw ring_mismatch("derivation image outside ring");
        auto w = images[i].homogeneous_weight();
        if (w && *w != ring->weights[i] + weight_shift) {
            throw ring_mismatch("derivation image has wrong weight");
        }
    }
    return Derivation<F>{std::move(ring), std::move(images), weight_shift};
}

// Leibniz extension of a derivation to the whole ring.
template <class F>
WPoly<F> derive(const Derivation<F>& d, const WPoly<F>& p) {
    if (!(*p.ring() == *d.ring)) throw ring_mismatch("derivation applied outside its ring");
    WPoly<F> r(d.ring);
    for (size_t i = 0; i < d.ring->nvars(); ++i) {
        if (d.images[i].is_zero()) continue;
        r += p.d(i) * d.images[i];
    }
    return r;
}

// The Euler operator for the grading: var_i -> weight_i * var_i.
template <class F>
Derivation<F> euler_derivation(const WRingPtr& ring) {
    std::vector<WPoly<F>> images;
    for (size_t i = 0; i < ring->nvars(); ++i) {
        images.push_back(F(ring->weights[i]) * WPoly<F>::var(ring, i));
    }
    return make_derivation<F>(ring, std::move(images), 0);
}

template <class F>
WPoly<Rational> instantiate_poly(const WPoly<F>& p, const Rational& k0) {
    WPoly<Rational> r(p.ring());
    for (const auto& [e, c] : p.terms()) r.add_term(e, instantiate_k<F>(c, k0));
    return r;
}

} // namespace pfv

#endif
