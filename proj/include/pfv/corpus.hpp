#ifndef PFV_CORPUS_HPP
#define PFV_CORPUS_HPP

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include <pfv/errors.hpp>
#include <pfv/matrix.hpp>
#include <pfv/pbw.hpp>
#include <pfv/wpoly.hpp>

namespace pfv {

// Fault-injection hook: after constructing the named polynomial, add
// delta to the coefficient of its term_index-th stored term.  Used by
// the mutation test to confirm the checks actually look at the data.
struct Mutation {
    std::string name;
    size_t term_index = 0;
    Rational delta = Rational(1);
};

/*
 * The named polynomial/operator corpus: the g-generators, the Wbar
 * images, the f-family, the operators D and E, the abstract cubic-field
 * derivation, the 4x4 zero-mode matrix and the zero-mode eigenvalue
 * expressions.  F = RatFuncK gives the symbolic-in-k corpus, F =
 * Rational the concrete one (required for the f-family, whose
 * coefficients contain (k+1)!).
 */
template <class F>
class Corpus {
public:
    // Symbolic corpus (F = RatFuncK).
    Corpus() : k_(RatFuncK::k()), k0_() { init_rings(); }
    // Concrete corpus at integer level k0 >= 1.
    explicit Corpus(long k0, std::optional<Mutation> mut = std::nullopt)
        : k_(k0), k0_(k0), mut_(std::move(mut)) {
        if (k0 < 1) throw config_error("level must be a positive integer");
        init_rings();
    }
    // Symbolic corpus with a mutation.
    explicit Corpus(std::optional<Mutation> mut) : k_(RatFuncK::k()), k0_(), mut_(std::move(mut)) {
        init_rings();
    }

    const F& k() const { return k_; }
    std::optional<long> k0() const { return k0_; }

    // y,z-ring (wt y = 1, wt z = 2); abstract Wbar-generators x2..x5
    // (wt s); relation variables t2..t5 (wt s); C2-quotient ring
    // y0,y1,y2 (wt 1 each).
    const WRingPtr& yz() const { return yz_; }
    const WRingPtr& xring() const { return x_; }
    const WRingPtr& tring() const { return t_; }
    static WRingPtr y012() { return WeylEngine<F>::c2_ring(); }

    WPoly<F> y() const { return WPoly<F>::var(yz_, 0); }
    WPoly<F> z() const { return WPoly<F>::var(yz_, 1); }

    // --- the g generators (eq. def-gs) ---
    WPoly<F> g(int s) const {
        WPoly<F> p(yz_);
        const WPoly<F> Y = y(), Z = z();
        switch (s) {
            case 2: p = Y * Y - F(2) * k_ * Z; break;
            case 3: p = Y.pow(3) - F(3) * k_ * (Y * Z); break;
            case 4: p = Z * Z; break;
            case 5: p = Y * Z * Z; break;
            default: throw config_error("g index out of range");
        }
        return mutated("g" + std::to_string(s), p);
    }

    // --- Wbar^s as polynomials in y, z (the "More precisely" list) ---
    WPoly<F> wbar(int s) const {
        const WPoly<F> Y = y(), Z = z();
        WPoly<F> p(yz_);
        switch (s) {
            case 2:
                p = (-(F(2) * k_ * (k_ + F(2))).inv()) * (Y * Y - F(2) * k_ * Z);
                break;
            case 3:
                p = F(2) * (Y.pow(3) - F(3) * k_ * (Y * Z));
                break;
            case 4:
                p = -(F(11) * k_ + F(6)) * Y.pow(4) + F(4) * k_ * (F(11) * k_ + F(6)) * (Y * Y * Z) -
                    F(2) * k_ * k_ * (F(6) * k_ - F(5)) * (Z * Z);
                break;
            case 5:
                p = F(-2) * (F(19) * k_ + F(12)) * Y.pow(5) +
                    F(10) * k_ * (F(19) * k_ + F(12)) * (Y.pow(3) * Z) -
                    F(10) * k_ * k_ * (F(10) * k_ - F(7)) * (Y * Z * Z);
                break;
            default: throw config_error("wbar index out of range");
        }
        return mutated("Wbar" + std::to_string(s), p);
    }

    // --- g_s expressed in the Wbar's (the "Conversely" dictionary),
    //     on the abstract generators x2..x5 ---
    WPoly<F> g_in_wbar(int s) const {
        const WPoly<F> x2 = WPoly<F>::var(x_, 0), x3 = WPoly<F>::var(x_, 1),
                       x4 = WPoly<F>::var(x_, 2), x5 = WPoly<F>::var(x_, 3);
        switch (s) {
            case 2: return F(-2) * k_ * (k_ + F(2)) * x2;
            case 3: return F(Rational(1, 2)) * x3;
            case 4:
                return (F(2) * (k_ + F(2)).pow(2) * (F(11) * k_ + F(6)) /
                        (F(16) * k_ + F(17))) * (x2 * x2) +
                       (F(2) * k_ * k_ * (F(16) * k_ + F(17))).inv() * x4;
            case 5:
                return (-(k_ + F(2)) * (F(19) * k_ + F(12)) /
                        (k_ * (F(64) * k_ + F(107)))) * (x2 * x3) +
                       (F(2) * k_ * k_ * (F(64) * k_ + F(107))).inv() * x5;
            default: throw config_error("g index out of range");
        }
    }

    // --- the three relations among the g's, in t2..t5 ---
    WPoly<F> relation(int r) const {
        const WPoly<F> t2 = WPoly<F>::var(t_, 0), t3 = WPoly<F>::var(t_, 1),
                       t4 = WPoly<F>::var(t_, 2), t5 = WPoly<F>::var(t_, 3);
        const F k2 = k_ * k_, k4 = k2 * k2;
        WPoly<F> p(t_);
        switch (r) {
            case 1:
                p = t2.pow(4) - t2 * t3 * t3 - F(5) * k2 * (t2 * t2 * t4) +
                    F(4) * k4 * (t4 * t4) + F(2) * k2 * (t3 * t5);
                break;
            case 2:
                p = t2.pow(3) * t3 - t3.pow(3) - F(5) * k2 * (t2 * t3 * t4) +
                    F(2) * k2 * (t2 * t2 * t5) - F(2) * k4 * (t4 * t5);
                break;
            case 3:
                p = t2.pow(3) * t4 - t3 * t3 * t4 - F(4) * k2 * (t2 * t4 * t4) +
                    k2 * (t5 * t5);
                break;
            default: throw config_error("relation index out of range");
        }
        return mutated("rel" + std::to_string(r), p);
    }

    // --- differential operators on C[y,z] ---
    Derivation<F> D() const {
        // D = ((k+2)y^2 - 2kz) d/dy + (3k+4)yz d/dz, weight shift +1.
        const WPoly<F> Y = y(), Z = z();
        return make_derivation<F>(yz_,
                                  {(k_ + F(2)) * (Y * Y) - F(2) * k_ * Z,
                                   (F(3) * k_ + F(4)) * (Y * Z)},
                                  1);
    }
    Derivation<F> E() const { return euler_derivation<F>(yz_); }

    // f(0) on the C2 quotient: 2 y2 d/dy0 - y0 d/dy1.
    Derivation<F> f0_operator() const {
        const WRingPtr r = y012();
        return make_derivation<F>(
            r, {F(2) * WPoly<F>::var(r, 2), F(-1) * WPoly<F>::var(r, 0), WPoly<F>::zero(r)}, 0);
    }

    // --- the abstract cubic-field derivation on x2..x5 ---
    Derivation<F> x_derivation() const {
        const WPoly<F> x2 = WPoly<F>::var(x_, 0), x3 = WPoly<F>::var(x_, 1),
                       x4 = WPoly<F>::var(x_, 2), x5 = WPoly<F>::var(x_, 3);
        const F d1 = (F(16) * k_ + F(17)).inv();
        const F d2 = (F(64) * k_ + F(107)).inv();
        std::vector<WPoly<F>> img;
        img.push_back(F(3) * x3);
        img.push_back(d1 * (F(288) * k_.pow(3) * (k_ - F(2)) * (k_ + F(2)).pow(2) *
                                (F(3) * k_ + F(4)) * (x2 * x2) +
                            F(36) * k_ * (F(2) * k_ + F(3)) * x4));
        img.push_back(d2 * (F(1248) * k_ * k_ * (k_ - F(3)) * (k_ + F(2)) * (F(2) * k_ + F(1)) *
                                (F(2) * k_ + F(3)) * (x2 * x3) -
                            F(12) * k_ * (F(3) * k_ + F(4)) * (F(16) * k_ + F(17)) * x5));
        img.push_back(d1 * (F(240) * k_.pow(4) * (k_ + F(2)).pow(3) * (F(2) * k_ + F(3)) *
                            (F(3) * k_ + F(4)) * (F(202) * k_ - F(169))) * x2.pow(3) -
                      F(15) * k_ * (F(2) * k_ + F(3)) * (F(41) * k_ + F(61)) * (x3 * x3) +
                      d1 * (F(60) * k_ * k_ * (k_ + F(2)) *
                            (F(404) * k_ * k_ + F(1170) * k_ + F(835))) * (x2 * x4));
        return make_derivation<F>(x_, std::move(img), 1);
    }

    // --- the stated images of the derivation on the g's, in y, z ---
    WPoly<F> stated_g_image(int s) const {
        const WPoly<F> G2 = g(2), G3 = g(3), G4 = g(4), G5 = g(5);
        switch (s) {
            case 2: return F(-12) * k_ * (k_ + F(2)) * G3;
            case 3: return F(-18) * k_ * (k_ + F(2)) * (G2 * G2) +
                           F(36) * k_.pow(3) * (F(2) * k_ + F(3)) * G4;
            case 4: return F(-12) * k_ * (F(3) * k_ + F(4)) * G5;
            case 5: return (F(6) * (F(7) * k_ + F(9)) / k_) * (G2.pow(3) - G3 * G3) -
                           F(6) * k_ * (F(28) * k_ + F(37)) * (G2 * G4);
            default: throw config_error("image index out of range");
        }
    }

    // Transport of the x-derivation through the Wbar <-> g dictionary:
    // apply it to g_in_wbar(s), then substitute x_r by wbar(r).
    WPoly<F> transported_g_image(int s) const {
        const WPoly<F> img = derive(x_derivation(), g_in_wbar(s));
        return img.substitute(yz_, {wbar(2), wbar(3), wbar(4), wbar(5)});
    }

    // --- the f-family (concrete k only: coefficients contain (k+1)!) ---
    WPoly<F> f(long r) const {
        if (!k0_) throw config_error("the f-family requires a concrete level");
        if (r < 0) throw config_error("f index must be nonnegative");
        WPoly<F> p = f0();
        const Derivation<F> d = D();
        for (long i = 0; i < r; ++i) p = derive(d, p);
        return r == 0 ? p : mutated("f" + std::to_string(r), p);
    }

    // Coefficients of the decomposition f2 = p f0 + q f1.
    WPoly<F> p_poly() const {
        const WPoly<F> Y = y(), Z = z();
        WPoly<F> p = -(k_ + F(1)) * (k_ + F(2)).pow(2) * ((k_ + F(1)) * (Y * Y) + k_ * Z);
        return mutated("p", p);
    }
    WPoly<F> q_poly() const {
        WPoly<F> p = (k_ + F(2)) * (F(2) * k_ + F(3)) * y();
        return mutated("q", p);
    }

    // --- the 4x4 zero-mode matrix (a_rs), rows/cols for r,s = 2..5 ---
    Matrix<F> a_matrix() const {
        Matrix<F> a(4, 4);
        const F d1 = (F(16) * k_ + F(17)).inv();
        const F d2 = (F(64) * k_ + F(107)).inv();
        a(0, 1) = F(2);
        a(1, 0) = F(54) * k_.pow(3) * (k_ - F(2)) * (k_ + F(2)) * (F(3) * k_ + F(4)) * d1;
        a(1, 2) = F(18) * k_ * (F(2) * k_ + F(3)) * d1;
        a(2, 1) = F(32) * k_ * k_ * (k_ - F(3)) * (F(2) * k_ + F(1)) * (F(2) * k_ + F(3)) *
                  (F(2) * k_ + F(7)) * d2;
        a(2, 3) = F(-24) * k_ * (F(3) * k_ + F(4)) * (F(16) * k_ + F(17)) * (F(5)).inv() * d2;
        a(3, 0) = F(120) * k_.pow(4) * (k_ + F(2)) * (F(2) * k_ + F(1)) * (F(2) * k_ + F(3)) *
                  (F(3) * k_ + F(4)) * (F(8) * k_ * k_ + F(5) * k_ + F(5)) * d1;
        a(3, 2) = F(-15) * k_ * k_ *
                  (F(208) * k_.pow(3) + F(649) * k_ * k_ + F(580) * k_ + F(120)) *
                  (F(2)).inv() * d1;
        return a;
    }

    // --- zero-mode eigenvalues on the module labelled (i,j) ---
    F eig_w2(long i, long j) const {
        const F m = F(i - 2 * j);
        return (k_ * m - m * m + F(2) * k_ * F(i - j + 1) * F(j)) / (F(2) * k_ * (k_ + F(2)));
    }
    F eig_w3(long i, long j) const {
        const F m = F(i - 2 * j);
        return k_ * k_ * m - F(3) * k_ * (m * m) + F(2) * m.pow(3) -
               F(6) * k_ * m * F(i - j + 1) * F(j);
    }

    // --- fetch a named polynomial (CLI display, mutation targets) ---
    WPoly<F> named(const std::string& name) const {
        if (name.size() == 2 && name[0] == 'g') return g(name[1] - '0');
        if (name.rfind("Wbar", 0) == 0 && name.size() == 5) return wbar(name[4] - '0');
        if (name.rfind("rel", 0) == 0 && name.size() == 4) return relation(name[3] - '0');
        if (name[0] == 'f' && name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
            return f(std::stol(name.substr(1)));
        }
        if (name == "p") return p_poly();
        if (name == "q") return q_poly();
        throw config_error("unknown corpus name: " + name);
    }

private:
    WPoly<F> f0() const {
        const long kk = *k0_;
        WPoly<F> p(yz_);
        for (long j = 0; 2 * j <= kk + 1; ++j) {
            Rational c = factorial(kk + 1) / (factorial(kk + 1 - 2 * j) * factorial(j).pow(2));
            if (j % 2 == 1) c = -c;
            p.add_term({static_cast<int>(kk + 1 - 2 * j), static_cast<int>(j)}, F(c));
        }
        return mutated("f0", p);
    }

    WPoly<F> mutated(const std::string& name, WPoly<F> p) const {
        if (!mut_ || mut_->name != name) return p;
        if (mut_->term_index >= p.nterms()) {
            throw config_error("mutation term index out of range for " + name);
        }
        auto it = p.terms().begin();
        std::advance(it, static_cast<long>(mut_->term_index));
        p.add_term(it->first, F(mut_->delta));
        return p;
    }

    void init_rings() {
        yz_ = make_ring({"y", "z"}, {1, 2});
        x_ = make_ring({"x2", "x3", "x4", "x5"}, {2, 3, 4, 5});
        t_ = make_ring({"t2", "t3", "t4", "t5"}, {2, 3, 4, 5});
    }

    F k_;
    std::optional<long> k0_;
    std::optional<Mutation> mut_;
    WRingPtr yz_, x_, t_;
};

// Names accepted by Corpus::named / the mutation hook.
std::vector<std::string> corpus_poly_names();

} // namespace pfv

#endif
