#ifndef PFV_PBW_HPP
#define PFV_PBW_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pfv/errors.hpp>
#include <pfv/rational.hpp>
#include <pfv/ratfunck.hpp>
#include <pfv/wpoly.hpp>

namespace pfv {

/*
 * The level-k vacuum Weyl module for affine sl2 on its PBW basis
 *
 *     h(-i_1)...h(-i_p) e(-j_1)...e(-j_q) f(-m_1)...f(-m_r) vac,
 *
 * mode lists sorted non-increasingly.  Creations within one letter
 * block commute (the central term needs modes of opposite sign), so
 * this normal form is well defined.
 */

enum class Gen { h = 0, e = 1, f = 2 };

inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::h: return "h";
        case Gen::e: return "e";
        default: return "f";
    }
}

// sl2 structure constants: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
struct BracketTerm {
    long coeff = 0;
    Gen gen = Gen::h;
};
inline std::optional<BracketTerm> bracket(Gen a, Gen b) {
    if (a == b) return std::nullopt;
    if (a == Gen::h && b == Gen::e) return BracketTerm{2, Gen::e};
    if (a == Gen::e && b == Gen::h) return BracketTerm{-2, Gen::e};
    if (a == Gen::h && b == Gen::f) return BracketTerm{-2, Gen::f};
    if (a == Gen::f && b == Gen::h) return BracketTerm{2, Gen::f};
    if (a == Gen::e && b == Gen::f) return BracketTerm{1, Gen::h};
    return BracketTerm{-1, Gen::h};  // [f,e] = -h
}

// Normalized invariant form: <h,h> = 2, <e,f> = <f,e> = 1, others 0.
inline long pairing(Gen a, Gen b) {
    if (a == Gen::h && b == Gen::h) return 2;
    if ((a == Gen::e && b == Gen::f) || (a == Gen::f && b == Gen::e)) return 1;
    return 0;
}

struct PBWMono {
    // Positive mode depths, non-increasing within each block.
    std::vector<int> h, e, f;

    long weight() const {
        auto s = [](const std::vector<int>& v) {
            return std::accumulate(v.begin(), v.end(), 0L);
        };
        return s(h) + s(e) + s(f);
    }
    long charge() const { return 2 * (static_cast<long>(e.size()) - static_cast<long>(f.size())); }
    size_t nmodes() const { return h.size() + e.size() + f.size(); }

    const std::vector<int>& block(Gen g) const {
        switch (g) {
            case Gen::h: return h;
            case Gen::e: return e;
            default: return f;
        }
    }
    std::vector<int>& block(Gen g) {
        switch (g) {
            case Gen::h: return h;
            case Gen::e: return e;
            default: return f;
        }
    }

    PBWMono with_inserted(Gen g, int depth) const {
        PBWMono m = *this;
        auto& b = m.block(g);
        b.insert(std::upper_bound(b.begin(), b.end(), depth, std::greater<int>()), depth);
        return m;
    }

    friend bool operator==(const PBWMono& a, const PBWMono& b) {
        return a.h == b.h && a.e == b.e && a.f == b.f;
    }
    friend bool operator<(const PBWMono& a, const PBWMono& b) {
        return std::tie(a.h, a.e, a.f) < std::tie(b.h, b.e, b.f);
    }

    std::string str() const {
        if (nmodes() == 0) return "1";
        std::ostringstream out;
        auto emit = [&](const char* name, const std::vector<int>& v) {
            for (int d : v) out << name << "(-" << d << ")";
        };
        emit("h", h);
        emit("e", e);
        emit("f", f);
        out << "1";
        return out.str();
    }
};

template <class F>
using PBWVec = std::map<PBWMono, F>;

template <class F>
void pbw_add(PBWVec<F>& dst, const PBWMono& m, const F& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = dst.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

template <class F>
void pbw_axpy(PBWVec<F>& dst, const F& s, const PBWVec<F>& src) {
    if (s.is_zero()) return;
    for (const auto& [m, c] : src) pbw_add(dst, m, s * c);
}

template <class F>
PBWVec<F> pbw_scale(const F& s, const PBWVec<F>& v) {
    PBWVec<F> out;
    pbw_axpy(out, s, v);
    return out;
}

template <class F>
PBWVec<F> vacuum() {
    return PBWVec<F>{{PBWMono{}, F(1)}};
}

template <class F>
std::string pbw_str(const PBWVec<F>& v) {
    if (v.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : v) {
        if (!first) out << " + ";
        first = false;
        out << "(" << scalar_str(c) << ")" << (m.nmodes() ? "*" : "*") << m.str();
    }
    return out.str();
}

struct EngineLimits {
    long max_weight = 14;
    size_t max_terms = 2000000;
    long max_singular_level = 8;
};

/*
 * Straightening engine.  current() applies a single current mode a(n)
 * and returns the PBW normal form; mode() applies the n-th mode of an
 * arbitrary vector u via the iterate formula
 *
 *   (a(-i)u')_n v = sum_t C(i+t-1,t) a(-i-t) (u'_{n+t} v)
 *                 - (-1)^i sum_t C(i+t-1,t) u'_{n-i-t} (a(t) v),
 *
 * both sums truncated by exact weight bounds (a mode that would
 * produce negative weight annihilates).
 */
template <class F>
class WeylEngine {
public:
    explicit WeylEngine(F level, EngineLimits limits = {})
        : level_(std::move(level)), limits_(limits) {}

    const F& level() const { return level_; }
    const EngineLimits& limits() const { return limits_; }

    PBWVec<F> current(Gen a, int n, const PBWVec<F>& v) {
        PBWVec<F> out;
        for (const auto& [m, c] : v) pbw_axpy(out, c, current_mono(a, n, m));
        check_budget(out);
        return out;
    }

    PBWVec<F> mode(const PBWVec<F>& u, int n, const PBWVec<F>& v) {
        PBWVec<F> out;
        for (const auto& [mu, cu] : u) {
            for (const auto& [mv, cv] : v) {
                pbw_axpy(out, cu * cv, mode_mono(mu, n, mv));
            }
        }
        check_budget(out);
        return out;
    }

    // f(0)^{k0+1} e(-1)^{k0+1} vac, the generator of the maximal ideal.
    PBWVec<F> singular_vector(long k0) {
        if (k0 < 1) throw config_error("singular vector needs a positive integer level");
        if (k0 > limits_.max_singular_level) {
            throw resource_error("singular vector level " + std::to_string(k0) +
                                 " exceeds cap " + std::to_string(limits_.max_singular_level));
        }
        PBWVec<F> v = vacuum<F>();
        for (long i = 0; i <= k0; ++i) v = current(Gen::e, -1, v);
        for (long i = 0; i <= k0; ++i) v = current(Gen::f, 0, v);
        return v;
    }

    // The C2-quotient map: monomials with any mode of depth >= 2 die;
    // h(-1)^p e(-1)^q f(-1)^r vac goes to y0^p y1^q y2^r.
    WPoly<F> reduce_c2(const PBWVec<F>& v) const {
        WPoly<F> out(c2_ring());
        for (const auto& [m, c] : v) {
            bool deep = false;
            for (Gen g : {Gen::h, Gen::e, Gen::f}) {
                for (int d : m.block(g)) {
                    if (d >= 2) deep = true;
                }
            }
            if (deep) continue;
            out.add_term({static_cast<int>(m.h.size()), static_cast<int>(m.e.size()),
                          static_cast<int>(m.f.size())},
                         c);
        }
        return out;
    }

    static WRingPtr c2_ring() {
        static const WRingPtr ring = make_ring({"y0", "y1", "y2"}, {1, 1, 1});
        return ring;
    }

    // f(0)^s e(-1)^n vac reduced to C[y0,y1,y2], by pure straightening.
    WPoly<F> charge_lowering_reduction(long n, long s) {
        if (n < 1 || s < 0 || s > 2 * n) throw config_error("need n >= 1 and 0 <= s <= 2n");
        PBWVec<F> v = vacuum<F>();
        for (long i = 0; i < n; ++i) v = current(Gen::e, -1, v);
        for (long i = 0; i < s; ++i) v = current(Gen::f, 0, v);
        return reduce_c2(v);
    }

private:
    void check_budget(const PBWVec<F>& v) const {
        for (const auto& [m, c] : v) {
            if (m.weight() > limits_.max_weight) {
                throw resource_error("PBW weight " + std::to_string(m.weight()) +
                                     " exceeds cap " + std::to_string(limits_.max_weight));
            }
        }
        if (v.size() > limits_.max_terms) {
            throw resource_error("PBW term count exceeds cap");
        }
    }

    // --- single current mode on a monomial ---

    const PBWVec<F>& current_mono(Gen a, int n, const PBWMono& m) {
        const auto key = std::make_tuple(static_cast<int>(a), n, m);
        auto it = cur_memo_.find(key);
        if (it != cur_memo_.end()) return it->second;
        PBWVec<F> r = n < 0 ? creation(a, -n, m) : annihilation(a, n, m);
        return cur_memo_.emplace(key, std::move(r)).first->second;
    }

    // a(-d) applied to m, d >= 1.
    PBWVec<F> creation(Gen a, int d, const PBWMono& m) {
        PBWVec<F> out;
        if (a == Gen::h) {
            // h creations commute with everything to their left.
            pbw_add(out, m.with_inserted(Gen::h, d), F(1));
            return out;
        }
        if (a == Gen::e) {
            if (m.h.empty()) {
                pbw_add(out, m.with_inserted(Gen::e, d), F(1));
                return out;
            }
            // Commute e(-d) past the leading h(-i): picks up [e,h] = -2e.
            const int i = m.h.front();
            PBWMono rest = m;
            rest.h.erase(rest.h.begin());
            for (const auto& [mm, cc] : creation(Gen::e, d, rest)) {
                pbw_add(out, mm.with_inserted(Gen::h, i), cc);
            }
            pbw_axpy(out, F(-2), creation(Gen::e, d + i, rest));
            return out;
        }
        // a == f
        if (!m.h.empty()) {
            const int i = m.h.front();
            PBWMono rest = m;
            rest.h.erase(rest.h.begin());
            for (const auto& [mm, cc] : creation(Gen::f, d, rest)) {
                pbw_add(out, mm.with_inserted(Gen::h, i), cc);
            }
            pbw_axpy(out, F(2), creation(Gen::f, d + i, rest));
            return out;
        }
        if (!m.e.empty()) {
            // f(-d) e(-j) = e(-j) f(-d) - h(-d-j); the central term needs
            // opposite-sign modes and cannot arise here.
            const int j = m.e.front();
            PBWMono rest = m;
            rest.e.erase(rest.e.begin());
            // Reinsert e(-j) in front of each straightened term.
            for (const auto& [mm, cc] : creation(Gen::f, d, rest)) {
                pbw_axpy(out, cc, creation(Gen::e, j, mm));
            }
            pbw_axpy(out, F(-1), creation(Gen::h, d + j, rest));
            return out;
        }
        pbw_add(out, m.with_inserted(Gen::f, d), F(1));
        return out;
    }

    // a(n) for n >= 0 applied to m.
    PBWVec<F> annihilation(Gen a, int n, const PBWMono& m) {
        PBWVec<F> out;
        if (m.nmodes() == 0) return out;  // a(n) vac = 0 for n >= 0
        // Peel the leftmost creation b(-i) in PBW order.
        Gen b = Gen::h;
        if (!m.h.empty()) b = Gen::h;
        else if (!m.e.empty()) b = Gen::e;
        else b = Gen::f;
        PBWMono rest = m;
        const int i = rest.block(b).front();
        rest.block(b).erase(rest.block(b).begin());
        // a(n) b(-i) = b(-i) a(n) + [a,b](n-i) + n <a,b> delta_{n,i} k.
        for (const auto& [mm, cc] : annihilation(a, n, rest)) {
            pbw_axpy(out, cc, creation(b, i, mm));
        }
        if (auto br = bracket(a, b)) {
            pbw_axpy(out, F(br->coeff), current_mono(br->gen, n - i, rest));
        }
        const long pr = pairing(a, b);
        if (pr != 0 && n == i) {
            pbw_axpy(out, F(n) * F(pr) * level_, PBWVec<F>{{rest, F(1)}});
        }
        return out;
    }

    // --- mode of a composite vector on a monomial ---

    const PBWVec<F>& mode_mono(const PBWMono& u, int n, const PBWMono& v) {
        const auto key = std::make_tuple(u, n, v);
        auto it = mode_memo_.find(key);
        if (it != mode_memo_.end()) return it->second;
        PBWVec<F> r = mode_mono_compute(u, n, v);
        // Weight bookkeeping: wt(u_n v) = wt(u) + wt(v) - n - 1.
        const long expect = u.weight() + v.weight() - n - 1;
        for (const auto& [m, c] : r) {
            if (m.weight() != expect) {
                throw math_error("mode weight bookkeeping violated");
            }
        }
        return mode_memo_.emplace(key, std::move(r)).first->second;
    }

    PBWVec<F> mode_mono_compute(const PBWMono& u, int n, const PBWMono& v) {
        if (u.nmodes() == 0) {
            // vac_n = delta_{n,-1} id.
            return n == -1 ? PBWVec<F>{{v, F(1)}} : PBWVec<F>{};
        }
        const PBWVec<F> vv{{v, F(1)}};
        if (u.nmodes() == 1) {
            // (a(-i)vac)_n = (-1)^{i-1} C(n, i-1) a(n-i+1) (the
            // L(-1)-derivative rule iterated).
            Gen a = !u.h.empty() ? Gen::h : (!u.e.empty() ? Gen::e : Gen::f);
            const int i = u.block(a).front();
            F c = F(binomial(n, i - 1));
            if (i % 2 == 0) c = -c;
            return pbw_scale(c, current(a, n - i + 1, vv));
        }
        // Peel the leftmost creation a(-i): u = a(-i) u'.
        Gen a = !u.h.empty() ? Gen::h : (!u.e.empty() ? Gen::e : Gen::f);
        PBWMono up = u;
        const int i = up.block(a).front();
        up.block(a).erase(up.block(a).begin());

        PBWVec<F> out;
        // Term 1: sum_t C(i+t-1,t) a(-i-t) (u'_{n+t} v); u'_{m} v dies
        // once wt(u') + wt(v) - m - 1 < 0.
        const long t1max = up.weight() + v.weight() - n - 1;
        for (long t = 0; t <= t1max; ++t) {
            const PBWVec<F>& inner = mode_mono(up, n + static_cast<int>(t), v);
            if (inner.empty()) continue;
            pbw_axpy(out, F(binomial(i + t - 1, t)), current(a, -i - static_cast<int>(t), inner));
        }
        // Term 2: -(-1)^i sum_t C(i+t-1,t) u'_{n-i-t} (a(t) v); a(t) v
        // dies for t > wt(v).
        const long t2max = v.weight();
        const F sign = (i % 2 == 0) ? F(-1) : F(1);  // -(-1)^i
        for (long t = 0; t <= t2max; ++t) {
            PBWVec<F> av = current(a, static_cast<int>(t), vv);
            if (av.empty()) continue;
            PBWVec<F> contrib;
            for (const auto& [mm, cc] : av) {
                pbw_axpy(contrib, cc, mode_mono(up, n - i - static_cast<int>(t), mm));
            }
            pbw_axpy(out, sign * F(binomial(i + t - 1, t)), contrib);
        }
        return out;
    }

    F level_;
    EngineLimits limits_;
    std::map<std::tuple<int, int, PBWMono>, PBWVec<F>> cur_memo_;
    std::map<std::tuple<PBWMono, int, PBWMono>, PBWVec<F>> mode_memo_;
};

// --- distinguished vectors ---

template <class F>
PBWVec<F> omega_aff_vector(const F& k) {
    const F c = (F(2) * (k + F(2))).inv();
    PBWVec<F> v;
    pbw_add(v, PBWMono{{2}, {}, {}}, -c);                  // -h(-2)
    pbw_add(v, PBWMono{{1, 1}, {}, {}}, c * F(Rational(1, 2)));  // 1/2 h(-1)^2
    pbw_add(v, PBWMono{{}, {1}, {1}}, F(2) * c);           // 2 e(-1)f(-1)
    return v;
}

template <class F>
PBWVec<F> w2_vector(const F& k) {
    const F c = (F(2) * k * (k + F(2))).inv();
    PBWVec<F> v;
    pbw_add(v, PBWMono{{2}, {}, {}}, -c * k);       // -k h(-2)
    pbw_add(v, PBWMono{{1, 1}, {}, {}}, -c);        // -h(-1)^2
    pbw_add(v, PBWMono{{}, {1}, {1}}, F(2) * c * k);  // 2k e(-1)f(-1)
    return v;
}

template <class F>
PBWVec<F> w3_vector(const F& k) {
    PBWVec<F> v;
    pbw_add(v, PBWMono{{3}, {}, {}}, k * k);            // k^2 h(-3)
    pbw_add(v, PBWMono{{2, 1}, {}, {}}, F(3) * k);      // 3k h(-2)h(-1)
    pbw_add(v, PBWMono{{1, 1, 1}, {}, {}}, F(2));       // 2 h(-1)^3
    pbw_add(v, PBWMono{{1}, {1}, {1}}, F(-6) * k);      // -6k h(-1)e(-1)f(-1)
    pbw_add(v, PBWMono{{}, {2}, {1}}, F(3) * k * k);    // 3k^2 e(-2)f(-1)
    pbw_add(v, PBWMono{{}, {1}, {2}}, F(-3) * k * k);   // -3k^2 e(-1)f(-2)
    return v;
}

} // namespace pfv

#endif
