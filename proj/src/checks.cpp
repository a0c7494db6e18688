#include <pfv/checks.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include <pfv/ideals.hpp>
#include <pfv/pbw.hpp>
#include <pfv/slices.hpp>

namespace pfv {

namespace {

using Mode = RunConfig::Mode;

// ---------------------------------------------------------------- helpers

void set_pass(CheckResult& r, std::string w) {
    r.status = Status::pass;
    r.witness = std::move(w);
}

void set_fail(CheckResult& r, std::string w) {
    r.status = Status::fail;
    r.witness = std::move(w);
}

std::string mode_tag(bool symbolic) {
    return symbolic ? "symbolic k" : "concrete k";
}

template <class F>
Corpus<F> make_corpus(long k, const RunConfig& cfg) {
    if constexpr (std::is_same_v<F, RatFuncK>) {
        (void)k;
        return Corpus<RatFuncK>(cfg.mutation);
    } else {
        return Corpus<Rational>(k, cfg.mutation);
    }
}

Matrix<RatFuncK> mat_mul(const Matrix<RatFuncK>& a, const Matrix<RatFuncK>& b) {
    Matrix<RatFuncK> out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < b.cols(); ++j) {
            RatFuncK acc(0);
            for (size_t t = 0; t < a.cols(); ++t) acc += a(i, t) * b(t, j);
            out(i, j) = acc;
        }
    }
    return out;
}

// Characteristic polynomial coefficients c1..cn of an n x n matrix
// (monic, x^n + c1 x^{n-1} + ... + cn) by the Faddeev-LeVerrier scheme.
std::vector<RatFuncK> char_poly(const Matrix<RatFuncK>& a) {
    const size_t n = a.rows();
    std::vector<RatFuncK> c;
    Matrix<RatFuncK> m = a;
    for (size_t step = 1; step <= n; ++step) {
        RatFuncK tr(0);
        for (size_t i = 0; i < n; ++i) tr += m(i, i);
        RatFuncK ck = -tr / RatFuncK(static_cast<long>(step));
        c.push_back(ck);
        if (step == n) break;
        for (size_t i = 0; i < n; ++i) m(i, i) += ck;
        m = mat_mul(a, m);
    }
    return c;
}

// ---------------------------------------------------------------- checks

// C1: the three displayed relations vanish under t_s -> g_s.
template <class F>
void check_c1(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<F> c = make_corpus<F>(k, cfg);
    std::vector<WPoly<F>> gs = {c.g(2), c.g(3), c.g(4), c.g(5)};
    for (int r = 1; r <= 3; ++r) {
        auto img = c.relation(r).substitute(c.yz(), gs);
        if (!img.is_zero()) {
            set_fail(res, "relation " + std::to_string(r) +
                              " does not vanish under t->g; residue = " + img.str());
            return;
        }
    }
    set_pass(res, "rel1, rel2, rel3 vanish under t_s -> g_s (" +
                      mode_tag(std::is_same_v<F, RatFuncK>) + ")");
}

// C2: subalgebra slice dimensions and the explicit slice basis.
void check_c2(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    SliceCache<Rational> cache(c);
    const long cap = cfg.cap_for(k);
    bool ok = true;
    for (long n = 0; n <= cap; ++n) {
        const long got = static_cast<long>(cache.A(n).dim());
        const long want = dim_A(n);
        res.table.push_back({k, n, "A", got, want, got == want});
        ok = ok && got == want;
    }
    if (!ok) {
        set_fail(res, "subalgebra slice dimension mismatch; see table");
        return;
    }
    // Explicit basis: y^n - kn y^{n-2} z and y^{n-2j} z^j (j >= 2).
    const auto y = c.y(), z = c.z();
    for (long n = 2; n <= cap; ++n) {
        auto lead = y.pow(n) - Rational(k * n) * (y.pow(n - 2) * z);
        if (!contains(cache.A(n), lead).member) {
            set_fail(res, "basis element y^n - kn y^(n-2) z missing from A at n=" +
                              std::to_string(n));
            return;
        }
        for (long j = 2; 2 * j <= n; ++j) {
            if (!contains(cache.A(n), y.pow(n - 2 * j) * z.pow(j)).member) {
                set_fail(res, "basis monomial y^" + std::to_string(n - 2 * j) + " z^" +
                                  std::to_string(j) + " missing from A at n=" +
                                  std::to_string(n));
                return;
            }
        }
    }
    set_pass(res, "A-slice dims match [n/2]-1-shape formula and explicit basis up to n=" +
                      std::to_string(cap));
}

// C3: derivation transported through the dictionary equals the stated images.
template <class F>
void check_c3(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<F> c = make_corpus<F>(k, cfg);
    for (int s = 2; s <= 5; ++s) {
        auto t = c.transported_g_image(s);
        auto st = c.stated_g_image(s);
        if (t != st) {
            set_fail(res, "transported image of g" + std::to_string(s) +
                              " differs from the stated one; delta = " + (t - st).str());
            return;
        }
    }
    set_pass(res, "transported derivation equals stated images on g2..g5 (" +
                      mode_tag(std::is_same_v<F, RatFuncK>) + ")");
}

// C4: -6k D agrees with the transported derivation on the g's and on
// random products of g's.
template <class F>
void check_c4(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<F> c = make_corpus<F>(k, cfg);
    const auto D = c.D();
    const F m6k = F(-6) * c.k();
    std::vector<WPoly<F>> g = {c.g(2), c.g(3), c.g(4), c.g(5)};
    std::vector<WPoly<F>> img;
    for (int s = 2; s <= 5; ++s) {
        img.push_back(c.transported_g_image(s));
        if (img.back() != m6k * derive(D, g[s - 2])) {
            set_fail(res, "-6k D(g" + std::to_string(s) + ") differs from the derivation image");
            return;
        }
    }
    std::mt19937 rng(static_cast<unsigned>(1000 * k + 4));
    std::uniform_int_distribution<int> expo(0, 2);
    int done = 0;
    while (done < 50) {
        std::array<int, 4> e = {expo(rng), expo(rng), expo(rng), expo(rng)};
        if (e[0] + e[1] + e[2] + e[3] == 0) continue;
        ++done;
        WPoly<F> prod = WPoly<F>::constant(c.yz(), F(1));
        for (int s = 0; s < 4; ++s) {
            for (int t = 0; t < e[s]; ++t) prod *= g[s];
        }
        // Leibniz extension of the derivation to the product.
        WPoly<F> lhs(c.yz());
        for (int s = 0; s < 4; ++s) {
            if (e[s] == 0) continue;
            WPoly<F> rest = WPoly<F>::constant(c.yz(), F(static_cast<long>(e[s])));
            for (int u = 0; u < 4; ++u) {
                for (int t = 0; t < e[u] - (u == s ? 1 : 0); ++t) rest *= g[u];
            }
            lhs += rest * img[s];
        }
        if (lhs != m6k * derive(D, prod)) {
            set_fail(res, "derivation mismatch on g-product with exponents (" +
                              std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                              std::to_string(e[2]) + "," + std::to_string(e[3]) + ")");
            return;
        }
    }
    set_pass(res, "-6k D matches the transported derivation on g2..g5 and 50 random products (" +
                      mode_tag(std::is_same_v<F, RatFuncK>) + ")");
}

// C5: Q(s,j) brute-force count vs closed form s!/(2^j (s-2j)! j!).
void check_c5(CheckResult& res) {
    for (long s = 2; s <= 16; ++s) {
        for (long j = 1; 2 * j <= s; ++j) {
            // Sum over increasing j-subsets (c_1 < ... < c_j) of {1..s}
            // with c_t >= 2t of prod (c_t - (2t-1)).
            Rational total(0);
            std::vector<long> comb(static_cast<size_t>(j));
            std::function<void(long, long, Rational)> rec = [&](long depth, long lo,
                                                                Rational prod) {
                if (depth == j) {
                    total += prod;
                    return;
                }
                for (long v = lo; v <= s; ++v) {
                    if (v < 2 * (depth + 1)) continue;
                    rec(depth + 1, v + 1, prod * Rational(v - (2 * depth + 1)));
                }
            };
            rec(0, 1, Rational(1));
            const Rational closed =
                factorial(s) / (Rational(2).pow(j) * factorial(s - 2 * j) * factorial(j));
            if (total != closed) {
                set_fail(res, "Q(" + std::to_string(s) + "," + std::to_string(j) +
                                  ") brute force = " + total.str() + " but closed form = " +
                                  closed.str());
                return;
            }
        }
    }
    set_pass(res, "Q(s,j) brute force equals s!/(2^j (s-2j)! j!) for 2<=s<=16");
}

// The closed form of the iterated charge-lowering reduction.
template <class F>
WPoly<F> closed_form_54(long n, long s) {
    WPoly<F> out(WeylEngine<F>::c2_ring());
    for (long j = std::max(0L, s - n); 2 * j <= s; ++j) {
        Rational c = factorial(s) * factorial(n) /
                     (factorial(s - 2 * j) * factorial(n - s + j) * factorial(j));
        if ((s - j) % 2 == 1) c = -c;
        out.add_term({static_cast<int>(s - 2 * j), static_cast<int>(n - s + j),
                      static_cast<int>(j)},
                     F(c));
    }
    return out;
}

// C6: closed form vs differential-operator iteration vs straightening oracle.
void check_c6(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    const auto op = c.f0_operator();
    const auto ring = WeylEngine<Rational>::c2_ring();
    const bool weyl = k <= 6;
    std::unique_ptr<WeylEngine<Rational>> eng;
    if (weyl) eng = std::make_unique<WeylEngine<Rational>>(Rational(k));
    for (long n = 1; n <= 8; ++n) {
        WPoly<Rational> it = WPoly<Rational>::var(ring, 1).pow(n);
        for (long s = 0; s <= 2 * n; ++s) {
            const auto closed = closed_form_54<Rational>(n, s);
            if (it != closed) {
                set_fail(res, "iteration differs from the closed form at (n,s)=(" +
                                  std::to_string(n) + "," + std::to_string(s) + ")");
                return;
            }
            if (weyl && eng->charge_lowering_reduction(n, s) != closed) {
                set_fail(res, "straightening oracle differs from the closed form at (n,s)=(" +
                                  std::to_string(n) + "," + std::to_string(s) + ")");
                return;
            }
            it = derive(op, it);
        }
    }
    set_pass(res, std::string("closed form == operator iteration for n<=8, 0<=s<=2n") +
                      (weyl ? " == straightening oracle at this level"
                            : "; straightening oracle limited to levels <= 6"));
}

// C7: the reduced singular vector reproduces f0 up to (-1)^{k+1}(k+1)!.
void check_c7(long k, const RunConfig& cfg, CheckResult& res) {
    WeylEngine<Rational> eng{Rational(k)};
    Corpus<Rational> c(k, cfg.mutation);
    Rational factor = factorial(k + 1);
    if ((k + 1) % 2 == 1) factor = -factor;
    const auto red = eng.reduce_c2(eng.singular_vector(k));
    WPoly<Rational> collapsed(c.yz());
    for (const auto& [e, co] : red.terms()) {
        if (e[1] != e[2]) {
            set_fail(res, "reduced singular vector is not charge-balanced: term " +
                              red.str());
            return;
        }
        collapsed.add_term({e[0], e[1]}, co);
    }
    if (collapsed != factor * c.f(0)) {
        set_fail(res, "collapsed reduction = " + collapsed.str() + " but (-1)^(k+1)(k+1)! f0 = " +
                          (factor * c.f(0)).str());
        return;
    }
    set_pass(res, "reduce_c2(singular vector) collapses to (-1)^(k+1)(k+1)! f0 = " +
                      factor.str() + " * f0");
}

// C8: the Jacobian determinant of (f0, f1) is a nonzero polynomial.
void check_c8(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    const auto f0 = c.f(0), f1 = c.f(1);
    const auto jac = f0.d(0) * f1.d(1) - f0.d(1) * f1.d(0);
    if (jac.is_zero()) {
        set_fail(res, "Jacobian of (f0, f1) vanishes identically");
        return;
    }
    set_pass(res, "Jacobian of (f0, f1) has " + std::to_string(jac.nterms()) +
                      " nonzero terms in weight " + std::to_string(2 * k + 1));
}

// C9: f2 = p f0 + q f1 with the displayed p and q.
void check_c9(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    const auto lhs = c.f(2), rhs = c.p_poly() * c.f(0) + c.q_poly() * c.f(1);
    if (lhs != rhs) {
        set_fail(res, "f2 - (p f0 + q f1) = " + (lhs - rhs).str());
        return;
    }
    set_pass(res, "f2 = p f0 + q f1 with the displayed p, q");
}

// C10: operator-matrix determinant; f0 on the two special loci.
void check_c10(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    const auto y = c.y(), z = c.z();
    const auto D = c.D(), E = c.E();
    const auto det = derive(D, y) * derive(E, z) - derive(D, z) * derive(E, y);
    const auto target = Rational(-k) * ((y * y + Rational(4) * z) * z);
    if (det != target) {
        set_fail(res, "det of the (D,E) matrix = " + det.str() + ", expected " + target.str());
        return;
    }
    const auto on_parabola =
        c.f(0).substitute(c.yz(), {y, Rational(-1, 4) * (y * y)});
    if (on_parabola.is_zero()) {
        set_fail(res, "f0(y, -y^2/4) vanishes identically");
        return;
    }
    const auto on_axis = c.f(0).substitute(c.yz(), {y, WPoly<Rational>::zero(c.yz())});
    if (on_axis != y.pow(k + 1)) {
        set_fail(res, "f0(y, 0) = " + on_axis.str() + ", expected y^" + std::to_string(k + 1));
        return;
    }
    set_pass(res, "det = -k(y^2+4z)z; f0(y,-y^2/4) = " + on_parabola.str() +
                      " != 0; f0(y,0) = y^" + std::to_string(k + 1));
}

// C11: syzygy slice dimensions, generation by (f1, -f0), bracket identity.
void check_c11(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    SliceCache<Rational> cache(c);
    const auto f0 = cache.f(0), f1 = cache.f(1);
    bool ok = true;
    for (long n = k + 1; n <= 2 * k + 10; ++n) {
        const auto syz = syzygy_slice(f0, f1, n);
        const long got = static_cast<long>(syz.dim());
        const long want = dim_syzygy(k, n);
        res.table.push_back({k, n, "Syz", got, want, got == want});
        ok = ok && got == want;
        if (got != want) continue;
        const auto gen = pair_multiples_slice(f0, f1, f1, -f0, n);
        if (syz.rows != gen.rows) {
            set_fail(res, "syzygies at n=" + std::to_string(n) +
                              " are not generated by (f1, -f0)");
            return;
        }
        if (n >= 2 * k + 3 && n / 2 != n - k - 2 - (n - 2 * k - 3) / 2) {
            set_fail(res, "Gaussian-bracket identity fails at n=" + std::to_string(n));
            return;
        }
    }
    if (!ok) {
        set_fail(res, "syzygy dimension mismatch; see table");
        return;
    }
    set_pass(res, "syzygy dims match [(n-2k-3)/2]+1 and all pairs are multiples of (f1,-f0), n<=" +
                      std::to_string(2 * k + 10));
}

// C12: the full piecewise dimension tables of the graded ideals.
void check_c12(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    SliceCache<Rational> cache(c);
    const long cap = cfg.cap_for(k);
    bool ok = true;
    auto row = [&](long n, const std::string& space, long got, long want) {
        res.table.push_back({k, n, space, got, want, got == want});
        ok = ok && got == want;
    };
    for (long n = 0; n <= cap; ++n) {
        row(n, "J", static_cast<long>(cache.J(n).dim()), dim_J(k, n));
        row(n, "JcapA", static_cast<long>(intersect_slices(cache.J(n), cache.A(n)).dim()),
            dim_JcapA(k, n));
        row(n, "I2", static_cast<long>(cache.I(2, n).dim()), dim_I2(k, n));
        row(n, "I3", static_cast<long>(cache.I(3, n).dim()), dim_I3(k, n));
        row(n, "I4", static_cast<long>(cache.I(4, n).dim()), dim_I4(k, n));
    }
    if (!ok) {
        set_fail(res, "ideal slice dimension mismatch; see table");
        return;
    }
    set_pass(res, "J, J cap A, I2, I3, I4 slice dims match the piecewise formulas up to n=" +
                      std::to_string(cap));
}

// C13: f4..f8 lie in the I4 slices of their weights.
void check_c13(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    SliceCache<Rational> cache(c);
    for (long r = 4; r <= 8; ++r) {
        if (!contains(cache.I(4, k + 1 + r), cache.f(r)).member) {
            set_fail(res, "f" + std::to_string(r) + " is outside I4 at weight " +
                              std::to_string(k + 1 + r));
            return;
        }
    }
    set_pass(res, "f4..f8 lie in the I4 slices of weights " + std::to_string(k + 5) + ".." +
                      std::to_string(k + 9));
}

// C14: graded codimension of I4 in A with a stabilization witness.
void check_c14(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    SliceCache<Rational> cache(c);
    const long cap = cfg.cap_for(k);
    std::vector<SliceBasis<Rational>> i4, a;
    long stable_from = -1;
    for (long n = 0; n <= cap; ++n) {
        i4.push_back(cache.I(4, n));
        a.push_back(cache.A(n));
        if (i4.back().dim() == a.back().dim()) {
            if (stable_from < 0) stable_from = n;
        } else {
            stable_from = -1;
        }
    }
    const long dim = graded_codim(i4, a, cap);
    const long want = k * (k + 1) / 2;
    if (dim != want) {
        set_fail(res, "dim A/I4 = " + std::to_string(dim) + ", expected k(k+1)/2 = " +
                          std::to_string(want));
        return;
    }
    set_pass(res, "dim R_W = " + std::to_string(dim) + "; slices agree on n in [" +
                      std::to_string(stable_from) + "," + std::to_string(cap) + "]");
}

// C15: charge-zero basis count and quotient slice dimensions.
void check_c15(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    SliceCache<Rational> cache(c);
    const long cap = cfg.cap_for(k);
    long count = 0;
    for (long p = 0; p <= k; ++p) {
        for (long q = 0; p + q <= k; ++q) {
            for (long r = 0; r <= k && p + r <= k; ++r) ++count;
        }
    }
    const long want = (k + 1) * (k + 2) * (2 * k + 3) / 6;
    if (count != want) {
        set_fail(res, "basis-box count = " + std::to_string(count) +
                          ", expected (k+1)(k+2)(2k+3)/6 = " + std::to_string(want));
        return;
    }
    bool ok = true;
    for (long n = 0; n <= cap; ++n) {
        long charge_zero = 0;
        for (long q = 0; q <= k; ++q) {
            const long p = n - 2 * q;
            if (p >= 0 && p + q <= k) ++charge_zero;
        }
        res.table.push_back({k, n, "Rh", charge_zero, dim_rlh(k, n),
                             charge_zero == dim_rlh(k, n)});
        ok = ok && charge_zero == dim_rlh(k, n);
        const long jd = static_cast<long>(cache.J(n).dim());
        const long jwant = dim_cyz(n) - dim_rlh(k, n);
        res.table.push_back({k, n, "J", jd, jwant, jd == jwant});
        ok = ok && jd == jwant;
    }
    if (!ok) {
        set_fail(res, "charge-zero slice dimension mismatch; see table");
        return;
    }
    set_pass(res, "basis box has " + std::to_string(want) +
                      " monomials; charge-zero slice dims and J complements match up to n=" +
                      std::to_string(cap));
}

// C16: characteristic polynomial of the zero-mode matrix, trace zero.
void check_c16(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<RatFuncK> c(cfg.mutation);
    const auto coeffs = char_poly(c.a_matrix());
    const RatFuncK kk = RatFuncK::k();
    const RatFuncK a2 = RatFuncK(36) * kk.pow(4) * (kk + RatFuncK(2)).pow(2);
    const RatFuncK b2 = RatFuncK(36) * kk.pow(4) * (RatFuncK(3) * kk + RatFuncK(4)).pow(2);
    // (x^2 - a2)(x^2 - b2) = x^4 - (a2+b2) x^2 + a2 b2.
    const bool ok = coeffs[0] == RatFuncK(0) && coeffs[1] == -(a2 + b2) &&
                    coeffs[2] == RatFuncK(0) && coeffs[3] == a2 * b2;
    if (!ok) {
        set_fail(res, "characteristic polynomial does not factor as (x^2-36k^4(k+2)^2)(x^2-36k^4(3k+4)^2)");
        return;
    }
    const Rational e1 = Rational(6) * Rational(k).pow(2) * Rational(k + 2);
    const Rational e2 = Rational(6) * Rational(k).pow(2) * Rational(3 * k + 4);
    set_pass(res, "char poly = (x^2-36k^4(k+2)^2)(x^2-36k^4(3k+4)^2), trace 0; eigenvalues at k=" +
                      std::to_string(k) + ": {" + e1.str() + ", -" + e1.str() + ", " + e2.str() +
                      ", -" + e2.str() + "}");
}

// C17: the zero-mode eigensystem has no integer solutions in the
// module-label box; a wider sanity band is scanned and reported.
void check_c17(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    const long long kk = k;
    auto w2_num = [&](long long i, long long j) {
        // 2k(k+2) * eig_w2 as an integer.
        const long long m = i - 2 * j;
        return kk * m - m * m + 2 * kk * (i - j + 1) * j;
    };
    auto w3 = [&](long long i, long long j) {
        const long long m = i - 2 * j;
        return kk * kk * m - 3 * kk * m * m + 2 * m * m * m - 6 * kk * m * (i - j + 1) * j;
    };
    // Spot-check the integer fast path against the corpus expressions.
    for (long long i = -3; i <= 3; ++i) {
        for (long long j = -3; j <= 3; ++j) {
            const Rational denom = Rational(2 * k) * Rational(k + 2);
            if (c.eig_w2(i, j) != Rational(w2_num(i, j)) / denom ||
                c.eig_w3(i, j) != Rational(w3(i, j))) {
                set_fail(res, "integer eigenvalue evaluation disagrees with the corpus at (i,j)=(" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
                return;
            }
        }
    }
    const long long one = 2 * kk * (kk + 2);  // w2_num value meaning eigenvalue 1
    const long long l1 = 6 * kk * kk * (kk + 2), l2 = 6 * kk * kk * (3 * kk + 4);
    const std::vector<long long> lams = {l1, -l1, l2, -l2};
    std::vector<std::string> box_sols, band_sols;
    auto scan = [&](long long i, long long j, std::vector<std::string>& out) {
        if (w2_num(i, j) != one) return;
        const long long v3 = w3(i, j);
        for (long long lam : lams) {
            if (v3 == lam) {
                out.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(lam) + ")");
            }
        }
    };
    for (long long i = 0; i <= kk; ++i) {
        for (long long j = 0; j <= i - 1; ++j) scan(i, j, box_sols);
    }
    for (long long i = -4 * kk; i <= 4 * kk; ++i) {
        for (long long j = -4 * kk; j <= 4 * kk; ++j) scan(i, j, band_sols);
    }
    if (!box_sols.empty()) {
        std::string w = "integer solutions inside the label box 0<=i<=k, 0<=j<=i-1:";
        for (const auto& s : box_sols) w += " " + s;
        set_fail(res, w);
        return;
    }
    std::string w = "no integer solutions in the label box 0<=i<=k, 0<=j<=i-1; band |i|,|j|<=4k holds " +
                    std::to_string(band_sols.size()) + " out-of-box solutions";
    if (!band_sols.empty()) {
        w += ":";
        const size_t show = std::min<size_t>(band_sols.size(), 4);
        for (size_t t = 0; t < show; ++t) w += " " + band_sols[t];
        if (band_sols.size() > show) w += " ...";
    }
    set_pass(res, w);
}

// C18: the two stated eigenvalue collisions at the special levels.
void check_c18(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    const std::pair<std::pair<long, long>, std::pair<long, long>> pair =
        k == 16 ? std::make_pair(std::make_pair(2L, 1L), std::make_pair(8L, 0L))
                : std::make_pair(std::make_pair(12L, 1L), std::make_pair(12L, 11L));
    const auto [a, b] = pair;
    const bool ok = c.eig_w2(a.first, a.second) == c.eig_w2(b.first, b.second) &&
                    c.eig_w3(a.first, a.second) == c.eig_w3(b.first, b.second);
    std::ostringstream w;
    w << "(" << a.first << "," << a.second << ") and (" << b.first << "," << b.second
      << "): o(W^2) eigenvalues " << c.eig_w2(a.first, a.second).str() << " / "
      << c.eig_w2(b.first, b.second).str() << ", o(W^3) eigenvalues "
      << c.eig_w3(a.first, a.second).str() << " / " << c.eig_w3(b.first, b.second).str();
    if (!ok) {
        set_fail(res, "eigenvalues do not collide: " + w.str());
        return;
    }
    set_pass(res, "shared eigenvalues " + w.str());
}

// C19: mode-engine spot identities.
template <class F>
void check_c19(long k, const RunConfig& cfg, CheckResult& res) {
    (void)cfg;
    const F kf = [&] {
        if constexpr (std::is_same_v<F, RatFuncK>) {
            (void)k;
            return RatFuncK::k();
        } else {
            return Rational(k);
        }
    }();
    WeylEngine<F> eng(kf);
    const auto w2 = w2_vector<F>(kf), w3 = w3_vector<F>(kf);
    if (eng.mode(w2, 1, w3) != pbw_scale(F(3), w3)) {
        set_fail(res, "W^2_1 W^3 != 3 W^3");
        return;
    }
    const auto h1 = eng.current(Gen::h, -1, vacuum<F>());
    if (!eng.mode(w3, 1, h1).empty()) {
        set_fail(res, "W^3_1 h(-1)vac != 0: " + pbw_str(eng.mode(w3, 1, h1)));
        return;
    }
    const auto e2 = eng.current(Gen::e, -2, vacuum<F>());
    const auto got = eng.mode(w3, 1, e2);
    PBWVec<F> expect;
    pbw_add(expect, PBWMono{{2}, {1}, {}},
            F(-3) * (F(5) * kf * kf - F(6) * kf - F(16)));
    pbw_add(expect, PBWMono{{1}, {2}, {}},
            F(-3) * (F(7) * kf * kf - F(2) * kf - F(8)));
    pbw_add(expect, PBWMono{{1, 1}, {1}, {}}, F(6) * (kf + F(2)));
    pbw_add(expect, PBWMono{{}, {1, 1}, {1}}, F(-12) * kf);
    pbw_add(expect, PBWMono{{}, {3}, {}},
            F(6) * kf * (kf - F(2)) * (F(5) * kf + F(8)));
    if (got != expect) {
        set_fail(res, "W^3_1 e(-2)vac display mismatch: got " + pbw_str(got));
        return;
    }
    set_pass(res, "W^2_1 W^3 = 3W^3, W^3_1 h(-1)vac = 0, W^3_1 e(-2)vac display verified (" +
                      mode_tag(std::is_same_v<F, RatFuncK>) + ")");
}

// C20: the cubic zero mode maps the singular vector to -6k (+-)(k+1)! f1.
void check_c20(long k, const RunConfig& cfg, CheckResult& res) {
    WeylEngine<Rational> eng{Rational(k)};
    Corpus<Rational> c(k, cfg.mutation);
    const auto w3 = w3_vector<Rational>(Rational(k));
    const auto red = eng.reduce_c2(eng.mode(w3, 1, eng.singular_vector(k)));
    WPoly<Rational> collapsed(c.yz());
    for (const auto& [e, co] : red.terms()) {
        if (e[1] != e[2]) {
            set_fail(res, "W^3_1 u0 reduction is not charge-balanced: " + red.str());
            return;
        }
        collapsed.add_term({e[0], e[1]}, co);
    }
    Rational factor = Rational(-6 * k) * factorial(k + 1);
    if ((k + 1) % 2 == 1) factor = -factor;
    if (collapsed != factor * c.f(1)) {
        set_fail(res, "reduce_c2(W^3_1 u0) = " + collapsed.str() + ", expected " +
                          factor.str() + " * f1");
        return;
    }
    set_pass(res, "reduce_c2(W^3_1 u0) = -6k (-1)^(k+1) (k+1)! f1 with factor " + factor.str());
}

// C21: the identity block of the g-subalgebra.
template <class F>
void check_c21(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<F> c = make_corpus<F>(k, cfg);
    const F kf = c.k();
    const auto z2 = c.z() * c.z();
    const auto z3 = c.z().pow(3);
    const bool ok =
        z2 == c.g(4) && c.y() * z2 == c.g(5) &&
        z3 == (F(Rational(3, 2)) / kf) * (c.g(2) * c.g(4)) -
                  (F(2) * kf.pow(3)).inv() * (c.g(2).pow(3) - c.g(3) * c.g(3)) &&
        c.y() * z3 == kf.inv() * (c.g(2) * c.g(5) - c.g(3) * c.g(4));
    if (!ok) {
        set_fail(res, "one of the z^2, yz^2, z^3, yz^3 expressions in the g's fails");
        return;
    }
    set_pass(res, "z^2, yz^2, z^3, yz^3 expressed in g2..g5 as displayed (" +
                      mode_tag(std::is_same_v<F, RatFuncK>) + ")");
}

// C22: the kernel of t_s -> g_s is generated by the three relations.
void check_c22(long k, const RunConfig& cfg, CheckResult& res) {
    Corpus<Rational> c(k, cfg.mutation);
    std::vector<WPoly<Rational>> gs = {c.g(2), c.g(3), c.g(4), c.g(5)};
    const long cap = std::min(cfg.cap_for(k), 24L);
    for (long n = 2; n <= 7; ++n) {
        if (kernel_slice<Rational>(c.tring(), c.yz(), gs, n).dim() != 0) {
            set_fail(res, "unexpected relation of weight " + std::to_string(n));
            return;
        }
    }
    for (long n = 8; n <= cap; ++n) {
        const auto ker = kernel_slice<Rational>(c.tring(), c.yz(), gs, n);
        std::vector<SliceBasis<Rational>> mult;
        std::vector<WPoly<Rational>> anchors;
        for (int r = 1; r <= 3; ++r) {
            const long w = 7 + r;
            if (n - w < 0) continue;
            mult.push_back(full_slice<Rational>(c.tring(), n - w));
            anchors.push_back(c.relation(r));
        }
        const auto ideal = module_slice<Rational>(c.tring(), mult, anchors, n);
        if (!(ker == ideal)) {
            set_fail(res, "kernel slice at weight " + std::to_string(n) +
                              " has dim " + std::to_string(ker.dim()) +
                              " but the relation ideal spans dim " + std::to_string(ideal.dim()));
            return;
        }
    }
    set_pass(res, "kernel of t->g equals the ideal of rel1, rel2, rel3 slice-by-slice up to weight " +
                      std::to_string(cap));
}

} // namespace

// ---------------------------------------------------------------- catalog

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> cat = {
        {"C1", "three displayed relations vanish under t->g", 1, -1, {}, true},
        {"C2", "subalgebra slice dimensions and explicit basis", 5, -1, {}, false},
        {"C3", "transported derivation equals the stated g-images", 1, -1, {}, true},
        {"C4", "-6kD matches the transported derivation on g-products", 1, -1, {}, true},
        {"C5", "Q(s,j) brute force vs closed form", 1, -1, {}, true},
        {"C6", "charge-lowering reduction: closed form vs iteration vs oracle", 1, -1, {}, false},
        {"C7", "f0 closed form vs reduced singular vector", 1, 6, {}, false},
        {"C8", "Jacobian of (f0, f1) is nonzero", 5, -1, {}, false},
        {"C9", "f2 = p f0 + q f1", 5, -1, {}, false},
        {"C10", "operator-matrix determinant and f0 specializations", 5, -1, {}, false},
        {"C11", "syzygy dimensions and generation by (f1, -f0)", 5, -1, {}, false},
        {"C12", "ideal slice dimension tables", 5, -1, {}, false},
        {"C13", "f4..f8 lie in I4", 5, -1, {}, false},
        {"C14", "graded codimension of I4 in A", 5, -1, {}, false},
        {"C15", "charge-zero basis count and quotient dimensions", 5, -1, {}, false},
        {"C16", "zero-mode matrix characteristic polynomial", 1, -1, {}, true},
        {"C17", "eigensystem has no integer module labels", 5, -1, {}, false},
        {"C18", "eigenvalue collisions at the two special levels", 1, -1, {16, 100}, false},
        {"C19", "mode-engine spot identities", 1, -1, {}, true},
        {"C20", "cubic zero-mode image of the singular vector", 1, 6, {}, false},
        {"C21", "identity block of the g-subalgebra", 1, -1, {}, true},
        {"C22", "relation kernel generated by the three relations", 5, -1, {}, false},
    };
    return cat;
}

const CheckInfo* find_check(const std::string& id) {
    for (const auto& c : check_catalog()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.k_values.empty()) throw config_error("no levels requested");
    for (long k : cfg.k_values) {
        if (k < 1) throw config_error("level must be a positive integer: " + std::to_string(k));
    }
    for (const auto& id : cfg.check_ids) {
        if (!find_check(id)) throw config_error("unknown check id: " + id);
    }
    if (cfg.weight_cap && *cfg.weight_cap < 4) {
        throw config_error("weight cap too small to say anything");
    }
    if (cfg.jobs < 1) throw config_error("jobs must be >= 1");
}

namespace {

std::string admissibility_reason(const CheckInfo& info, long k) {
    if (!info.k_exact.empty()) {
        if (std::find(info.k_exact.begin(), info.k_exact.end(), k) == info.k_exact.end()) {
            std::string levels;
            for (long v : info.k_exact) levels += (levels.empty() ? "" : ", ") + std::to_string(v);
            return "only defined at k in {" + levels + "}";
        }
        return "";
    }
    if (k < info.k_min) return "requires k >= " + std::to_string(info.k_min);
    if (info.k_max > 0 && k > info.k_max) {
        return "requires k <= " + std::to_string(info.k_max);
    }
    return "";
}

} // namespace

CheckResult run_check(const std::string& id, long k, const RunConfig& cfg) {
    const CheckInfo* info = find_check(id);
    if (!info) throw config_error("unknown check id: " + id);
    CheckResult res;
    res.check_id = id;
    res.k = k;
    const std::string why = admissibility_reason(*info, k);
    if (!why.empty()) throw config_error("inadmissible level for " + id + ": " + why);

    const bool symbolic = info->symbolic_in_k && cfg.mode != Mode::concrete;
    const auto t0 = std::chrono::steady_clock::now();
    if (id == "C1") {
        symbolic ? check_c1<RatFuncK>(k, cfg, res) : check_c1<Rational>(k, cfg, res);
    } else if (id == "C2") {
        check_c2(k, cfg, res);
    } else if (id == "C3") {
        symbolic ? check_c3<RatFuncK>(k, cfg, res) : check_c3<Rational>(k, cfg, res);
    } else if (id == "C4") {
        symbolic ? check_c4<RatFuncK>(k, cfg, res) : check_c4<Rational>(k, cfg, res);
    } else if (id == "C5") {
        check_c5(res);
    } else if (id == "C6") {
        check_c6(k, cfg, res);
    } else if (id == "C7") {
        check_c7(k, cfg, res);
    } else if (id == "C8") {
        check_c8(k, cfg, res);
    } else if (id == "C9") {
        check_c9(k, cfg, res);
    } else if (id == "C10") {
        check_c10(k, cfg, res);
    } else if (id == "C11") {
        check_c11(k, cfg, res);
    } else if (id == "C12") {
        check_c12(k, cfg, res);
    } else if (id == "C13") {
        check_c13(k, cfg, res);
    } else if (id == "C14") {
        check_c14(k, cfg, res);
    } else if (id == "C15") {
        check_c15(k, cfg, res);
    } else if (id == "C16") {
        check_c16(k, cfg, res);
    } else if (id == "C17") {
        check_c17(k, cfg, res);
    } else if (id == "C18") {
        check_c18(k, cfg, res);
    } else if (id == "C19") {
        symbolic ? check_c19<RatFuncK>(k, cfg, res) : check_c19<Rational>(k, cfg, res);
    } else if (id == "C20") {
        check_c20(k, cfg, res);
    } else if (id == "C21") {
        symbolic ? check_c21<RatFuncK>(k, cfg, res) : check_c21<Rational>(k, cfg, res);
    } else if (id == "C22") {
        check_c22(k, cfg, res);
    }
    res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return res;
}

bool is_resource_skip(const CheckResult& r) {
    return r.status == Status::skipped && r.witness.rfind("resource", 0) == 0;
}

std::vector<CheckResult> run_suite(const RunConfig& cfg) {
    validate_config(cfg);
    std::vector<std::string> ids = cfg.check_ids;
    if (ids.empty()) {
        for (const auto& c : check_catalog()) ids.push_back(c.id);
    }
    struct Task {
        std::string id;
        long k;
    };
    std::vector<Task> tasks;
    for (const auto& id : ids) {
        for (long k : cfg.k_values) tasks.push_back({id, k});
    }
    std::vector<CheckResult> results(tasks.size());
    auto work = [&](size_t t) {
        const auto& task = tasks[t];
        try {
            results[t] = run_check(task.id, task.k, cfg);
        } catch (const resource_error& e) {
            results[t] = CheckResult{task.id, task.k, Status::skipped,
                                     std::string("resource cap: ") + e.what(), 0, {}};
        } catch (const config_error& e) {
            results[t] = CheckResult{task.id, task.k, Status::skipped,
                                     std::string("skipped: ") + e.what(), 0, {}};
        } catch (const std::exception& e) {
            results[t] = CheckResult{task.id, task.k, Status::fail,
                                     std::string("internal error: ") + e.what(), 0, {}};
        }
    };
    const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        for (size_t t = 0; t < tasks.size(); ++t) work(t);
    } else {
        std::atomic<size_t> next(0);
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&] {
                for (size_t t = next++; t < tasks.size(); t = next++) work(t);
            });
        }
        for (auto& th : pool) th.join();
    }
    return results;
}

} // namespace pfv
