#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <pfv/corpus.hpp>
#include <pfv/pbw.hpp>

using namespace pfv;

namespace {

// The closed form of reduce_c2(f(0)^s e(-1)^n vac).
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

PBWVec<Rational> random_vec(std::mt19937& rng, long max_weight) {
    std::uniform_int_distribution<int> coin(0, 2), coeff(-5, 5), depth(1, 2);
    PBWVec<Rational> v;
    for (int t = 0; t < 3; ++t) {
        PBWMono m;
        long w = 0;
        while (w < max_weight) {
            const int d = depth(rng);
            if (w + d > max_weight) break;
            m = m.with_inserted(static_cast<Gen>(coin(rng)), d);
            w += d;
        }
        pbw_add(v, m, Rational(coeff(rng)));
    }
    return v;
}

} // namespace

TEST_CASE("current mode straightening basics") {
    WeylEngine<Rational> eng(Rational(5));
    // e(1) f(-1) vac = ([e,f](0) + 1*<e,f>*k) vac = k vac.
    auto fm1 = eng.current(Gen::f, -1, vacuum<Rational>());
    auto r = eng.current(Gen::e, 1, fm1);
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == PBWMono{});
    CHECK(r.begin()->second == Rational(5));
    // h(0) on a charge-zero monomial vanishes.
    auto v = eng.current(Gen::f, -2, eng.current(Gen::e, -1, vacuum<Rational>()));
    CHECK(eng.current(Gen::h, 0, v).empty());
    // h(0) eigenvalue = charge in general.
    auto e2 = eng.current(Gen::e, -1, eng.current(Gen::e, -1, vacuum<Rational>()));
    auto h0 = eng.current(Gen::h, 0, e2);
    REQUIRE(h0.size() == 1);
    CHECK(h0.begin()->second == Rational(4));
    // f(0) e(-1)^2 vac = -2 e(-1)h(-1) vac - 2 e(-2) vac, which in PBW
    // normal form reads -2 h(-1)e(-1) vac + 2 e(-2) vac.
    auto f0 = eng.current(Gen::f, 0, e2);
    PBWVec<Rational> expect;
    pbw_add(expect, PBWMono{{1}, {1}, {}}, Rational(-2));
    pbw_add(expect, PBWMono{{}, {2}, {}}, Rational(2));
    CHECK(f0 == expect);
    // Weight/charge bookkeeping on every term of a straightened result.
    for (const auto& [m, c] : f0) {
        CHECK(m.weight() == 2);
        CHECK(m.charge() == 2);
    }
}

TEST_CASE("vector modes: conformal weights") {
    WeylEngine<Rational> eng(Rational(5));
    const auto omega = omega_aff_vector<Rational>(Rational(5));
    auto e1 = eng.current(Gen::e, -1, vacuum<Rational>());
    // L(0) = omega_1 has eigenvalue 1 on weight-1 states.
    CHECK(eng.mode(omega, 1, e1) == e1);
    auto h2 = eng.current(Gen::h, -2, vacuum<Rational>());
    CHECK(eng.mode(omega, 1, h2) == pbw_scale(Rational(2), h2));
    // L(-1) vac = 0-weight shift: omega_0 vac = 0.
    CHECK(eng.mode(omega, 0, vacuum<Rational>()).empty());
    // omega_3 omega = c/2 vac with c = 3k/(k+2) = 15/7 at k=5.
    auto top = eng.mode(omega, 3, omega);
    REQUIRE(top.size() == 1);
    CHECK(top.begin()->second == Rational(15, 14));
}

TEST_CASE("W vectors: primary relations, symbolic in k") {
    const RatFuncK k = RatFuncK::k();
    WeylEngine<RatFuncK> eng(k);
    const auto w2 = w2_vector<RatFuncK>(k);
    const auto w3 = w3_vector<RatFuncK>(k);
    // W^2_1 W^3 = 3 W^3.
    CHECK(eng.mode(w2, 1, w3) == pbw_scale(RatFuncK(3), w3));
    // W^3_1 h(-1) vac = 0.
    auto h1 = eng.current(Gen::h, -1, vacuum<RatFuncK>());
    CHECK(eng.mode(w3, 1, h1).empty());
    // W^3_1 e(-2) vac, the displayed five-term expansion.
    auto e2 = eng.current(Gen::e, -2, vacuum<RatFuncK>());
    auto got = eng.mode(w3, 1, e2);
    PBWVec<RatFuncK> expect;
    pbw_add(expect, PBWMono{{2}, {1}, {}},
            RatFuncK(-3) * (RatFuncK(5) * k * k - RatFuncK(6) * k - RatFuncK(16)));
    pbw_add(expect, PBWMono{{1}, {2}, {}},
            RatFuncK(-3) * (RatFuncK(7) * k * k - RatFuncK(2) * k - RatFuncK(8)));
    pbw_add(expect, PBWMono{{1, 1}, {1}, {}}, RatFuncK(6) * (k + RatFuncK(2)));
    pbw_add(expect, PBWMono{{}, {1, 1}, {1}}, RatFuncK(-12) * k);
    pbw_add(expect, PBWMono{{}, {3}, {}},
            RatFuncK(6) * k * (k - RatFuncK(2)) * (RatFuncK(5) * k + RatFuncK(8)));
    CHECK(got == expect);
}

TEST_CASE("mode of h(-1)h(-2) monomial label convention") {
    // PBWMono{{2},{1},{}} means h(-2) e(-1) vac; sortedness enforced by
    // with_inserted.
    PBWMono m;
    m = m.with_inserted(Gen::h, 1);
    m = m.with_inserted(Gen::h, 3);
    m = m.with_inserted(Gen::h, 2);
    CHECK(m.h == std::vector<int>{3, 2, 1});
    CHECK(m.weight() == 6);
    CHECK(m.charge() == 0);
    CHECK(m.str() == "h(-3)h(-2)h(-1)1");
}

TEST_CASE("c2 reduction") {
    const RatFuncK k = RatFuncK::k();
    WeylEngine<RatFuncK> eng(k);
    auto ring = WeylEngine<RatFuncK>::c2_ring();
    // reduce_c2(W^3) = 2 y0^3 - 6k y0 y1 y2.
    WPoly<RatFuncK> w3bar(ring);
    w3bar.add_term({3, 0, 0}, RatFuncK(2));
    w3bar.add_term({1, 1, 1}, RatFuncK(-6) * k);
    CHECK(eng.reduce_c2(w3_vector<RatFuncK>(k)) == w3bar);
    // reduce_c2(W^2) = -(y0^2 - 2k y1 y2)/(2k(k+2)).
    WPoly<RatFuncK> w2bar(ring);
    const RatFuncK c = (RatFuncK(2) * k * (k + RatFuncK(2))).inv();
    w2bar.add_term({2, 0, 0}, -c);
    w2bar.add_term({0, 1, 1}, RatFuncK(2) * k * c);
    CHECK(eng.reduce_c2(w2_vector<RatFuncK>(k)) == w2bar);
    // Deep modes die.
    CHECK(eng.reduce_c2(eng.current(Gen::h, -2, vacuum<RatFuncK>())).is_zero());
}

TEST_CASE("singular vector and its reduction") {
    WeylEngine<Rational> eng(Rational(1));
    auto u0 = eng.singular_vector(1);
    for (const auto& [m, c] : u0) {
        CHECK(m.weight() == 2);
        CHECK(m.charge() == 0);
    }
    // k=1: reduce_c2(u0) = 2 y0^2 - 4 y1 y2.
    WPoly<Rational> expect(WeylEngine<Rational>::c2_ring());
    expect.add_term({2, 0, 0}, Rational(2));
    expect.add_term({0, 1, 1}, Rational(-4));
    CHECK(eng.reduce_c2(u0) == expect);
    // Cap enforcement.
    WeylEngine<Rational> tiny(Rational(9), EngineLimits{14, 2000000, 3});
    CHECK_THROWS_AS(tiny.singular_vector(4), resource_error);
}

TEST_CASE("charge-lowering oracle agrees with the closed form") {
    WeylEngine<Rational> eng(Rational(7));
    for (long n = 1; n <= 5; ++n) {
        for (long s = 0; s <= 2 * n; ++s) {
            CHECK(eng.charge_lowering_reduction(n, s) == closed_form_54<Rational>(n, s));
        }
    }
    // Symbolic run at one spot: the result must be k-free.
    WeylEngine<RatFuncK> sym(RatFuncK::k());
    auto r = sym.charge_lowering_reduction(3, 4);
    for (const auto& [e, c] : r.terms()) CHECK(c.is_polynomial());
    CHECK(r == closed_form_54<RatFuncK>(3, 4));
    CHECK_THROWS_AS(eng.charge_lowering_reduction(2, 5), config_error);
}

TEST_CASE("quotient product compatibility and f(0) derivation") {
    WeylEngine<Rational> eng(Rational(4));
    std::mt19937 rng(987654);
    const Corpus<Rational> corp(4);
    const auto f0op = corp.f0_operator();
    for (int trial = 0; trial < 25; ++trial) {
        auto u = random_vec(rng, 3), v = random_vec(rng, 2);
        // u_{-1} v reduces to the product of the reductions.
        CHECK(eng.reduce_c2(eng.mode(u, -1, v)) == eng.reduce_c2(u) * eng.reduce_c2(v));
        // f(0) acts on the quotient as 2 y2 d/dy0 - y0 d/dy1.
        CHECK(eng.reduce_c2(eng.current(Gen::f, 0, v)) == derive(f0op, eng.reduce_c2(v)));
    }
}

TEST_CASE("singular vector reduction reproduces f0 up to the stated factor") {
    for (long k0 = 1; k0 <= 4; ++k0) {
        WeylEngine<Rational> eng{Rational(k0)};
        Corpus<Rational> corp(k0);
        Rational factor = factorial(k0 + 1);
        if ((k0 + 1) % 2 == 1) factor = -factor;  // (-1)^{k+1} (k+1)!
        // Collapse y0 -> y, y1 y2 -> z on the charge-zero reduction.
        auto red = eng.reduce_c2(eng.singular_vector(k0));
        WPoly<Rational> collapsed(corp.yz());
        for (const auto& [e, c] : red.terms()) {
            REQUIRE(e[1] == e[2]);
            collapsed.add_term({e[0], e[1]}, c);
        }
        CHECK(collapsed == factor * corp.f(0));
    }
}
