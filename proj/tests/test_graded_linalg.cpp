#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pfv/corpus.hpp>
#include <pfv/ideals.hpp>
#include <pfv/slices.hpp>

using namespace pfv;

TEST_CASE("monomial slices in canonical order") {
    auto yz = make_ring({"y", "z"}, {1, 2});
    auto s5 = monomial_slice(yz, 5);
    REQUIRE(s5.size() == 3);
    CHECK(s5[0] == Exps{5, 0});
    CHECK(s5[1] == Exps{3, 1});
    CHECK(s5[2] == Exps{1, 2});
    CHECK(monomial_slice(yz, 0) == std::vector<Exps>{{0, 0}});
    auto cube = make_ring({"y0", "y1", "y2"}, {1, 1, 1});
    CHECK(monomial_slice(cube, 2).size() == 6);
    for (long n = 0; n <= 12; ++n) {
        CHECK(static_cast<long>(monomial_slice(yz, n).size()) == dim_cyz(n));
    }
}

TEST_CASE("span slices") {
    Corpus<Rational> c(5);
    auto y = c.y(), z = c.z();
    CHECK(span_slice<Rational>(c.yz(), {c.g(2), y * y, z}, 2).dim() == 2);
    CHECK(span_slice<Rational>(c.yz(), {}, 4).dim() == 0);
    CHECK_THROWS_AS(span_slice<Rational>(c.yz(), {y + z}, 1), dimension_mismatch);
    // The five weight-8 products of g's carry exactly one relation.
    auto s8 = span_slice<Rational>(
        c.yz(),
        {c.g(2).pow(4), c.g(2) * c.g(3) * c.g(3), c.g(2) * c.g(2) * c.g(4),
         c.g(4) * c.g(4), c.g(3) * c.g(5)},
        8);
    CHECK(s8.dim() == 4);
}

TEST_CASE("subalgebra slices match the closed form and explicit basis") {
    Corpus<Rational> c(5);
    SliceCache<Rational> cache(c);
    for (long n = 0; n <= 16; ++n) {
        CHECK(static_cast<long>(cache.A(n).dim()) == dim_A(n));
    }
    // Explicit basis at n = 5: {y^5 - 25 y^3 z, y z^2}.
    auto y = c.y(), z = c.z();
    auto b1 = y.pow(5) - Rational(25) * (y.pow(3) * z);
    auto b2 = y * z * z;
    CHECK(contains(cache.A(5), b1).member);
    CHECK(contains(cache.A(5), b2).member);
    CHECK_FALSE(contains(cache.A(5), y.pow(5)).member);
    // The explicit slice basis at every n in 2..16.
    for (long n = 2; n <= 16; ++n) {
        auto lead = y.pow(n) - Rational(5 * n) * (y.pow(n - 2) * z);
        CHECK(contains(cache.A(n), lead).member);
        for (long j = 2; 2 * j <= n; ++j) {
            CHECK(contains(cache.A(n), y.pow(n - 2 * j) * z.pow(j)).member);
        }
    }
}

TEST_CASE("ideal slices and membership certificates at k=5") {
    Corpus<Rational> c(5);
    SliceCache<Rational> cache(c);
    const long k = 5;
    for (long n = 0; n <= 16; ++n) {
        CHECK(static_cast<long>(cache.J(n).dim()) == dim_J(k, n));
        CHECK(static_cast<long>(cache.I(2, n).dim()) == dim_I2(k, n));
        CHECK(static_cast<long>(cache.I(3, n).dim()) == dim_I3(k, n));
        CHECK(static_cast<long>(cache.I(4, n).dim()) == dim_I4(k, n));
        // Monotonicity.
        CHECK(slice_subset(cache.I(2, n), cache.I(3, n)));
        CHECK(slice_subset(cache.I(3, n), cache.I(4, n)));
        CHECK(slice_subset(cache.I(4, n), cache.J(n)));
    }
    // J_(k+1) = C f0.
    CHECK(cache.J(k + 1).dim() == 1);
    CHECK(contains(cache.J(k + 1), cache.f(0)).member);
    // f2 is not a multiple of g2 f0 (weight k+3).
    auto g2f0 = span_slice<Rational>(c.yz(), {c.g(2) * c.f(0)}, k + 3);
    auto miss = contains(g2f0, c.f(2));
    CHECK_FALSE(miss.member);
    CHECK(miss.witness_col >= 0);
    // ... and I_2 at k+3 likewise misses f2, while I_3 contains it.
    CHECK_FALSE(contains(cache.I(2, k + 3), c.f(2)).member);
    auto hit = contains(cache.I(3, k + 3), c.f(2));
    CHECK(hit.member);
    // The certificate really reassembles f2.
    WPoly<Rational> rebuilt(c.yz());
    for (size_t i = 0; i < hit.coeffs.size(); ++i) {
        rebuilt += hit.coeffs[i] * cache.I(3, k + 3).basis_poly(i);
    }
    CHECK(rebuilt == c.f(2));
    // f3 outside I_3 at weight k+4, f4 inside I_4 at weight k+5.
    CHECK_FALSE(contains(cache.I(3, k + 4), c.f(3)).member);
    CHECK(contains(cache.I(4, k + 5), c.f(4)).member);
    // Zero is everywhere.
    CHECK(contains(cache.I(2, 9), WPoly<Rational>::zero(c.yz())).member);
}

TEST_CASE("intersection of slices") {
    Corpus<Rational> c(5);
    SliceCache<Rational> cache(c);
    for (long n = 0; n <= 16; ++n) {
        auto cap = intersect_slices(cache.J(n), cache.A(n));
        CHECK(static_cast<long>(cap.dim()) == dim_JcapA(5, n));
        // J cap A coincides with I4 slice by slice.
        CHECK(cap == cache.I(4, n));
    }
}

TEST_CASE("graded codimension with stabilization window") {
    Corpus<Rational> c(5);
    SliceCache<Rational> cache(c);
    const long cap = 16;  // 2k+6
    std::vector<SliceBasis<Rational>> j, cyz, i4, i3, a;
    for (long n = 0; n <= cap; ++n) {
        j.push_back(cache.J(n));
        cyz.push_back(cache.full(n));
        i4.push_back(cache.I(4, n));
        i3.push_back(cache.I(3, n));
        a.push_back(cache.A(n));
    }
    CHECK(graded_codim(j, cyz, cap) == 21);   // (k+1)(k+2)/2
    CHECK(graded_codim(i4, a, cap) == 15);    // k(k+1)/2
    CHECK(graded_codim(i3, a, cap) == 16);    // k(k+1)/2 + 1
    // Too small a cap is refused, not silently truncated.
    std::vector<SliceBasis<Rational>> j10(j.begin(), j.begin() + 11),
        c10(cyz.begin(), cyz.begin() + 11);
    CHECK_THROWS_AS(graded_codim(j10, c10, 10), resource_error);
    // Non-containment is refused.
    CHECK_THROWS_AS(graded_codim(cyz, j, cap), dimension_mismatch);
}

TEST_CASE("syzygy slices") {
    Corpus<Rational> c(5);
    SliceCache<Rational> cache(c);
    const long k = 5;
    const auto f0 = cache.f(0), f1 = cache.f(1);
    for (long n = k + 1; n <= 2 * k + 10; ++n) {
        auto syz = syzygy_slice(f0, f1, n);
        CHECK(static_cast<long>(syz.dim()) == dim_syzygy(k, n));
        // Every syzygy is a multiple of (f1, -f0).
        auto gen = pair_multiples_slice(f0, f1, f1, -f0, n);
        CHECK(syz.rows == gen.rows);
        // Gaussian-bracket identity for n >= 2k+3.
        if (n >= 2 * k + 3) {
            CHECK(n / 2 == n - k - 2 - (n - 2 * k - 3) / 2);
        }
    }
    // The weight-(2k+3) syzygy is exactly (f1, -f0).
    auto syz = syzygy_slice(f0, f1, 2 * k + 3);
    REQUIRE(syz.dim() == 1);
    auto [a, b] = syz.pair_poly(0);
    // Normalize: the pair is a scalar multiple of (f1, -f0).
    auto lead = a.terms().begin()->second;
    auto f1lead = f1.terms().begin()->second;
    auto scale = f1lead / lead;
    CHECK(scale * a == f1);
    CHECK(scale * b == -f0);
}

TEST_CASE("kernel slices of the relation map") {
    Corpus<Rational> c(5);
    std::vector<WPoly<Rational>> gs = {c.g(2), c.g(3), c.g(4), c.g(5)};
    for (long n = 2; n <= 7; ++n) {
        CHECK(kernel_slice<Rational>(c.tring(), c.yz(), gs, n).dim() == 0);
    }
    auto k8 = kernel_slice<Rational>(c.tring(), c.yz(), gs, 8);
    auto k9 = kernel_slice<Rational>(c.tring(), c.yz(), gs, 9);
    auto k10 = kernel_slice<Rational>(c.tring(), c.yz(), gs, 10);
    CHECK(k8.dim() == 1);
    CHECK(k9.dim() == 1);
    CHECK(k10.dim() == 2);
    // The weight-8 kernel is spanned by the first displayed relation.
    CHECK(contains(k8, c.relation(1)).member);
    CHECK(contains(k9, c.relation(2)).member);
    // ... and weight 10 by relation 3 together with t2 * relation 1.
    CHECK(contains(k10, c.relation(3)).member);
    CHECK(contains(k10, WPoly<Rational>::var(c.tring(), 0) * c.relation(1)).member);
}
