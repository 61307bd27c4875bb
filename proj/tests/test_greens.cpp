#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "dce/greens.hpp"

using namespace dce;

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

TEST_CASE("homogeneous medium reduces to the free outgoing wave") {
    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> nd(0.5, 4.0), xd(-3.0, 3.0), kd(0.2, 5.0);
    for (int i = 0; i < 100; ++i) {
        double n = nd(rng), k = kd(rng), x = xd(rng), xp = xd(rng);
        GreensContext ctx = make_greens_context(n, n);
        std::complex<double> expected =
            I / (2.0 * k * n) * std::exp(I * k * n * std::abs(x - xp));
        std::complex<double> got = greens(ctx, k, x, xp);
        CHECK(std::abs(got - expected) <= 1e-13 * std::abs(expected));
    }
}

TEST_CASE("transmission branch matches hand substitution") {
    // n1 = 1, n2 = 2, k = 1, x = 0.5, x' = -0.5:
    // G = i/(2 k n2) * t_right * exp(i (n1 * 0.5 + n2 * 0.5))
    //   = i/4 * (4/3) * exp(1.5 i) = (i/3) exp(1.5 i)
    GreensContext ctx = make_greens_context(1.0, 2.0);
    std::complex<double> got = greens(ctx, 1.0, 0.5, -0.5);
    std::complex<double> expected = I / 3.0 * std::exp(1.5 * I);
    CHECK(got.real() == doctest::Approx(expected.real()).epsilon(1e-14));
    CHECK(got.imag() == doctest::Approx(expected.imag()).epsilon(1e-14));
    // frozen value of the same expression
    CHECK(got.real() == doctest::Approx(-0.33249832886801814).epsilon(1e-14));
    CHECK(got.imag() == doctest::Approx(0.023579067222567637).epsilon(1e-14));
}

TEST_CASE("greens is continuous across the interface") {
    // The two branches evaluated a hair on either side of x = 0 agree through
    // the 1 + r = t identities; the probe offset itself contributes ~1e-13.
    for (double xp : {-0.3, 0.7}) {
        GreensContext ctx = make_greens_context(1.0, 2.0);
        std::complex<double> above = greens(ctx, 1.0, 1e-13, xp);
        std::complex<double> below = greens(ctx, 1.0, -1e-13, xp);
        CHECK(std::abs(above - below) <= 1e-12 * std::abs(above));
    }
    // brute force further out, with the matching looser tolerance
    GreensContext ctx = make_greens_context(1.0, 2.0);
    std::complex<double> above = greens(ctx, 1.0, 1e-9, -0.3);
    std::complex<double> below = greens(ctx, 1.0, -1e-9, -0.3);
    CHECK(std::abs(above - below) <= 1e-8 * std::abs(above));
}

TEST_CASE("greens is continuous across the source point") {
    GreensContext ctx = make_greens_context(1.0, 2.0);
    for (double xp : {0.5, -0.8}) {
        // only the echo term moves: its phase shifts by ~2 k n * 1e-9
        std::complex<double> left = greens(ctx, 1.0, xp - 1e-9, xp);
        std::complex<double> right = greens(ctx, 1.0, xp + 1e-9, xp);
        CHECK(std::abs(left - right) <= 1e-8 * std::abs(left));
    }
}

TEST_CASE("coincident points evaluate to the finite direct-wave prefactor") {
    GreensContext ctx = make_greens_context(2.0, 1.0);
    std::complex<double> g = greens(ctx, 1.5, 0.0, 0.0);
    CHECK(std::isfinite(g.real()));
    CHECK(std::isfinite(g.imag()));
}

TEST_CASE("reciprocity holds in all four regions") {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> re(0.5, 3.0), im(0.0, 0.5), kd(0.3, 4.0);
    // deterministic sign patterns cover the four (sign x, sign x') cells
    const double signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::uniform_real_distribution<double> mag(0.1, 3.0);
    for (int i = 0; i < 100; ++i) {
        GreensContext ctx = make_greens_context({re(rng), im(rng)}, {re(rng), im(rng)});
        double k = kd(rng);
        const double* s = signs[i % 4];
        double x = s[0] * mag(rng), xp = s[1] * mag(rng);
        std::complex<double> a = greens(ctx, k, x, xp);
        std::complex<double> b = greens(ctx, k, xp, x);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    }
}

TEST_CASE("loss makes the homogeneous propagator decay with separation") {
    GreensContext ctx = make_greens_context({1.5, 0.3}, {1.5, 0.3});
    double prev = std::abs(greens(ctx, 1.0, 0.1, 0.0));
    for (double x : {0.4, 0.9, 1.7, 2.6}) {
        double cur = std::abs(greens(ctx, 1.0, x, 0.0));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("helmholtz residual vanishes at second order away from the source") {
    SUBCASE("homogeneous medium") {
        GreensContext ctx = make_greens_context(1.0, 1.0);
        std::complex<double> g = greens(ctx, 1.0, 2.0, 0.5);
        std::complex<double> r = helmholtz_residual(ctx, 1.0, 2.0, 0.5, 1e-3);
        CHECK(std::abs(r) < 1e-5 * std::abs(g));
    }
    SUBCASE("two media, observation in the source region") {
        GreensContext ctx = make_greens_context(1.0, 3.0);
        std::complex<double> g = greens(ctx, 1.0, 2.0, 0.5);
        std::complex<double> r = helmholtz_residual(ctx, 1.0, 2.0, 0.5, 1e-3);
        CHECK(std::abs(r) < 1e-5 * std::abs(g));
    }
    SUBCASE("observation on the far side of the interface") {
        GreensContext ctx = make_greens_context(1.0, 2.0);
        std::complex<double> g = greens(ctx, 1.0, -1.5, 0.5);
        std::complex<double> r = helmholtz_residual(ctx, 1.0, -1.5, 0.5, 1e-3);
        CHECK(std::abs(r) < 1e-5 * std::abs(g));
    }
    SUBCASE("halving h quarters the residual") {
        GreensContext ctx = make_greens_context(1.0, 3.0);
        double r1 = std::abs(helmholtz_residual(ctx, 1.0, 2.0, 0.5, 1e-3));
        double r2 = std::abs(helmholtz_residual(ctx, 1.0, 2.0, 0.5, 5e-4));
        double ratio = r1 / r2;
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }
}

TEST_CASE("helmholtz residual rejects bad stencils") {
    GreensContext ctx = make_greens_context(1.0, 2.0);
    // stencil crossing the interface
    CHECK_THROWS_AS(helmholtz_residual(ctx, 1.0, 5e-4, 3.0, 1e-3), std::invalid_argument);
    // stencil too close to the source
    CHECK_THROWS_AS(helmholtz_residual(ctx, 1.0, 1.0, 1.002, 1e-3), std::invalid_argument);
    // nonpositive step
    CHECK_THROWS_AS(helmholtz_residual(ctx, 1.0, 2.0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("nonpositive wavenumber is rejected") {
    GreensContext ctx = make_greens_context(1.0, 2.0);
    CHECK_THROWS_AS(greens(ctx, 0.0, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(greens(ctx, -1.0, 1.0, 2.0), std::domain_error);
}

TEST_CASE("context construction validates the scale") {
    CHECK_THROWS_AS(make_greens_context(1.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_greens_context(1.0, 2.0, -2.0), std::invalid_argument);
    // a non-unit scale divides the value linearly
    GreensContext unit = make_greens_context(1.0, 2.0, 1.0);
    GreensContext doubled = make_greens_context(1.0, 2.0, 2.0);
    std::complex<double> a = greens(unit, 1.0, 0.4, 0.2);
    std::complex<double> b = greens(doubled, 1.0, 0.4, 0.2);
    CHECK(std::abs(a - 2.0 * b) <= 1e-15 * std::abs(a));
}
