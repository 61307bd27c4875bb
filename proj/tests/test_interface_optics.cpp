#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "dce/interface_optics.hpp"

using namespace dce;

TEST_CASE("identical media produce no interface") {
    InterfaceCoefficients c = fresnel(1.5, 1.5);
    CHECK(c.r_left == std::complex<double>(0.0));
    CHECK(c.r_right == std::complex<double>(0.0));
    CHECK(c.t_left == std::complex<double>(1.0));
    CHECK(c.t_right == std::complex<double>(1.0));
}

TEST_CASE("direct substitution for a 2:1 index step") {
    InterfaceCoefficients c = fresnel(2.0, 1.0);
    CHECK(c.r_left.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(c.r_right.real() == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(c.t_left.real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(c.t_right.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("a large index ratio gives a near-mirror reflection") {
    // n2/n1 = 165.6667 corresponds to r_left = -0.98800 to five decimals
    // (hand inversion of the reflection formula).
    InterfaceCoefficients c = fresnel(1.0, 165.6667);
    CHECK(c.r_left.real() == doctest::Approx(-0.98800).epsilon(5e-6));
    CHECK(c.r_left.imag() == 0.0);
}

TEST_CASE("inverse map examples") {
    CHECK(index_ratio_for_reflection(0.0) == 1.0);
    CHECK(index_ratio_for_reflection(-0.5) == doctest::Approx(3.0).epsilon(1e-15));
    // 1.988 / 0.012 = 165.667 to three decimals
    CHECK(index_ratio_for_reflection(-0.988) == doctest::Approx(165.667).epsilon(1e-5));
}

TEST_CASE("inverse map round trip across the admissible range") {
    for (double r = -0.999; r <= 0.0; r += 0.0271) {
        double ratio = index_ratio_for_reflection(r);
        CHECK(std::abs(fresnel(1.0, ratio).r_left.real() - r) <= 1e-12);
    }
}

TEST_CASE("inverse map rejects targets outside (-1, 0]") {
    CHECK_THROWS_AS(index_ratio_for_reflection(-1.0), std::out_of_range);
    CHECK_THROWS_AS(index_ratio_for_reflection(-1.5), std::out_of_range);
    CHECK_THROWS_AS(index_ratio_for_reflection(0.1), std::out_of_range);
}

TEST_CASE("singular interface is rejected") {
    CHECK_THROWS_AS(fresnel({1.0, 0.0}, {-1.0, 0.0}), std::domain_error);
}

TEST_CASE("algebraic identities hold for random complex index pairs") {
    std::mt19937 rng(20260816);
    std::uniform_real_distribution<double> re(0.1, 5.0), im(0.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        std::complex<double> n1(re(rng), im(rng)), n2(re(rng), im(rng));
        InterfaceCoefficients c = fresnel(n1, n2);
        CHECK(std::abs(c.r_left + c.r_right) <= 1e-13);
        CHECK(std::abs(1.0 + c.r_left - c.t_left) <= 1e-13);
        CHECK(std::abs(1.0 + c.r_right - c.t_right) <= 1e-13);
        CHECK(std::abs(c.t_left / n1 - c.t_right / n2) <= 1e-13);
    }
}

TEST_CASE("reflection magnitude is bounded by 1 for real positive indices") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(0.05, 20.0);
    for (int i = 0; i < 200; ++i) {
        InterfaceCoefficients c = fresnel(dist(rng), dist(rng));
        CHECK(std::abs(c.r_left) <= 1.0);
    }
}
