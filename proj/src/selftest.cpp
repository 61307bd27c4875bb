#include "dce/selftest.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "dce/greens.hpp"
#include "dce/interface_optics.hpp"
#include "dce/quadrature.hpp"
#include "dce/spectrum.hpp"

namespace dce {

namespace {

std::string describe(const char* what, double got, double limit) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: %.3e exceeds %.3e", what, got, limit);
    return buf;
}

// Each check returns "" on success, a short diagnostic otherwise.

std::string check_fresnel_identities() {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> re(0.2, 4.0), im(0.0, 1.5);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        std::complex<double> n1(re(rng), im(rng)), n2(re(rng), im(rng));
        InterfaceCoefficients c = fresnel(n1, n2);
        worst = std::max(worst, std::abs(c.r_left + c.r_right));
        worst = std::max(worst, std::abs(1.0 + c.r_left - c.t_left));
        worst = std::max(worst, std::abs(1.0 + c.r_right - c.t_right));
        worst = std::max(worst, std::abs(c.t_left / n1 - c.t_right / n2));
    }
    return worst <= 1e-13 ? "" : describe("identity defect", worst, 1e-13);
}

std::string check_reflection_inverse() {
    double worst = 0.0;
    for (double r : {-0.9, -0.5, -0.1, 0.0}) {
        double ratio = index_ratio_for_reflection(r);
        worst = std::max(worst, std::abs(fresnel(1.0, ratio).r_left.real() - r));
    }
    return worst <= 1e-12 ? "" : describe("round-trip defect", worst, 1e-12);
}

std::string check_quadrature_rule() {
    QuadratureRule two = gauss_legendre(2);
    double node_err = std::abs(two.nodes[1] - 1.0 / std::sqrt(3.0));
    if (node_err > 1e-15)
        return describe("order-2 node error", node_err, 1e-15);

    QuadratureRule rule = gauss_legendre(12);
    double wsum = 0.0, odd = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        wsum += rule.weights[i];
        odd += rule.weights[i] * std::pow(rule.nodes[i], 9);
    }
    if (std::abs(wsum - 2.0) > 1e-13)
        return describe("weight-sum defect", std::abs(wsum - 2.0), 1e-13);
    if (std::abs(odd) > 1e-14)
        return describe("odd-moment defect", std::abs(odd), 1e-14);
    return "";
}

std::string check_quadrature_area() {
    QuadratureRule rule = gauss_legendre(8);
    std::complex<double> area =
        integrate_2d([](double, double) { return std::complex<double>(1.0); }, 0.3, rule);
    double err = std::abs(area - std::complex<double>(0.09));
    return err <= 1e-14 ? "" : describe("area defect", err, 1e-14);
}

std::string check_greens_continuity() {
    GreensContext ctx = make_greens_context(1.0, 2.0);
    std::complex<double> above = greens(ctx, 1.0, 1e-9, -0.3);
    std::complex<double> below = greens(ctx, 1.0, -1e-9, -0.3);
    double rel = std::abs(above - below) / std::abs(above);
    if (rel > 1e-7)
        return describe("interface jump", rel, 1e-7);

    std::complex<double> left = greens(ctx, 1.0, 0.5 - 1e-9, 0.5);
    std::complex<double> right = greens(ctx, 1.0, 0.5 + 1e-9, 0.5);
    rel = std::abs(left - right) / std::abs(left);
    return rel <= 1e-7 ? "" : describe("source jump", rel, 1e-7);
}

std::string check_greens_reciprocity() {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> re(0.5, 3.0), im(0.0, 0.5), pos(-3.0, 3.0),
        ks(0.3, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        GreensContext ctx =
            make_greens_context({re(rng), im(rng)}, {re(rng), im(rng)});
        double k = ks(rng), x = pos(rng), xp = pos(rng);
        std::complex<double> a = greens(ctx, k, x, xp);
        std::complex<double> b = greens(ctx, k, xp, x);
        worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
    return worst <= 1e-12 ? "" : describe("reciprocity defect", worst, 1e-12);
}

std::string check_helmholtz_residual() {
    GreensContext ctx = make_greens_context(1.0, 3.0);
    std::complex<double> g = greens(ctx, 1.0, 2.0, 0.5);
    std::complex<double> r1 = helmholtz_residual(ctx, 1.0, 2.0, 0.5, 1e-3);
    if (std::abs(r1) > 1e-5 * std::abs(g))
        return describe("residual too large", std::abs(r1), 1e-5 * std::abs(g));
    std::complex<double> r2 = helmholtz_residual(ctx, 1.0, 2.0, 0.5, 5e-4);
    double ratio = std::abs(r1) / std::abs(r2);
    if (ratio < 3.5 || ratio > 4.5) {
        char buf[120];
        std::snprintf(buf, sizeof buf, "h-halving ratio %.3f outside [3.5, 4.5]", ratio);
        return buf;
    }
    return "";
}

std::string check_quadrature_matches_closed_form() {
    double worst = 0.0;
    for (double r : {-0.988, -0.99998}) {
        double L = (r == -0.988) ? 0.1 * std::numbers::pi : 0.001 * std::numbers::pi;
        SlabInterface iface = SlabInterface::from_reflection(r);
        for (double y : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            double quad =
                slab_density_quadrature(iface, L, SlabProfile::sharp, 32, y, nullptr);
            double closed = slab_density_closed_form(iface, L, SlabProfile::sharp, y);
            worst = std::max(worst, std::abs(quad - closed) / std::abs(closed));
        }
    }
    return worst <= 1e-10 ? "" : describe("oracle disagreement", worst, 1e-10);
}

std::string check_frequency_cutoff() {
    Scenario s;
    s.slab_L = 0.1 * std::numbers::pi;
    s.reflection = FixedReflection{-0.988};
    for (double y : {1.0, 1.2}) {
        if (density_quadrature(s, y) != 0.0)
            return "quadrature density not exactly 0 above the cutoff";
        if (density_closed_form(s, y) != 0.0)
            return "closed-form density not exactly 0 above the cutoff";
        if (density_expansion(s, y) != 0.0)
            return "expansion density not exactly 0 above the cutoff";
    }
    Scenario mirror = s;
    mirror.reflection = PerfectMirror{};
    mirror.method = Method::mirror_limit;
    for (double y : {1.0, 1.2})
        if (density_mirror_limit(mirror, y) != 0.0)
            return "mirror-limit density not exactly 0 above the cutoff";
    return "";
}

std::string check_mirror_shape() {
    Scenario mirror;
    mirror.slab_L = 0.2;
    mirror.reflection = PerfectMirror{};
    mirror.method = Method::mirror_limit;
    double ref = density_mirror_limit(mirror, 0.5) / (0.25 * 0.25);
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
        double y = i / 51.0;
        double shape = y * y * (1.0 - y) * (1.0 - y);
        worst = std::max(worst,
                         std::abs(density_mirror_limit(mirror, y) / shape - ref) /
                             std::abs(ref));
    }
    return worst <= 1e-12 ? "" : describe("shape wobble", worst, 1e-12);
}

std::string check_identical_media_null() {
    Scenario s;
    s.slab_L = 0.3;
    s.reflection = MediaPair{ConstantReal{1.5}, ConstantReal{1.5}};
    for (double y : {0.25, 0.5, 0.75}) {
        if (std::abs(density_quadrature(s, y)) > 1e-15)
            return "quadrature density nonzero for identical media";
        if (std::abs(density_closed_form(s, y)) > 1e-15)
            return "closed-form density nonzero for identical media";
    }
    return "";
}

} // namespace

std::vector<SelfTestResult> run_selftest() {
    std::vector<SelfTestResult> results;
    auto add = [&](const char* name, std::string (*fn)()) {
        std::string detail;
        bool passed = false;
        try {
            detail = fn();
            passed = detail.empty();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        results.push_back({name, passed, detail});
    };

    add("fresnel identities", check_fresnel_identities);
    add("reflection inverse map", check_reflection_inverse);
    add("gauss-legendre rule sanity", check_quadrature_rule);
    add("tensor-product area", check_quadrature_area);
    add("greens continuity", check_greens_continuity);
    add("greens reciprocity", check_greens_reciprocity);
    add("helmholtz residual convergence", check_helmholtz_residual);
    add("quadrature vs closed form", check_quadrature_matches_closed_form);
    add("frequency cutoff", check_frequency_cutoff);
    add("mirror-limit shape", check_mirror_shape);
    add("identical media null", check_identical_media_null);
    return results;
}

} // namespace dce
