#include "dce/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "dce/errors.hpp"
#include "dce/quadrature.hpp"

namespace dce {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

// x - sin(x) without cancellation: Taylor series (terms through x^15/15!)
// below |x| = 1, direct evaluation above.  Worst relative error at the
// switchover is ~2e-14, far below what the density assembly needs.
double x_minus_sin(double x) {
    if (std::abs(x) < 1.0) {
        const double x2 = x * x;
        return x * x2 / 6.0 *
               (1.0 -
                x2 / 20.0 *
                    (1.0 -
                     x2 / 42.0 *
                         (1.0 -
                          x2 / 72.0 *
                              (1.0 - x2 / 110.0 * (1.0 - x2 / 156.0 * (1.0 - x2 / 210.0))))));
    }
    return x - std::sin(x);
}

void check_interface(const SlabInterface& iface) {
    if (!(iface.n1 > 0.0) || !(iface.n2 > 0.0))
        throw std::domain_error("spectrum: indices must be real and positive");
    if (!(iface.r_left >= -1.0) || !(iface.r_left < 1.0))
        throw std::domain_error("spectrum: r_left must lie in [-1, 1)");
}

void check_frequency(double y) {
    if (!(y > 0.0))
        throw std::domain_error("spectrum: frequency y must be positive");
}

void check_slab(double slab_L) {
    if (!(slab_L > 0.0))
        throw std::domain_error("spectrum: slab_L must be positive");
}

// (n1 - n2)^2 (y - 1)^2 / (32 pi n1^2): the overall factor in front of the
// double integral (reduced units, the 1/2pi of the counting formula kept
// inside).
double prefactor(double y, double n1, double n2) {
    const double dn = n1 - n2;
    const double dy = y - 1.0;
    return dn * dn * dy * dy / (32.0 * std::numbers::pi * n1 * n1);
}

// Integrand regrouped in powers of eps = 1 + r_left.  The literal product
//   {r^2 e^{-i mu u} + 2 r cos(mu v) + e^{i mu u}} * 2 {cos(mu u) + r cos(mu v)}
// (u = a' - a, v = a' + a, mu = y n1) assembles O(eps) results from O(1)
// terms when r -> -1 and loses ~6 digits at the near-mirror parameters the
// bundled scenarios use.  Substituting r = eps - 1 and
// cos(mu u) - cos(mu v) = 2 sin(mu a) sin(mu a') gives the exactly equal form
//   F1 = 4(1 - eps) s s' + eps^2 cos(mu u) + i eps(2 - eps) sin(mu u)
//   F2 = 2 [2 s s' + eps cos(mu v)]
// whose every term is already proportional to the right power of eps.
std::complex<double> kernel_eps(double pref, double mu, double eps, double a, double a_prime) {
    const double ss = std::sin(mu * a) * std::sin(mu * a_prime);
    const double u = a_prime - a;
    const std::complex<double> f1(4.0 * (1.0 - eps) * ss + eps * eps * std::cos(mu * u),
                                  eps * (2.0 - eps) * std::sin(mu * u));
    const double f2 = 2.0 * (2.0 * ss + eps * std::cos(mu * (a_prime + a)));
    return pref * f2 * f1;
}

// Weighted one-dimensional moments of the slab profile w(a) at spatial
// frequency mu:
//   s2       = Int w(a) sin^2(mu a) da
//   sc       = Int w(a) sin(mu a) cos(mu a) da
//   i0_re_i2 = Int w(a) da * Re Int w(a) e^{2 i mu a} da
// These three numbers carry the whole double integral of the kernel.
struct SlabMoments {
    double s2;
    double sc;
    double i0_re_i2;
};

SlabMoments sharp_moments(double mu, double L) {
    SlabMoments m;
    m.s2 = x_minus_sin(2.0 * mu * L) / (4.0 * mu);
    const double s = std::sin(mu * L);
    m.sc = s * s / (2.0 * mu);
    m.i0_re_i2 = L * std::sin(2.0 * mu * L) / (2.0 * mu);
    return m;
}

// Same moments for w(a) = e^{-a/L} truncated at a = 8L (weight ~3e-4 left at
// the cut).  Elementary damped-trigonometric antiderivatives; the s2
// numerator is grouped so nothing cancels as mu -> 0.
SlabMoments exponential_moments(double mu, double L) {
    const double p = 1.0 / L;
    const double e8 = std::exp(-8.0);
    const double phi = 16.0 * mu * L;
    const double den = p * p + 4.0 * mu * mu;
    const double sphi = std::sin(phi);
    const double cphi = std::cos(phi);
    const double shalf = std::sin(8.0 * mu * L);

    SlabMoments m;
    const double num = -2.0 * p * p * e8 * shalf * shalf + 4.0 * mu * mu * (1.0 - e8) -
                       2.0 * mu * p * e8 * sphi;
    m.s2 = num / (2.0 * p * den);
    m.sc = 0.5 * (2.0 * mu * (1.0 - e8 * cphi) - p * e8 * sphi) / den;
    const double i0 = (1.0 - e8) / p;
    const double re_i2 = (p * (1.0 - e8 * cphi) + 2.0 * mu * e8 * sphi) / den;
    m.i0_re_i2 = i0 * re_i2;
    return m;
}

// Real part of the double integral, assembled from the moments with the same
// eps-grouping as the kernel:
//   B = 16 s2^2 + eps(2 - eps)(4 sc^2 - 12 s2^2) + 2 eps^3 i0_re_i2.
double assemble_density(double pref, double eps, const SlabMoments& m) {
    const double b = 16.0 * m.s2 * m.s2 +
                     eps * (2.0 - eps) * (4.0 * m.sc * m.sc - 12.0 * m.s2 * m.s2) +
                     2.0 * eps * eps * eps * m.i0_re_i2;
    return pref * b;
}

std::string format_y(double y) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", y);
    return buf;
}

} // namespace

SlabInterface SlabInterface::from_reflection(double r_left) {
    if (!(r_left > -1.0) || !(r_left <= 0.0))
        throw std::domain_error("spectrum: bare reflection must lie in (-1, 0]");
    // eps1 = 1 + r_left is exact here: for r in [-1, -0.5] the sum is exact
    // by the Sterbenz lemma, and it is the quantity the near-mirror density
    // actually depends on.
    return {1.0, (1.0 - r_left) / (1.0 + r_left), r_left, 1.0 + r_left};
}

SlabInterface SlabInterface::from_indices(double n1, double n2) {
    if (!(n1 > 0.0) || !(n2 > 0.0))
        throw std::domain_error("spectrum: indices must be positive");
    // r and eps1 both straight from the primaries, so neither loses accuracy
    // when n2 >> n1.
    return {n1, n2, (n1 - n2) / (n1 + n2), 2.0 * n1 / (n1 + n2)};
}

std::complex<double> commutator_kernel_rr(std::complex<double> n1, double y, double a,
                                          double a_prime) {
    check_frequency(y);
    return std::exp(I * y * n1 * (a - a_prime));
}

std::complex<double> commutator_kernel_rl(std::complex<double> r_left, std::complex<double> n1,
                                          double y, double a, double a_prime) {
    check_frequency(y);
    return r_left * std::exp(I * y * n1 * (a + a_prime));
}

std::complex<double> kernel(double y, double n1, double n2, double r_left, double a,
                            double a_prime) {
    check_frequency(y);
    if (!(a >= 0.0) || !(a_prime >= 0.0))
        throw std::domain_error("spectrum: slab coordinates must be non-negative");
    SlabInterface iface{n1, n2, r_left, 1.0 + r_left};
    check_interface(iface);
    if (y >= 1.0)
        return 0.0;
    return kernel_eps(prefactor(y, n1, n2), y * n1, iface.eps1, a, a_prime);
}

double slab_density_quadrature(const SlabInterface& iface, double slab_L, SlabProfile profile,
                               int quad_order, double y, double* imag_residual) {
    check_interface(iface);
    check_slab(slab_L);
    check_frequency(y);
    QuadratureRule rule = gauss_legendre(quad_order);

    if (imag_residual)
        *imag_residual = 0.0;
    if (y >= 1.0)
        return 0.0;

    const double pref = prefactor(y, iface.n1, iface.n2);
    const double mu = y * iface.n1;
    const double eps = iface.eps1;

    std::complex<double> integral;
    if (profile == SlabProfile::sharp) {
        integral = integrate_2d(
            [&](double a, double ap) { return kernel_eps(pref, mu, eps, a, ap); }, slab_L,
            rule);
    } else {
        const double inv_L = 1.0 / slab_L;
        integral = integrate_2d(
            [&](double a, double ap) {
                return kernel_eps(pref, mu, eps, a, ap) * std::exp(-(a + ap) * inv_L);
            },
            8.0 * slab_L, rule);
    }
    if (imag_residual)
        *imag_residual = std::abs(integral.imag());
    return integral.real();
}

double slab_density_closed_form(const SlabInterface& iface, double slab_L, SlabProfile profile,
                                double y) {
    check_interface(iface);
    check_slab(slab_L);
    check_frequency(y);
    if (y >= 1.0)
        return 0.0;

    const double mu = y * iface.n1;
    SlabMoments m = (profile == SlabProfile::sharp) ? sharp_moments(mu, slab_L)
                                                    : exponential_moments(mu, slab_L);
    return assemble_density(prefactor(y, iface.n1, iface.n2), iface.eps1, m);
}

double small_slab_expansion_density(double delta_n, double r_left, double slab_L, double y) {
    check_slab(slab_L);
    check_frequency(y);
    if (y >= 1.0)
        return 0.0;
    const double dy = y - 1.0;
    const double one_minus_r = 1.0 - r_left;
    const double ly = slab_L * y;
    const double braces = one_minus_r * one_minus_r * one_minus_r -
                          2.0 * r_left * r_left * ly * ly;
    return delta_n * delta_n * dy * dy / (32.0 * std::numbers::pi) * braces;
}

double mirror_limit_density(double delta_n, double slab_L, double y) {
    check_slab(slab_L);
    check_frequency(y);
    if (y >= 1.0)
        return 0.0;
    const double dy = y - 1.0;
    return -delta_n * delta_n * slab_L * slab_L * y * y * dy * dy /
           (16.0 * std::numbers::pi);
}

namespace {

// Resolve the scenario's reflection specification into concrete interface
// numbers at frequency y.  require_constant enforces the closed-form /
// expansion restriction to frequency-independent media.
SlabInterface resolve_interface(const Scenario& scenario, double y, bool require_constant,
                                const char* method_name) {
    if (const auto* fixed = std::get_if<FixedReflection>(&scenario.reflection))
        return SlabInterface::from_reflection(fixed->r_left);

    if (const auto* media = std::get_if<MediaPair>(&scenario.reflection)) {
        if (require_constant && (!frequency_independent(media->medium1) ||
                                 !frequency_independent(media->medium2)))
            throw unsupported_regime_error(
                std::string(method_name) +
                " requires frequency-independent media; got a dispersive model");
        RefractiveIndex n1 = refractive_index(media->medium1, y);
        RefractiveIndex n2 = refractive_index(media->medium2, y);
        if (n1.kappa != 0.0 || n2.kappa != 0.0)
            throw unsupported_regime_error(
                std::string(method_name) +
                " is derived in the lossless limit; media must have kappa = 0");
        return SlabInterface::from_indices(n1.eta, n2.eta);
    }

    throw std::invalid_argument(std::string(method_name) +
                                " requires finite indices; a perfect mirror is only "
                                "meaningful for the mirror_limit method");
}

} // namespace

double density_quadrature(const Scenario& scenario, double y, double* imag_residual) {
    check_frequency(y);
    if (imag_residual)
        *imag_residual = 0.0;
    if (y >= 1.0)
        return 0.0;
    SlabInterface iface = resolve_interface(scenario, y, false, "density_quadrature");
    return slab_density_quadrature(iface, scenario.slab_L, scenario.profile,
                                   scenario.quad_order, y, imag_residual);
}

double density_closed_form(const Scenario& scenario, double y) {
    check_frequency(y);
    if (y >= 1.0)
        return 0.0;
    SlabInterface iface = resolve_interface(scenario, y, true, "density_closed_form");
    return slab_density_closed_form(iface, scenario.slab_L, scenario.profile, y);
}

double density_expansion(const Scenario& scenario, double y) {
    check_frequency(y);
    if (y >= 1.0)
        return 0.0;
    SlabInterface iface = resolve_interface(scenario, y, true, "density_expansion");
    return small_slab_expansion_density(iface.n2 - iface.n1, iface.r_left, scenario.slab_L, y);
}

double density_mirror_limit(const Scenario& scenario, double y) {
    check_frequency(y);
    if (y >= 1.0)
        return 0.0;
    if (!std::holds_alternative<PerfectMirror>(scenario.reflection))
        throw std::invalid_argument(
            "density_mirror_limit requires a perfect-mirror scenario");
    // Reduced units fix the otherwise-symbolic index-step prefactor to 1;
    // only the spectral shape is physical in this limit.
    return mirror_limit_density(1.0, scenario.slab_L, y);
}

void validate_scenario(const Scenario& scenario) {
    if (!(scenario.slab_L > 0.0))
        throw std::invalid_argument("scenario: slab_L must be positive");
    if (scenario.quad_order < 1 || scenario.quad_order > 256)
        throw std::invalid_argument("scenario: quad_order must be between 1 and 256");

    double prev = 0.0;
    for (double y : scenario.y_grid) {
        if (!(y > 0.0) || !(y <= 1.0))
            throw std::invalid_argument("scenario: y_grid values must lie in (0, 1]");
        if (!(y > prev))
            throw std::invalid_argument("scenario: y_grid must be strictly increasing");
        prev = y;
    }

    const bool mirror = std::holds_alternative<PerfectMirror>(scenario.reflection);
    if (scenario.method == Method::mirror_limit && !mirror)
        throw std::invalid_argument(
            "scenario: method mirror_limit requires reflection = mirror");
    if (scenario.method != Method::mirror_limit && mirror)
        throw std::invalid_argument(
            "scenario: reflection = mirror is only usable with method mirror_limit");

    if (const auto* fixed = std::get_if<FixedReflection>(&scenario.reflection)) {
        if (!(fixed->r_left > -1.0) || !(fixed->r_left <= 0.0))
            throw std::invalid_argument("scenario: reflection must lie in (-1, 0]");
    }

    if (scenario.method == Method::closed_form || scenario.method == Method::expansion) {
        if (const auto* media = std::get_if<MediaPair>(&scenario.reflection)) {
            if (!frequency_independent(media->medium1) ||
                !frequency_independent(media->medium2))
                throw unsupported_regime_error(
                    "scenario: closed_form/expansion methods require "
                    "frequency-independent media");
        }
    }
}

SpectrumResult run_scenario(const Scenario& scenario) {
    validate_scenario(scenario);

    SpectrumResult result;
    result.method = scenario.method;
    result.scenario_echo = scenario;
    result.points.reserve(scenario.y_grid.size());

    for (double y : scenario.y_grid) {
        try {
            double density = 0.0;
            double residual = 0.0;
            switch (scenario.method) {
            case Method::quadrature:
                density = density_quadrature(scenario, y, &residual);
                break;
            case Method::closed_form:
                density = density_closed_form(scenario, y);
                break;
            case Method::expansion:
                density = density_expansion(scenario, y);
                break;
            case Method::mirror_limit:
                density = density_mirror_limit(scenario, y);
                break;
            }
            if (!std::isfinite(density))
                throw std::runtime_error("non-finite density");
            result.points.push_back({y, density});
            result.max_imag_residual = std::max(result.max_imag_residual, residual);
        } catch (const unsupported_regime_error& e) {
            throw unsupported_regime_error("at y = " + format_y(y) + ": " + e.what());
        } catch (const std::domain_error& e) {
            throw std::domain_error("at y = " + format_y(y) + ": " + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error("at y = " + format_y(y) + ": " + e.what());
        }
    }
    return result;
}

} // namespace dce
