#include "dce/greens.hpp"

#include <cmath>
#include <stdexcept>

namespace dce {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

void require_positive_wavenumber(double k) {
    if (!(k > 0.0))
        throw std::domain_error("greens: wavenumber k must be positive");
}

} // namespace

GreensContext make_greens_context(std::complex<double> n1, std::complex<double> n2,
                                  double scale) {
    if (!(scale > 0.0))
        throw std::invalid_argument("greens: normalization scale must be positive");
    return {n1, n2, fresnel(n1, n2), scale};
}

std::complex<double> greens(const GreensContext& ctx, double k, double x, double x_prime) {
    require_positive_wavenumber(k);

    const auto& c = ctx.coefficients;
    // Outgoing-wave prefactor on the side of the observation medium.
    auto pref = [&](std::complex<double> n) { return I / (2.0 * ctx.scale * k * n); };

    if (x >= 0.0 && x_prime >= 0.0) {
        // Source and observer in medium 1: direct wave plus the interface
        // echo reflected with r_left.
        return pref(ctx.n1) * (c.r_left * std::exp(I * k * ctx.n1 * (x + x_prime)) +
                               std::exp(I * k * ctx.n1 * std::abs(x - x_prime)));
    }
    if (x >= 0.0 && x_prime < 0.0) {
        // Source in medium 2, observer in medium 1: transmitted wave.
        return pref(ctx.n2) * c.t_right * std::exp(I * k * (ctx.n1 * x - ctx.n2 * x_prime));
    }
    if (x < 0.0 && x_prime < 0.0) {
        // Both in medium 2: direct wave (|x - x'| separation) plus the echo
        // reflected with r_right.
        return pref(ctx.n2) * (c.r_right * std::exp(-I * k * ctx.n2 * (x + x_prime)) +
                               std::exp(I * k * ctx.n2 * std::abs(x - x_prime)));
    }
    // Source in medium 1, observer in medium 2: transmitted wave.
    return pref(ctx.n1) * c.t_left * std::exp(-I * k * (ctx.n2 * x - ctx.n1 * x_prime));
}

std::complex<double> helmholtz_residual(const GreensContext& ctx, double k, double x,
                                        double x_prime, double h) {
    require_positive_wavenumber(k);
    if (!(h > 0.0))
        throw std::invalid_argument("helmholtz_residual: step h must be positive");
    // The stencil must sample a region where G is smooth: strictly one side
    // of the interface and away from the source kink.
    if (!(x - h > 0.0) && !(x + h < 0.0))
        throw std::invalid_argument("helmholtz_residual: stencil crosses the interface");
    if (!(std::abs(x - x_prime) > 3.0 * h))
        throw std::invalid_argument("helmholtz_residual: stencil too close to the source");

    std::complex<double> n = (x > 0.0) ? ctx.n1 : ctx.n2;
    std::complex<double> eps = n * n;

    std::complex<double> g0 = greens(ctx, k, x, x_prime);
    std::complex<double> gp = greens(ctx, k, x + h, x_prime);
    std::complex<double> gm = greens(ctx, k, x - h, x_prime);
    return (gp - 2.0 * g0 + gm) / (h * h) + eps * (k * k) * g0;
}

} // namespace dce
