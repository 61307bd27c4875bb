#include "dce/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dce {

namespace {

// Legendre polynomial P_n and its derivative at x, by the three-term
// recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
struct LegendreValue {
    double p;      // P_n(x)
    double dp;     // P_n'(x)
};

LegendreValue legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    // P_n' from P_n and P_{n-1}; guarded because the Newton nodes never reach
    // x = +-1 where the denominator vanishes.
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

} // namespace

QuadratureRule gauss_legendre(int order) {
    if (order < 1 || order > 256)
        throw std::invalid_argument("gauss_legendre: order must be between 1 and 256");

    QuadratureRule rule;
    rule.order = order;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    // Compute the positive half and mirror it, so symmetry of nodes and
    // weights is exact by construction.
    int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess for the i-th largest root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));

        double dx = 1.0;
        for (int iter = 0; iter < 100 && std::abs(dx) > 1e-15; ++iter) {
            LegendreValue v = legendre(order, x);
            dx = -v.p / v.dp;
            x += dx;
        }
        if (order % 2 == 1 && i == half - 1)
            x = 0.0; // central root of an odd-order rule is exactly 0

        double dp = legendre(order, x).dp;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);

        // Negative half first: for an odd order both indices are the middle
        // element, and the second store keeps it at +0.0 rather than -0.0.
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
        rule.weights[i] = w;
    }
    return rule;
}

std::complex<double> integrate_2d(const std::function<std::complex<double>(double, double)>& f,
                                  double L, const QuadratureRule& rule) {
    if (!(L > 0.0))
        throw std::domain_error("integrate_2d: integration length L must be positive");

    const double half = 0.5 * L;
    std::complex<double> sum = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        const double a = half * (rule.nodes[i] + 1.0);
        const double wi = rule.weights[i];
        std::complex<double> row = 0.0;
        for (int j = 0; j < rule.order; ++j) {
            const double a_prime = half * (rule.nodes[j] + 1.0);
            row += rule.weights[j] * f(a, a_prime);
        }
        sum += wi * row;
    }
    return sum * (half * half);
}

} // namespace dce
