#pragma once
#include <complex>
#include <functional>
#include <vector>

namespace dce {

// Gauss-Legendre rule on [-1, 1]: nodes strictly increasing and symmetric
// about 0, weights positive, symmetric and summing to 2.  Exact for
// polynomials of degree <= 2*order - 1.
struct QuadratureRule {
    int order;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Computes the rule by Newton iteration on the Legendre recurrence
// (tolerance 1e-15 on the node update).  Supported orders: 1..256; anything
// else throws an invalid-argument error.
QuadratureRule gauss_legendre(int order);

// Tensor-product approximation of the double integral of f over the square
// [0, L] x [0, L], nodes mapped affinely from [-1, 1].  Deterministic
// left-to-right accumulation.  Requires L > 0.
std::complex<double> integrate_2d(const std::function<std::complex<double>(double, double)>& f,
                                  double L, const QuadratureRule& rule);

} // namespace dce
