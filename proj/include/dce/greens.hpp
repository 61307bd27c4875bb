#pragma once
#include <complex>

#include "dce/interface_optics.hpp"

namespace dce {

// Everything needed to evaluate the two-medium Green's function at one
// frequency: the indices on the two sides (medium 1 occupies x > 0, medium 2
// occupies x < 0), their Fresnel coefficients, and the overall normalization
// `scale` (the product of vacuum permittivity, light speed and mode area in
// the chosen unit system; 1 in reduced units).
struct GreensContext {
    std::complex<double> n1;
    std::complex<double> n2;
    InterfaceCoefficients coefficients;
    double scale;
};

// Builds a context with coefficients = fresnel(n1, n2), keeping the pair
// consistent by construction.  scale must be positive.
GreensContext make_greens_context(std::complex<double> n1, std::complex<double> n2,
                                  double scale = 1.0);

// G(x, x', k): outgoing-wave Green's function of the 1D Helmholtz operator
//   d^2/dx^2 + eps(x) k^2
// with a point source at x', eps(x) = n1^2 for x > 0 and n2^2 for x < 0.
// Four branches:
//   x >= 0, x' >= 0 :  i/(2 s k n1) [ r_left  e^{i k n1 (x + x')} + e^{i k n1 |x - x'|} ]
//   x >= 0, x' <  0 :  i/(2 s k n2)   t_right e^{i k (n1 x - n2 x')}
//   x <  0, x' <  0 :  i/(2 s k n2) [ r_right e^{-i k n2 (x + x')} + e^{i k n2 |x - x'|} ]
//   x <  0, x' >= 0 :  i/(2 s k n1)   t_left  e^{-i k (n2 x - n1 x')}
// with s = scale.  Continuous at the interface and at the source, and
// symmetric under x <-> x'.  Requires k > 0.
std::complex<double> greens(const GreensContext& ctx, double k, double x, double x_prime);

// Centered-second-difference residual of the defining equation,
//   [G(x+h) - 2 G(x) + G(x-h)] / h^2 + eps(x) k^2 G(x),
// which tends to zero at second order in h away from the source point.
// Testing helper.  The stencil must stay strictly on one side of the
// interface (|x| > h) and away from the source (|x - x'| > 3h); violations
// throw an invalid-argument error.
std::complex<double> helmholtz_residual(const GreensContext& ctx, double k, double x,
                                        double x_prime, double h);

} // namespace dce
