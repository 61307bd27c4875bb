#pragma once
#include <complex>

namespace dce {

// Normal-incidence Fresnel coefficients of the single interface, for waves
// incident from medium 1 (x > 0, "left-moving" toward the interface) and from
// medium 2 (x < 0).  They satisfy the exact identities
//   r_right = -r_left,   1 + r_left = t_left,   1 + r_right = t_right,
//   t_left / n1 = t_right / n2.
struct InterfaceCoefficients {
    std::complex<double> r_left;
    std::complex<double> r_right;
    std::complex<double> t_left;
    std::complex<double> t_right;
};

// r_left = (n1 - n2)/(n1 + n2), t_left = 2 n1/(n1 + n2), and mirrored for the
// other side.  Throws a domain error when n1 + n2 = 0 (singular interface).
InterfaceCoefficients fresnel(std::complex<double> n1, std::complex<double> n2);

// Inverse of the r_left formula with n1 = 1: the index ratio n2/n1 that
// produces a requested real reflection in (-1, 0].  The perfect mirror
// r_left = -1 is deliberately excluded (it would need an infinite index and
// is handled as a separate analytic limit by the spectrum module).
double index_ratio_for_reflection(double r_left_target);

} // namespace dce
