#include "dce/interface_optics.hpp"

#include <stdexcept>

namespace dce {

InterfaceCoefficients fresnel(std::complex<double> n1, std::complex<double> n2) {
    std::complex<double> sum = n1 + n2;
    if (sum == std::complex<double>(0.0, 0.0))
        throw std::domain_error("fresnel: singular interface, n1 + n2 = 0");

    InterfaceCoefficients c;
    c.r_left = (n1 - n2) / sum;
    c.r_right = -c.r_left;
    c.t_left = 2.0 * n1 / sum;
    c.t_right = 2.0 * n2 / sum;
    return c;
}

double index_ratio_for_reflection(double r_left_target) {
    if (!(r_left_target > -1.0) || !(r_left_target <= 0.0))
        throw std::out_of_range(
            "index_ratio_for_reflection: target must lie in (-1, 0]; the perfect "
            "mirror -1 is a separate analytic limit, not an index pair");
    return (1.0 - r_left_target) / (1.0 + r_left_target);
}

} // namespace dce
