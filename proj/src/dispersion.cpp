#include "dce/dispersion.hpp"

#include <cmath>
#include <stdexcept>

namespace dce {

namespace {

void require_positive_frequency(double y) {
    if (!(y > 0.0))
        throw std::domain_error("dispersion: frequency y must be positive");
}

} // namespace

std::complex<double> permittivity(const MediumModel& model, double y) {
    require_positive_frequency(y);
    return std::visit(
        [y](const auto& m) -> std::complex<double> {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, ConstantReal>) {
                return {m.eta * m.eta, 0.0};
            } else if constexpr (std::is_same_v<M, ConstantComplex>) {
                std::complex<double> n(m.eta, m.kappa);
                return n * n;
            } else {
                if (m.damping_y < 0.0)
                    throw std::invalid_argument(
                        "dispersion: Lorentz damping_y must be non-negative");
                std::complex<double> denom(m.resonance_y * m.resonance_y - y * y,
                                           -m.damping_y * y);
                return 1.0 + m.plasma_y * m.plasma_y / denom;
            }
        },
        model);
}

RefractiveIndex refractive_index(const MediumModel& model, double y) {
    require_positive_frequency(y);

    // Constant models return their parameters verbatim (no round trip
    // through the square root).
    if (const auto* cr = std::get_if<ConstantReal>(&model)) {
        if (!(cr->eta > 0.0))
            throw std::domain_error("dispersion: constant index eta must be positive");
        return {cr->eta, 0.0};
    }
    if (const auto* cc = std::get_if<ConstantComplex>(&model)) {
        if (!(cc->eta > 0.0) || cc->kappa < 0.0)
            throw std::domain_error(
                "dispersion: constant index requires eta > 0 and kappa >= 0");
        return {cc->eta, cc->kappa};
    }

    std::complex<double> eps = permittivity(model, y);
    // Principal square root already has Im >= 0 whenever Im eps >= 0 (passive
    // medium); for real negative eps it sits on the positive imaginary axis,
    // meaning a purely evanescent response with no propagating index.
    std::complex<double> n = std::sqrt(eps);
    if (!(n.real() > 0.0))
        throw std::domain_error(
            "dispersion: no propagating index at this frequency (stop band: "
            "Re sqrt(eps) <= 0)");
    if (n.imag() < 0.0)
        throw std::domain_error("dispersion: active medium (kappa < 0) not supported");
    return {n.real(), n.imag()};
}

bool frequency_independent(const MediumModel& model) {
    return !std::holds_alternative<LorentzOscillator>(model);
}

} // namespace dce
