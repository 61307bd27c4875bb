#pragma once
#include <complex>
#include <variant>

namespace dce {

// Complex refractive index n = eta + i*kappa of a passive medium at one
// frequency.  eta > 0, kappa >= 0.
struct RefractiveIndex {
    double eta;
    double kappa;

    std::complex<double> value() const { return {eta, kappa}; }
};

// Frequency-independent real index.
struct ConstantReal {
    double eta;

    friend bool operator==(const ConstantReal&, const ConstantReal&) = default;
};

// Frequency-independent complex index (eta + i*kappa).
struct ConstantComplex {
    double eta;
    double kappa;

    friend bool operator==(const ConstantComplex&, const ConstantComplex&) = default;
};

// Single-resonance Lorentz oscillator,
//   eps(y) = 1 + plasma_y^2 / (resonance_y^2 - y^2 - i*damping_y*y),
// with all parameters expressed in units of the mechanical frequency, so the
// model is a function of the dimensionless frequency y alone.
struct LorentzOscillator {
    double resonance_y;
    double plasma_y;
    double damping_y;

    friend bool operator==(const LorentzOscillator&, const LorentzOscillator&) = default;
};

using MediumModel = std::variant<ConstantReal, ConstantComplex, LorentzOscillator>;

// Complex permittivity eps(y) = n(y)^2.  Requires y > 0.
std::complex<double> permittivity(const MediumModel& model, double y);

// Refractive index n(y) = sqrt(eps(y)), principal branch with Im n >= 0 so
// waves decay in their propagation direction.  Requires y > 0; throws a
// domain error when no passive index exists (eta would be <= 0, which happens
// inside an undamped Lorentz stop band where eps is real and negative).
RefractiveIndex refractive_index(const MediumModel& model, double y);

// True for the constant-index variants, i.e. models whose value does not
// depend on y.  The closed-form spectrum requires such media.
bool frequency_independent(const MediumModel& model);

} // namespace dce
