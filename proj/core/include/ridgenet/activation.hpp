#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ridgenet/types.hpp"

namespace ridgenet {

enum class ActivationKind {
    TruncatedPower,    // z_+^k; k=0 is the unit step, k=1 the ReLU
    Sigmoid,
    SigmoidDeriv,      // k-th derivative of the sigmoid, k >= 1
    Softplus,
    Tanh,
    GaussianRBF,       // G(z) = exp(-z^2/2), unnormalized
    GaussianDeriv,     // G^(k), k >= 1
    DiracDelta,        // Gaussian bump of width eps and unit mass
    DiracDerivApprox,  // k-th derivative of that bump
    Linear,
};

/// One activation of the zoo. The function evaluated is
/// base(dilation * z); dilation is 1 for every named activation and only
/// differs for derivatives that leave the named set (tanh' = 4 sigmoid'(2z)).
struct ActivationSpec {
    ActivationKind kind = ActivationKind::TruncatedPower;
    int order = 1;
    double width = 1.0;
    double dilation = 1.0;

    double operator()(double z) const { return eval(z); }
    double eval(double z) const;
    std::string name() const;

    bool operator==(const ActivationSpec&) const = default;
};

ActivationSpec truncated_power(int k);
ActivationSpec relu();
ActivationSpec step();
ActivationSpec sigmoid();
ActivationSpec sigmoid_derivative(int k);
ActivationSpec softplus();
ActivationSpec tanh_activation();
ActivationSpec gaussian_rbf();
ActivationSpec gaussian_derivative_activation(int k);
ActivationSpec dirac_delta(double width);
ActivationSpec dirac_derivative(int k, double width);
ActivationSpec linear();

/// Parses relu, step, tpow:k, sigmoid, dsigmoid:k, softplus, tanh, rbf,
/// drbf:k, delta, ddelta:k, linear. Mollified deltas take `delta_width`.
ActivationSpec parse_activation(const std::string& name, double delta_width = 0.1);

/// Distributional Fourier transform eta^(zeta) = regular(zeta) + sum_j c_j delta^(j)(zeta).
struct FourierData {
    /// Empty when the regular part vanishes identically.
    std::function<cplx(double)> regular;
    std::vector<cplx> delta_coeffs;
    /// Order of the singularity of `regular` at zeta = 0.
    int pole_order = 0;

    cplx regular_at(double zeta) const { return regular ? regular(zeta) : cplx{}; }
    bool regular_is_zero() const { return !regular; }
};

FourierData fourier_data(const ActivationSpec& spec);

struct ScaledActivation {
    ActivationSpec spec;
    double multiplier = 1.0;
};

/// eta' = multiplier * eval(spec).
ScaledActivation derivative_spec(const ActivationSpec& spec);

/// Kinds whose values decay like a Gaussian; outside |z| <= support_radius()
/// they are below 1e-28 of their peak and are skipped in the sums.
bool has_gaussian_decay(const ActivationSpec& spec);
double support_radius(const ActivationSpec& spec);

}  // namespace ridgenet
