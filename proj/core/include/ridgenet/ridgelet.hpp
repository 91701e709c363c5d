#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ridgenet/activation.hpp"
#include "ridgenet/admissibility.hpp"
#include "ridgenet/grid.hpp"
#include "ridgenet/types.hpp"

namespace ridgenet {

/// T(a_i, b_j) = sum_n f(x_n) conj(psi(a_i x_n - b_j)) |a_i| dx.
RidgeletCoefficients forward_1d(const SampledSignal& f, const RidgeletSpec& psi, const ParamGrid& grid,
                                unsigned workers = 0);

/// Same field computed through the Fourier slice identity
/// T(a, b) = |a|/(2 pi) int f^(a zeta) conj(psi^(zeta)) exp(i zeta b) d zeta,
/// with f^ the discrete-time Fourier transform of the samples.
RidgeletCoefficients forward_fourier_slice(const SampledSignal& f, const RidgeletSpec& psi, const ParamGrid& grid,
                                           unsigned workers = 0);

/// T(a, b) = sum_pixels f(x) conj(psi(a.x - b)) |a| dx dy.
RidgeletCoefficients forward_2d(const SampledImage& f, const RidgeletSpec& psi, const ParamGrid& grid,
                                unsigned workers = 0);

/// g(x) = c_1 eta(a_1 . x - b_1) + ... ; evaluation returns Re[g(x) / K].
struct NetworkDescription {
    int m = 1;
    ActivationSpec eta;
    cplx K{1.0, 0.0};
    std::vector<double> a;  // size() * m, unit-major
    std::vector<double> b;
    std::vector<cplx> c;

    std::size_t size() const noexcept { return b.size(); }
    void add_unit(std::span<const double> a_j, double b_j, cplx c_j);
    /// Throws invalid_argument on non-finite parameters or an empty network.
    void validate() const;
};

/// Units c = T(a, b) da db / |a| for every cell with |a| >= a_min, in the
/// grid's lexicographic order.
NetworkDescription network_from_coefficients(const RidgeletCoefficients& T, const ActivationSpec& eta, cplx K);

/// Complex sums g(x) (without the 1/K) at 1D points or image pixels.
std::vector<cplx> evaluate_network_raw(const NetworkDescription& net, const Grid1D& x, unsigned workers = 0);
std::vector<cplx> evaluate_network_raw(const NetworkDescription& net, const Grid1D& gx, const Grid1D& gy,
                                       unsigned workers = 0);

SampledSignal evaluate_network(const NetworkDescription& net, const Grid1D& x, unsigned workers = 0);
SampledImage evaluate_network(const NetworkDescription& net, const Grid1D& gx, const Grid1D& gy,
                              unsigned workers = 0);
/// Single point, length m.
double evaluate_network(const NetworkDescription& net, std::span<const double> x);

/// Re[(1/K) sum T(a,b) eta(a.x - b) da db / |a|] over cells with |a| >= a_min.
SampledSignal dual_transform(const RidgeletCoefficients& T, const ActivationSpec& eta, cplx K, const Grid1D& x,
                             unsigned workers = 0);
SampledImage dual_transform(const RidgeletCoefficients& T, const ActivationSpec& eta, cplx K, const Grid1D& gx,
                            const Grid1D& gy, unsigned workers = 0);

struct SynthesisResult {
    NetworkDescription network;
    RidgeletSpec psi;
    AdmissibilityReport report;
};

/// Discretized ridgelet transform turned into a network. Without `psi` the
/// ridgelet comes from construct_admissible; a non-admissible pair throws
/// ConstructionFailed.
SynthesisResult synthesize(const SampledSignal& f, const ActivationSpec& eta, const ParamGrid& grid,
                           std::optional<RidgeletSpec> psi = std::nullopt, unsigned workers = 0);
SynthesisResult synthesize(const SampledImage& f, const ActivationSpec& eta, const ParamGrid& grid,
                           std::optional<RidgeletSpec> psi = std::nullopt, unsigned workers = 0);
NetworkDescription synthesize_network(const SampledSignal& f, const ActivationSpec& eta, const ParamGrid& grid,
                                      std::optional<RidgeletSpec> psi = std::nullopt, unsigned workers = 0);
NetworkDescription synthesize_network(const SampledImage& f, const ActivationSpec& eta, const ParamGrid& grid,
                                      std::optional<RidgeletSpec> psi = std::nullopt, unsigned workers = 0);

struct PlancherelResult {
    double lhs = 0.0;  // sum |T|^2 da db / |a|^2, divided by K_{psi,psi}
    double rhs = 0.0;  // sum f^2 dx
};

/// Squared norms on both sides of the Plancherel identity for psi / sqrt(K_{psi,psi}).
/// The parameter measure da db / |a|^2 is the Jacobian image of the polar
/// measure alpha^-m d alpha d beta du under a = u/alpha, b = beta/alpha.
PlancherelResult plancherel_check(const SampledSignal& f, const RidgeletSpec& psi, const ParamGrid& grid,
                                  unsigned workers = 0);

}  // namespace ridgenet
