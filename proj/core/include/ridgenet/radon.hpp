#pragma once

#include <vector>

#include "ridgenet/activation.hpp"
#include "ridgenet/admissibility.hpp"
#include "ridgenet/grid.hpp"

namespace ridgenet {

/// Rf(u, p) sampled on angles x offsets, row-major with angle as the slow index.
struct Sinogram {
    Grid1D angles;
    Grid1D offsets;
    std::vector<double> values;
    /// Set when nonzero pixels reach beyond the offset range.
    bool coverage_warning = false;

    double at(std::size_t ia, std::size_t ip) const { return values[ia * offsets.size() + ip]; }
    double& at(std::size_t ia, std::size_t ip) { return values[ia * offsets.size() + ip]; }
};

/// n angles uniformly over [0, pi).
Grid1D half_circle_angles(std::size_t n = 180);
/// Symmetric offsets at pixel pitch covering the image diagonal.
Grid1D diagonal_offsets(const SampledImage& f);

/// Line integrals sampled every half pixel along each line, bilinear
/// interpolation with zero extension outside the image.
Sinogram radon_2d(const SampledImage& f, const Grid1D& angles, const Grid1D& offsets, unsigned workers = 0);

/// R*Phi(x) = integral over the unit circle of Phi(u, u.x), linear interpolation
/// in p. Angles covering [0, pi) are mirrored to the full circle by evenness.
SampledImage dual_radon_2d(const Sinogram& s, const Grid1D& gx, const Grid1D& gy, unsigned workers = 0);

struct FbpOptions {
    std::size_t angles = 180;
    std::size_t pad_factor = 4;
};

/// Re[R* Lambda^1 R f / (4 pi i)], Lambda^1 the multiplier i|omega| per angle.
SampledImage filtered_backprojection(const SampledImage& f, const FbpOptions& opt = {}, unsigned workers = 0);

struct RidgeletFbpComparison {
    SampledImage ridgelet;
    SampledImage fbp;
    double deviation = 0.0;  // interior relative L2 of ridgelet vs fbp
    AdmissibilityReport report;
};

RidgeletFbpComparison ridgelet_vs_fbp(const SampledImage& f, const RidgeletSpec& psi, const ActivationSpec& eta,
                                      const ParamGrid& grid, unsigned workers = 0);

}  // namespace ridgenet
