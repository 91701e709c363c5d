#pragma once

#include <string>

#include "ridgenet/activation.hpp"
#include "ridgenet/admissibility.hpp"
#include "ridgenet/grid.hpp"
#include "ridgenet/ridgelet.hpp"

namespace ridgenet {

/// Symmetric boxes [-range, range] for each a-axis and for b.
struct BoxSpec {
    double a_range = 30.0;
    double a_step = 0.1;
    double b_range = 30.0;
    double b_step = 0.1;

    ParamGrid make(std::size_t dim) const;
};

/// Sine experiment defaults: x in [-1, 1] step 0.01, (a, b) in [-30, 30]^2 step 0.1.
BoxSpec sine_box();
/// Desk-scale 2D defaults for an n x n image: a in [-75, 75]^2 step 1, b in [-30, 30] step 1.
BoxSpec desk_box_2d();
Grid1D sine_axis(double x_step = 0.01);

/// How the raw sum sum T eta dadb/|a| is turned into a reconstruction.
enum class Normalization {
    K,              // admissible: divide by K
    ReferenceAbs,   // vanishing K: divide by the absolute-value integral
    LeastSquares,   // divergent K (or no reference): best complex gain against the target
};
std::string to_string(Normalization n);

struct Reconstruction1D {
    RidgeletCoefficients coefficients;
    SampledSignal reconstruction;
    AdmissibilityReport report;
    Normalization normalization = Normalization::K;
    cplx gain{};  // reconstruction = Re(gain * raw)
    double relative_l2 = 0.0;
    double max_abs_err = 0.0;
};

/// forward_1d then the dual sum on the target's grid. Non-admissible pairs
/// still produce a reconstruction so failure modes can be inspected.
Reconstruction1D reconstruct_1d(const SampledSignal& target, const RidgeletSpec& psi, const ActivationSpec& eta,
                                const ParamGrid& grid, unsigned workers = 0);
/// Same, reusing coefficients already computed for (target, psi).
Reconstruction1D reconstruct_1d(const SampledSignal& target, RidgeletCoefficients T, const RidgeletSpec& psi,
                                const ActivationSpec& eta, unsigned workers = 0);

struct Reconstruction2D {
    RidgeletCoefficients coefficients;
    SampledImage reconstruction;
    AdmissibilityReport report;
    Normalization normalization = Normalization::K;
    cplx gain{};
    double relative_l2 = 0.0;           // interior, 10% border excluded
    double max_abs_err = 0.0;
    double high_band_ratio = 0.0;       // |omega| > 4 pi, reconstruction over target
};

Reconstruction2D reconstruct_2d(const SampledImage& target, const RidgeletSpec& psi, const ActivationSpec& eta,
                                const ParamGrid& grid, unsigned workers = 0);
Reconstruction2D reconstruct_2d(const SampledImage& target, RidgeletCoefficients T, const RidgeletSpec& psi,
                                const ActivationSpec& eta, unsigned workers = 0);

}  // namespace ridgenet
