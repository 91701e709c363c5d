#include "ridgenet/experiments.hpp"

#include <cmath>

#include "ridgenet/analysis.hpp"

namespace ridgenet {

ParamGrid BoxSpec::make(std::size_t dim) const {
    std::vector<Grid1D> axes(dim, Grid1D::symmetric(a_range, a_step));
    return ParamGrid(std::move(axes), Grid1D::symmetric(b_range, b_step));
}

BoxSpec sine_box() { return {30.0, 0.1, 30.0, 0.1}; }
BoxSpec desk_box_2d() { return {75.0, 1.0, 30.0, 1.0}; }
Grid1D sine_axis(double x_step) { return Grid1D::symmetric(1.0, x_step); }

std::string to_string(Normalization n) {
    switch (n) {
        case Normalization::K: return "K";
        case Normalization::ReferenceAbs: return "reference_abs";
        case Normalization::LeastSquares: return "least_squares";
    }
    return "?";
}

namespace {

struct Normalized {
    std::vector<double> values;
    Normalization mode;
    cplx gain;
};

Normalized normalize(const std::vector<cplx>& raw, std::span<const double> target, const AdmissibilityReport& rep) {
    Normalized out{std::vector<double>(raw.size()), Normalization::K, {}};
    if (rep.classification == Classification::Admissible) {
        out.gain = 1.0 / rep.K;
        for (std::size_t i = 0; i < raw.size(); ++i) out.values[i] = (raw[i] / rep.K).real();
        return out;
    }
    if (rep.classification == Classification::Vanishing && rep.reference_abs > 0.0) {
        out.mode = Normalization::ReferenceAbs;
        out.gain = 1.0 / rep.reference_abs;
    } else {
        out.mode = Normalization::LeastSquares;
        out.gain = least_squares_gain(raw, target);
    }
    for (std::size_t i = 0; i < raw.size(); ++i) out.values[i] = (out.gain * raw[i]).real();
    return out;
}

}  // namespace

Reconstruction1D reconstruct_1d(const SampledSignal& target, const RidgeletSpec& psi, const ActivationSpec& eta,
                                const ParamGrid& grid, unsigned workers) {
    return reconstruct_1d(target, forward_1d(target, psi, grid, workers), psi, eta, workers);
}

Reconstruction1D reconstruct_1d(const SampledSignal& target, RidgeletCoefficients T, const RidgeletSpec& psi,
                                const ActivationSpec& eta, unsigned workers) {
    AdmissibilityReport rep = compute_K(psi, eta);
    const auto raw = evaluate_network_raw(network_from_coefficients(T, eta, 1.0), target.grid(), workers);
    auto n = normalize(raw, target.values(), rep);
    SampledSignal rec(target.grid(), std::move(n.values));
    const double rel = relative_l2_error(rec, target);
    const double mx = max_abs_error(rec.values(), target.values());
    return {std::move(T), std::move(rec), std::move(rep), n.mode, n.gain, rel, mx};
}

Reconstruction2D reconstruct_2d(const SampledImage& target, const RidgeletSpec& psi, const ActivationSpec& eta,
                                const ParamGrid& grid, unsigned workers) {
    return reconstruct_2d(target, forward_2d(target, psi, grid, workers), psi, eta, workers);
}

Reconstruction2D reconstruct_2d(const SampledImage& target, RidgeletCoefficients T, const RidgeletSpec& psi,
                                const ActivationSpec& eta, unsigned workers) {
    AdmissibilityReport rep = compute_K(psi, eta);
    const auto raw =
        evaluate_network_raw(network_from_coefficients(T, eta, 1.0), target.grid_x(), target.grid_y(), workers);
    auto n = normalize(raw, target.values(), rep);
    SampledImage rec(target.grid_x(), target.grid_y(), std::move(n.values));
    const double rel = relative_l2_error_interior(rec, target, 0.1);
    const double mx = max_abs_error(rec.values(), target.values());
    const double et = high_band_energy(target, 4.0 * pi);
    const double er = high_band_energy(rec, 4.0 * pi);
    const double ratio = et > 0.0 ? er / et : 0.0;
    return {std::move(T), std::move(rec), std::move(rep), n.mode, n.gain, rel, mx, ratio};
}

}  // namespace ridgenet
