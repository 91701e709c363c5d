#pragma once

#include <span>

#include "ridgenet/grid.hpp"
#include "ridgenet/types.hpp"

namespace ridgenet {

/// Energy of the plain DFT of the samples over bins with |omega| > cutoff.
double high_band_energy(std::span<const double> values, double step, double cutoff);
/// 2D version with the radial frequency |omega|.
double high_band_energy(const SampledImage& img, double cutoff);

/// Cosine similarity of the DFT bins with |omega| <= cutoff.
double low_band_correlation(std::span<const double> a, std::span<const double> b, double step, double cutoff);

struct LowPassReport {
    double high_band_ratio = 0.0;  // E_hi(reconstruction) / E_hi(target)
    double low_band_correlation = 0.0;
};

/// High band |omega| > 4 pi, low band |omega| <= 2 pi.
LowPassReport low_pass_report(const SampledSignal& reconstruction, const SampledSignal& target);

/// Complex gain s minimizing || Re(s g) - f ||_2; zero when g vanishes.
cplx least_squares_gain(std::span<const cplx> g, std::span<const double> f);

}  // namespace ridgenet
