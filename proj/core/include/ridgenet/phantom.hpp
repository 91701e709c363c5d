#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ridgenet/grid.hpp"

namespace ridgenet {

struct Ellipse {
    double intensity;
    std::array<double, 2> center;
    std::array<double, 2> semi_axes;
    double rotation;  // radians

    bool contains(double x, double y) const;
};

/// The ten ellipses of the original Shepp-Logan head phantom.
const std::vector<Ellipse>& shepp_logan_ellipses();

/// sin(2 pi x) on the grid.
SampledSignal sine_signal(const Grid1D& grid);

/// n x n pixel-center grid on [-1, 1]^2.
Grid1D unit_square_axis(std::size_t n);

/// n x n phantom on [-1, 1]^2 with raw (unclamped) intensities. Each pixel
/// is the mean over supersample x supersample points inside it.
SampledImage shepp_logan(std::size_t n, std::size_t supersample = 8);

/// exp(-|x - c|^2 / (2 w^2)).
SampledImage gaussian_blob(const Grid1D& gx, const Grid1D& gy, std::array<double, 2> center, double width);

/// Mean over factor x factor blocks.
SampledImage block_average(const SampledImage& f, std::size_t factor);

}  // namespace ridgenet
