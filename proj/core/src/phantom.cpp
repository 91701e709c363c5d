#include "ridgenet/phantom.hpp"

#include <cmath>
#include <stdexcept>

namespace ridgenet {

bool Ellipse::contains(double x, double y) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    const double dx = x - center[0], dy = y - center[1];
    const double u = (c * dx + s * dy) / semi_axes[0];
    const double v = (-s * dx + c * dy) / semi_axes[1];
    return u * u + v * v <= 1.0;
}

const std::vector<Ellipse>& shepp_logan_ellipses() {
    // Shepp & Logan, IEEE Trans. Nucl. Sci. 21 (1974), original intensities
    constexpr double deg = pi / 180.0;
    static const std::vector<Ellipse> table = {
        {2.00, {0.0, 0.0}, {0.69, 0.92}, 0.0},
        {-0.98, {0.0, -0.0184}, {0.6624, 0.874}, 0.0},
        {-0.02, {0.22, 0.0}, {0.11, 0.31}, -18.0 * deg},
        {-0.02, {-0.22, 0.0}, {0.16, 0.41}, 18.0 * deg},
        {0.01, {0.0, 0.35}, {0.21, 0.25}, 0.0},
        {0.01, {0.0, 0.1}, {0.046, 0.046}, 0.0},
        {0.01, {0.0, -0.1}, {0.046, 0.046}, 0.0},
        {0.01, {-0.08, -0.605}, {0.046, 0.023}, 0.0},
        {0.01, {0.0, -0.605}, {0.023, 0.023}, 0.0},
        {0.01, {0.06, -0.605}, {0.023, 0.046}, 0.0},
    };
    return table;
}

SampledSignal sine_signal(const Grid1D& grid) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = std::sin(two_pi * grid[i]);
    return SampledSignal(grid, std::move(v));
}

Grid1D unit_square_axis(std::size_t n) { return Grid1D::cell_centers(-1.0, 1.0, n); }

SampledImage shepp_logan(std::size_t n, std::size_t supersample) {
    if (n < 16) throw std::invalid_argument("phantom size must be at least 16");
    if (supersample < 1) throw std::invalid_argument("supersample factor must be >= 1");
    const Grid1D axis = unit_square_axis(n);
    SampledImage img(axis, axis);
    const double h = axis.step();
    const double sub = h / static_cast<double>(supersample);
    const auto& ellipses = shepp_logan_ellipses();
    const double weight = 1.0 / static_cast<double>(supersample * supersample);
    for (std::size_t iy = 0; iy < n; ++iy)
        for (std::size_t ix = 0; ix < n; ++ix) {
            double acc = 0.0;
            for (std::size_t sy = 0; sy < supersample; ++sy)
                for (std::size_t sx = 0; sx < supersample; ++sx) {
                    const double x = axis[ix] - 0.5 * h + (static_cast<double>(sx) + 0.5) * sub;
                    const double y = axis[iy] - 0.5 * h + (static_cast<double>(sy) + 0.5) * sub;
                    for (const Ellipse& e : ellipses)
                        if (e.contains(x, y)) acc += e.intensity;
                }
            img.at(ix, iy) = acc * weight;
        }
    return img;
}

SampledImage gaussian_blob(const Grid1D& gx, const Grid1D& gy, std::array<double, 2> center, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("blob width must be positive");
    SampledImage img(gx, gy);
    for (std::size_t iy = 0; iy < gy.size(); ++iy)
        for (std::size_t ix = 0; ix < gx.size(); ++ix) {
            const double dx = gx[ix] - center[0], dy = gy[iy] - center[1];
            img.at(ix, iy) = std::exp(-(dx * dx + dy * dy) / (2.0 * width * width));
        }
    return img;
}

SampledImage block_average(const SampledImage& f, std::size_t factor) {
    if (factor < 1 || f.nx() % factor || f.ny() % factor)
        throw std::invalid_argument("block size must divide the image size");
    const std::size_t nx = f.nx() / factor, ny = f.ny() / factor;
    const Grid1D gx(f.grid_x()[0] + 0.5 * (factor - 1) * f.grid_x().step(), f.grid_x().step() * factor, nx);
    const Grid1D gy(f.grid_y()[0] + 0.5 * (factor - 1) * f.grid_y().step(), f.grid_y().step() * factor, ny);
    SampledImage out(gx, gy);
    const double w = 1.0 / static_cast<double>(factor * factor);
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix) {
            double acc = 0.0;
            for (std::size_t j = 0; j < factor; ++j)
                for (std::size_t i = 0; i < factor; ++i) acc += f.at(ix * factor + i, iy * factor + j);
            out.at(ix, iy) = acc * w;
        }
    return out;
}

}  // namespace ridgenet
