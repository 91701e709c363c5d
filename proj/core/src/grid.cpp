#include "ridgenet/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ridgenet {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

double sum_squares(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

}  // namespace

Grid1D::Grid1D(double start, double step, std::size_t count) : start_(start), step_(step), count_(count) {
    require_finite(start, "grid start");
    require_finite(step, "grid step");
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (count < 1) throw std::invalid_argument("grid needs at least one point");
}

Grid1D Grid1D::linspace(double start, double stop, double step) {
    require_finite(start, "grid start");
    require_finite(stop, "grid stop");
    require_finite(step, "grid step");
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (stop < start) throw std::invalid_argument("grid stop lies before start");
    // relative slack absorbs (stop-start)/step landing just under an integer
    const double span = (stop - start) / step;
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9 * std::max(1.0, span))) + 1;
    return Grid1D(start, step, n);
}

Grid1D Grid1D::symmetric(double half_width, double step) {
    if (!(half_width >= 0.0)) throw std::invalid_argument("half width must be non-negative");
    return linspace(-half_width, half_width, step);
}

Grid1D Grid1D::cell_centers(double lo, double hi, std::size_t n) {
    if (n < 1) throw std::invalid_argument("need at least one cell");
    if (!(hi > lo)) throw std::invalid_argument("empty interval");
    const double h = (hi - lo) / static_cast<double>(n);
    return Grid1D(lo + 0.5 * h, h, n);
}

std::vector<double> Grid1D::points() const {
    std::vector<double> p(count_);
    for (std::size_t i = 0; i < count_; ++i) p[i] = (*this)[i];
    return p;
}

SampledSignal::SampledSignal(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("signal length " + std::to_string(values_.size()) +
                                    " does not match grid size " + std::to_string(grid_.size()));
}

SampledSignal::SampledSignal(Grid1D grid) : grid_(grid), values_(grid.size(), 0.0) {}

SampledImage::SampledImage(Grid1D grid_x, Grid1D grid_y, std::vector<double> values)
    : gx_(grid_x), gy_(grid_y), values_(std::move(values)) {
    if (values_.size() != gx_.size() * gy_.size())
        throw std::invalid_argument("image size does not match its grids");
}

SampledImage::SampledImage(Grid1D grid_x, Grid1D grid_y)
    : gx_(grid_x), gy_(grid_y), values_(grid_x.size() * grid_y.size(), 0.0) {}

ParamGrid::ParamGrid(std::vector<Grid1D> a_axes, Grid1D b_axis, double a_min)
    : a_axes_(std::move(a_axes)), b_axis_(b_axis), a_min_(a_min) {
    if (a_axes_.empty()) throw std::invalid_argument("parameter grid needs at least one a-axis");
    if (!(a_min >= 0.0) || !std::isfinite(a_min)) throw std::invalid_argument("a_min must be finite and >= 0");
}

ParamGrid::ParamGrid(std::vector<Grid1D> a_axes, Grid1D b_axis)
    : ParamGrid(a_axes, b_axis, [&] {
          if (a_axes.empty()) throw std::invalid_argument("parameter grid needs at least one a-axis");
          double s = std::numeric_limits<double>::infinity();
          for (const auto& g : a_axes) s = std::min(s, g.step());
          return 0.5 * s;
      }()) {}

std::size_t ParamGrid::a_count() const noexcept {
    std::size_t n = 1;
    for (const auto& g : a_axes_) n *= g.size();
    return n;
}

double ParamGrid::cell_measure() const noexcept {
    double m = b_axis_.step();
    for (const auto& g : a_axes_) m *= g.step();
    return m;
}

void ParamGrid::a_point(std::size_t a_index, std::span<double> out) const {
    for (std::size_t d = a_axes_.size(); d-- > 0;) {
        const auto n = a_axes_[d].size();
        out[d] = a_axes_[d][a_index % n];
        a_index /= n;
    }
}

std::vector<double> ParamGrid::a_point(std::size_t a_index) const {
    std::vector<double> p(a_axes_.size());
    a_point(a_index, p);
    return p;
}

RidgeletCoefficients::RidgeletCoefficients(ParamGrid grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size()) throw std::invalid_argument("coefficient count does not match grid");
}

RidgeletCoefficients::RidgeletCoefficients(ParamGrid grid) : grid_(std::move(grid)), values_(grid_.size()) {}

double relative_l2_error(std::span<const double> approx, std::span<const double> ref) {
    if (approx.size() != ref.size()) throw std::invalid_argument("size mismatch in error computation");
    double num = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double d = approx[i] - ref[i];
        num += d * d;
    }
    const double den = sum_squares(ref);
    if (den == 0.0) return std::sqrt(sum_squares(approx));
    return std::sqrt(num / den);
}

double relative_l2_error(const SampledSignal& approx, const SampledSignal& ref) {
    if (!(approx.grid() == ref.grid())) throw std::invalid_argument("signals live on different grids");
    return relative_l2_error(approx.values(), ref.values());
}

double relative_l2_error(const SampledImage& approx, const SampledImage& ref) {
    if (!(approx.grid_x() == ref.grid_x()) || !(approx.grid_y() == ref.grid_y()))
        throw std::invalid_argument("images live on different grids");
    return relative_l2_error(approx.values(), ref.values());
}

double relative_l2_error_interior(const SampledImage& approx, const SampledImage& ref, double border_fraction) {
    if (!(approx.grid_x() == ref.grid_x()) || !(approx.grid_y() == ref.grid_y()))
        throw std::invalid_argument("images live on different grids");
    if (!(border_fraction >= 0.0 && border_fraction < 0.5)) throw std::invalid_argument("border fraction out of range");
    const auto bx = static_cast<std::size_t>(std::floor(border_fraction * static_cast<double>(ref.nx())));
    const auto by = static_cast<std::size_t>(std::floor(border_fraction * static_cast<double>(ref.ny())));
    std::vector<double> a, r;
    for (std::size_t iy = by; iy + by < ref.ny(); ++iy)
        for (std::size_t ix = bx; ix + bx < ref.nx(); ++ix) {
            a.push_back(approx.at(ix, iy));
            r.push_back(ref.at(ix, iy));
        }
    return relative_l2_error(a, r);
}

double max_abs_error(std::span<const double> approx, std::span<const double> ref) {
    if (approx.size() != ref.size()) throw std::invalid_argument("size mismatch in error computation");
    double m = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) m = std::max(m, std::abs(approx[i] - ref[i]));
    return m;
}

}  // namespace ridgenet
