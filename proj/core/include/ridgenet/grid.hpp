#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ridgenet/types.hpp"

namespace ridgenet {

/// Uniform 1D lattice start + i*step, i in [0, count).
class Grid1D {
public:
    Grid1D() = default;
    Grid1D(double start, double step, std::size_t count);

    /// Closed on the left; includes the last lattice point not exceeding
    /// `stop` up to rounding slack.
    static Grid1D linspace(double start, double stop, double step);
    /// Symmetric lattice [-half_width, half_width].
    static Grid1D symmetric(double half_width, double step);
    /// n cell centers partitioning [lo, hi].
    static Grid1D cell_centers(double lo, double hi, std::size_t n);

    double start() const noexcept { return start_; }
    double step() const noexcept { return step_; }
    std::size_t size() const noexcept { return count_; }
    double operator[](std::size_t i) const noexcept { return start_ + static_cast<double>(i) * step_; }
    double back() const noexcept { return (*this)[count_ - 1]; }
    std::vector<double> points() const;

    bool operator==(const Grid1D&) const = default;

private:
    double start_ = 0.0;
    double step_ = 1.0;
    std::size_t count_ = 1;
};

/// Real samples on a 1D grid.
class SampledSignal {
public:
    SampledSignal(Grid1D grid, std::vector<double> values);
    explicit SampledSignal(Grid1D grid);

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    double& operator[](std::size_t i) noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    Grid1D grid_;
    std::vector<double> values_;
};

/// Real samples on a tensor grid; row-major with y as the slow index.
class SampledImage {
public:
    SampledImage(Grid1D grid_x, Grid1D grid_y, std::vector<double> values);
    SampledImage(Grid1D grid_x, Grid1D grid_y);

    const Grid1D& grid_x() const noexcept { return gx_; }
    const Grid1D& grid_y() const noexcept { return gy_; }
    std::size_t nx() const noexcept { return gx_.size(); }
    std::size_t ny() const noexcept { return gy_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }
    double at(std::size_t ix, std::size_t iy) const noexcept { return values_[iy * gx_.size() + ix]; }
    double& at(std::size_t ix, std::size_t iy) noexcept { return values_[iy * gx_.size() + ix]; }
    double cell_area() const noexcept { return gx_.step() * gy_.step(); }

private:
    Grid1D gx_;
    Grid1D gy_;
    std::vector<double> values_;
};

/// Discretization of the (a, b) parameter domain: one axis per input
/// dimension for a, one axis for b. Cells are ordered lexicographically
/// with a_1 slowest and b fastest.
class ParamGrid {
public:
    ParamGrid(std::vector<Grid1D> a_axes, Grid1D b_axis, double a_min);
    /// a_min defaults to half the smallest a step.
    ParamGrid(std::vector<Grid1D> a_axes, Grid1D b_axis);

    std::size_t dim() const noexcept { return a_axes_.size(); }
    const std::vector<Grid1D>& a_axes() const noexcept { return a_axes_; }
    const Grid1D& b_axis() const noexcept { return b_axis_; }
    double a_min() const noexcept { return a_min_; }

    std::size_t a_count() const noexcept;
    std::size_t size() const noexcept { return a_count() * b_axis_.size(); }
    /// Product of all step sizes.
    double cell_measure() const noexcept;
    /// Coordinates of the flat a-index (length dim()).
    void a_point(std::size_t a_index, std::span<double> out) const;
    std::vector<double> a_point(std::size_t a_index) const;

private:
    std::vector<Grid1D> a_axes_;
    Grid1D b_axis_;
    double a_min_;
};

/// Complex coefficients over a ParamGrid in its lexicographic order.
class RidgeletCoefficients {
public:
    RidgeletCoefficients(ParamGrid grid, std::vector<cplx> values);
    explicit RidgeletCoefficients(ParamGrid grid);

    const ParamGrid& grid() const noexcept { return grid_; }
    std::span<const cplx> values() const noexcept { return values_; }
    std::span<cplx> values() noexcept { return values_; }
    const cplx& at(std::size_t a_index, std::size_t b_index) const noexcept {
        return values_[a_index * grid_.b_axis().size() + b_index];
    }
    cplx& at(std::size_t a_index, std::size_t b_index) noexcept {
        return values_[a_index * grid_.b_axis().size() + b_index];
    }

private:
    ParamGrid grid_;
    std::vector<cplx> values_;
};

/// ||approx - ref|| / ||ref||; plain ||approx|| when ref is identically zero.
double relative_l2_error(std::span<const double> approx, std::span<const double> ref);
double relative_l2_error(const SampledSignal& approx, const SampledSignal& ref);
double relative_l2_error(const SampledImage& approx, const SampledImage& ref);
/// Same, ignoring a border of floor(border_fraction * n) pixels on each side.
double relative_l2_error_interior(const SampledImage& approx, const SampledImage& ref,
                                  double border_fraction = 0.1);
double max_abs_error(std::span<const double> approx, std::span<const double> ref);

}  // namespace ridgenet
