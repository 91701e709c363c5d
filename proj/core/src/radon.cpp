#include "ridgenet/radon.hpp"

#include <cmath>
#include <stdexcept>

#include "ridgenet/parallel.hpp"
#include "ridgenet/ridgelet.hpp"
#include "ridgenet/spectral.hpp"

namespace ridgenet {

namespace {

// zero-extended bilinear interpolation on pixel centers
double bilinear(const SampledImage& f, double x, double y) {
    const double fx = (x - f.grid_x().start()) / f.grid_x().step();
    const double fy = (y - f.grid_y().start()) / f.grid_y().step();
    const double flx = std::floor(fx), fly = std::floor(fy);
    const long ix = static_cast<long>(flx), iy = static_cast<long>(fly);
    const long nx = static_cast<long>(f.nx()), ny = static_cast<long>(f.ny());
    if (ix < -1 || iy < -1 || ix >= nx || iy >= ny) return 0.0;
    const double tx = fx - flx, ty = fy - fly;
    auto px = [&](long i, long j) {
        return (i < 0 || j < 0 || i >= nx || j >= ny) ? 0.0
                                                      : f.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    };
    return (1 - ty) * ((1 - tx) * px(ix, iy) + tx * px(ix + 1, iy)) +
           ty * ((1 - tx) * px(ix, iy + 1) + tx * px(ix + 1, iy + 1));
}

double mirror_factor(const Grid1D& angles) {
    const double span = static_cast<double>(angles.size()) * angles.step();
    if (std::abs(span - pi) <= 1e-9 * pi) return 2.0;
    if (std::abs(span - two_pi) <= 1e-9 * two_pi) return 1.0;
    throw std::invalid_argument("angle grid must cover [0, pi) or [0, 2 pi) uniformly");
}

template <class T>
T interp_row(const T* row, const Grid1D& p, double q) {
    const double fp = (q - p.start()) / p.step();
    const double fl = std::floor(fp);
    const long i = static_cast<long>(fl);
    const long n = static_cast<long>(p.size());
    if (i < -1 || i >= n) return T{};
    const double t = fp - fl;
    const T lo = i >= 0 ? row[i] : T{};
    const T hi = i + 1 < n ? row[i + 1] : T{};
    return (1 - t) * lo + t * hi;
}

template <class T>
std::vector<T> backproject(const std::vector<T>& values, const Grid1D& angles, const Grid1D& offsets,
                           const Grid1D& gx, const Grid1D& gy, unsigned workers) {
    const double factor = mirror_factor(angles) * angles.step();
    std::vector<double> c(angles.size()), s(angles.size());
    for (std::size_t a = 0; a < angles.size(); ++a) {
        c[a] = std::cos(angles[a]);
        s[a] = std::sin(angles[a]);
    }
    const std::size_t nx = gx.size();
    std::vector<T> out(nx * gy.size());
    parallel_for(out.size(), workers, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const double x = gx[i % nx], y = gy[i / nx];
            T acc{};
            for (std::size_t a = 0; a < angles.size(); ++a)
                acc += interp_row(values.data() + a * offsets.size(), offsets, c[a] * x + s[a] * y);
            out[i] = acc * factor;
        }
    });
    return out;
}

}  // namespace

Grid1D half_circle_angles(std::size_t n) {
    if (n < 2) throw std::invalid_argument("need at least two angles");
    return Grid1D(0.0, pi / static_cast<double>(n), n);
}

Grid1D diagonal_offsets(const SampledImage& f) {
    const double hx = 0.5 * static_cast<double>(f.nx()) * f.grid_x().step();
    const double hy = 0.5 * static_cast<double>(f.ny()) * f.grid_y().step();
    const double pitch = std::min(f.grid_x().step(), f.grid_y().step());
    const double half = std::ceil(std::hypot(hx, hy) / pitch) * pitch;
    return Grid1D::symmetric(half, pitch);
}

Sinogram radon_2d(const SampledImage& f, const Grid1D& angles, const Grid1D& offsets, unsigned workers) {
    Sinogram s{angles, offsets, std::vector<double>(angles.size() * offsets.size(), 0.0), false};
    const double cx = 0.5 * (f.grid_x()[0] + f.grid_x().back());
    const double cy = 0.5 * (f.grid_y()[0] + f.grid_y().back());
    const double pitch = std::min(f.grid_x().step(), f.grid_y().step());
    const double dt = 0.5 * pitch;
    const double half_x = 0.5 * static_cast<double>(f.nx()) * f.grid_x().step();
    const double half_y = 0.5 * static_cast<double>(f.ny()) * f.grid_y().step();
    const double reach = std::hypot(half_x, half_y) + pitch;
    const auto nt = static_cast<std::size_t>(std::ceil(reach / dt));

    double rmax = 0.0;
    for (std::size_t iy = 0; iy < f.ny(); ++iy)
        for (std::size_t ix = 0; ix < f.nx(); ++ix)
            if (f.at(ix, iy) != 0.0)
                rmax = std::max(rmax, std::hypot(f.grid_x()[ix], f.grid_y()[iy]) + pitch / std::sqrt(2.0));
    const double pmax = std::max(std::abs(offsets[0]), std::abs(offsets.back()));
    s.coverage_warning = rmax > pmax + 1e-12;

    parallel_for(angles.size(), workers, [&](std::size_t a0, std::size_t a1) {
        for (std::size_t a = a0; a < a1; ++a) {
            const double ux = std::cos(angles[a]), uy = std::sin(angles[a]);
            for (std::size_t ip = 0; ip < offsets.size(); ++ip) {
                const double p = offsets[ip];
                // t runs symmetrically around the foot point of the line
                const double tc = -uy * cx + ux * cy;
                double acc = 0.0;
                for (std::size_t k = 0; k <= 2 * nt; ++k) {
                    const double t = tc + (static_cast<double>(k) - static_cast<double>(nt)) * dt;
                    acc += bilinear(f, p * ux - t * uy, p * uy + t * ux);
                }
                s.at(a, ip) = acc * dt;
            }
        }
    });
    return s;
}

SampledImage dual_radon_2d(const Sinogram& s, const Grid1D& gx, const Grid1D& gy, unsigned workers) {
    if (s.values.size() != s.angles.size() * s.offsets.size()) throw std::invalid_argument("malformed sinogram");
    return SampledImage(gx, gy, backproject(s.values, s.angles, s.offsets, gx, gy, workers));
}

SampledImage filtered_backprojection(const SampledImage& f, const FbpOptions& opt, unsigned workers) {
    const Grid1D angles = half_circle_angles(opt.angles);
    const Grid1D offsets = diagonal_offsets(f);
    const Sinogram s = radon_2d(f, angles, offsets, workers);
    const std::size_t np = offsets.size();
    std::vector<cplx> filtered(s.values.size());
    parallel_for(angles.size(), workers, [&](std::size_t a0, std::size_t a1) {
        std::vector<cplx> row(np);
        for (std::size_t a = a0; a < a1; ++a) {
            for (std::size_t p = 0; p < np; ++p) row[p] = s.at(a, p);
            const auto out = apply_multiplier(row, offsets.step(), SpectralMultiplier::power(1), opt.pad_factor * np);
            std::copy(out.begin(), out.end(), filtered.begin() + static_cast<std::ptrdiff_t>(a * np));
        }
    });
    const auto bp = backproject(filtered, angles, offsets, f.grid_x(), f.grid_y(), workers);
    // R* Lambda^1 R f = 2 (2 pi) i f under the Hilbert convention with the factor i
    const cplx norm(0.0, 2.0 * two_pi);
    std::vector<double> v(bp.size());
    for (std::size_t i = 0; i < bp.size(); ++i) v[i] = (bp[i] / norm).real();
    return SampledImage(f.grid_x(), f.grid_y(), std::move(v));
}

RidgeletFbpComparison ridgelet_vs_fbp(const SampledImage& f, const RidgeletSpec& psi, const ActivationSpec& eta,
                                      const ParamGrid& grid, unsigned workers) {
    if (psi.m != 2) throw std::invalid_argument("ridgelet_vs_fbp needs m = 2");
    const AdmissibilityReport rep = compute_K(psi, eta);
    if (rep.classification != Classification::Admissible)
        throw ConstructionFailed("pair (" + psi.name() + ", " + eta.name() + ") is " +
                                     to_string(rep.classification) + ", not admissible",
                                 {psi.name() + ": " + to_string(rep.classification)});
    const RidgeletCoefficients T = forward_2d(f, psi, grid, workers);
    SampledImage rec = dual_transform(T, eta, rep.K, f.grid_x(), f.grid_y(), workers);
    SampledImage fbp = filtered_backprojection(f, {}, workers);
    const double dev = relative_l2_error_interior(rec, fbp, 0.1);
    return {std::move(rec), std::move(fbp), dev, rep};
}

}  // namespace ridgenet
