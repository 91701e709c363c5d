#include "ridgenet/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ridgenet/spectral.hpp"

namespace ridgenet {

namespace {

std::vector<cplx> dft_of(std::span<const double> v) {
    std::vector<cplx> buf(v.begin(), v.end());
    dft_inplace(buf, -1);
    return buf;
}

}  // namespace

double high_band_energy(std::span<const double> values, double step, double cutoff) {
    const auto F = dft_of(values);
    double e = 0.0;
    for (std::size_t k = 0; k < F.size(); ++k)
        if (std::abs(dft_frequency(k, F.size(), step)) > cutoff) e += std::norm(F[k]);
    return e;
}

double high_band_energy(const SampledImage& img, double cutoff) {
    const std::size_t nx = img.nx(), ny = img.ny();
    std::vector<cplx> buf(img.values().begin(), img.values().end());
    std::vector<cplx> line;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        line.assign(buf.begin() + static_cast<std::ptrdiff_t>(iy * nx),
                    buf.begin() + static_cast<std::ptrdiff_t>((iy + 1) * nx));
        dft_inplace(line, -1);
        std::copy(line.begin(), line.end(), buf.begin() + static_cast<std::ptrdiff_t>(iy * nx));
    }
    line.resize(ny);
    for (std::size_t ix = 0; ix < nx; ++ix) {
        for (std::size_t iy = 0; iy < ny; ++iy) line[iy] = buf[iy * nx + ix];
        dft_inplace(line, -1);
        for (std::size_t iy = 0; iy < ny; ++iy) buf[iy * nx + ix] = line[iy];
    }
    double e = 0.0;
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double wx = dft_frequency(ix, nx, img.grid_x().step());
            const double wy = dft_frequency(iy, ny, img.grid_y().step());
            if (std::hypot(wx, wy) > cutoff) e += std::norm(buf[iy * nx + ix]);
        }
    return e;
}

double low_band_correlation(std::span<const double> a, std::span<const double> b, double step, double cutoff) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    const auto A = dft_of(a);
    const auto B = dft_of(b);
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t k = 0; k < A.size(); ++k) {
        if (std::abs(dft_frequency(k, A.size(), step)) > cutoff) continue;
        ab += (A[k] * std::conj(B[k])).real();
        aa += std::norm(A[k]);
        bb += std::norm(B[k]);
    }
    if (aa == 0.0 || bb == 0.0) return 0.0;
    return ab / std::sqrt(aa * bb);
}

LowPassReport low_pass_report(const SampledSignal& reconstruction, const SampledSignal& target) {
    const double h = target.grid().step();
    const double et = high_band_energy(target.values(), h, 4.0 * pi);
    const double er = high_band_energy(reconstruction.values(), h, 4.0 * pi);
    return {et > 0.0 ? er / et : (er > 0.0 ? INFINITY : 0.0),
            low_band_correlation(reconstruction.values(), target.values(), h, 2.0 * pi)};
}

cplx least_squares_gain(std::span<const cplx> g, std::span<const double> f) {
    if (g.size() != f.size()) throw std::invalid_argument("size mismatch");
    // Re(s g) = s_r g_r - s_i g_i: two real unknowns
    double rr = 0.0, ii = 0.0, ri = 0.0, rf = 0.0, if_ = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double gr = g[k].real(), gi = -g[k].imag();
        rr += gr * gr;
        ii += gi * gi;
        ri += gr * gi;
        rf += gr * f[k];
        if_ += gi * f[k];
    }
    const double det = rr * ii - ri * ri;
    const double scale = rr + ii;
    if (scale == 0.0) return {};
    if (std::abs(det) <= 1e-14 * scale * scale) {
        // g_r and g_i collinear: one-parameter fit along the dominant part
        return rr >= ii ? cplx(rf / rr, 0.0) : cplx(0.0, if_ / ii);
    }
    return {(rf * ii - if_ * ri) / det, (if_ * rr - rf * ri) / det};
}

}  // namespace ridgenet
