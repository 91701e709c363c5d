#include "ridgenet/ridgelet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kernels.hpp"
#include "ridgenet/parallel.hpp"

namespace ridgenet {

namespace {

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void require_dim(const ParamGrid& grid, std::size_t dim) {
    if (grid.dim() != dim)
        throw std::invalid_argument("parameter grid has " + std::to_string(grid.dim()) + " a-axes, expected " +
                                    std::to_string(dim));
}

}  // namespace

RidgeletCoefficients forward_1d(const SampledSignal& f, const RidgeletSpec& psi, const ParamGrid& grid,
                                unsigned workers) {
    if (psi.m != 1) throw std::invalid_argument("forward_1d needs a ridgelet with m = 1");
    require_dim(grid, 1);
    if (f.size() == 0) throw std::invalid_argument("empty signal");
    RidgeletCoefficients T(grid);
    const detail::PsiProfile profile(psi);
    const Grid1D& ax = grid.a_axes()[0];
    const Grid1D& bx = grid.b_axis();
    const Grid1D& xg = f.grid();
    const std::size_t nb = bx.size();
    const std::size_t nx = f.size();
    const double dx = xg.step();
    const cplx unit_conj = std::conj(profile.unit());

    std::vector<std::size_t> support;  // nonzero samples only
    for (std::size_t n = 0; n < nx; ++n)
        if (f[n] != 0.0) support.push_back(n);

    parallel_for(ax.size(), workers, [&](std::size_t i0, std::size_t i1) {
        for (std::size_t i = i0; i < i1; ++i) {
            const double a = ax[i];
            const double w = std::abs(a) * dx;
            for (std::size_t j = 0; j < nb; ++j) {
                const double b = bx[j];
                double s = 0.0;
                for (std::size_t n : support) s += f[n] * profile(a * xg[n] - b);
                T.at(i, j) = unit_conj * (s * w);
            }
        }
    });
    return T;
}

RidgeletCoefficients forward_fourier_slice(const SampledSignal& f, const RidgeletSpec& psi, const ParamGrid& grid,
                                           unsigned workers) {
    if (psi.m != 1) throw std::invalid_argument("forward_fourier_slice needs a ridgelet with m = 1");
    require_dim(grid, 1);
    if (f.size() == 0) throw std::invalid_argument("empty signal");
    RidgeletCoefficients T(grid);
    const Grid1D& ax = grid.a_axes()[0];
    const Grid1D& bx = grid.b_axis();
    const Grid1D& xg = f.grid();
    const std::size_t nx = f.size();
    const std::size_t nb = bx.size();

    double amax = 0.0, bmax = 0.0, xmax = 0.0;
    for (double v : {ax[0], ax.back()}) amax = std::max(amax, std::abs(v));
    for (double v : {bx[0], bx.back()}) bmax = std::max(bmax, std::abs(v));
    for (double v : {xg[0], xg.back()}) xmax = std::max(xmax, std::abs(v));
    // psi^ is below 1e-28 beyond |zeta| = 12. The zeta step sets the period
    // 2 pi / dzeta of the b-aliasing; keep it well beyond the b-support.
    const double zeta_max = 12.0;
    const double period = 4.0 * (bmax + amax * xmax + 10.0);
    const auto nz = static_cast<std::size_t>(std::ceil(2.0 * zeta_max * period / two_pi)) + 1;
    const double dz = 2.0 * zeta_max / static_cast<double>(nz - 1);

    std::vector<cplx> psi_conj(nz);
    for (std::size_t k = 0; k < nz; ++k) psi_conj[k] = std::conj(psi.fourier(-zeta_max + k * dz));

    parallel_for(ax.size(), workers, [&](std::size_t i0, std::size_t i1) {
        std::vector<cplx> spec(nz);
        for (std::size_t i = i0; i < i1; ++i) {
            const double a = ax[i];
            // f^(a zeta_k) = dx sum_n f_n exp(-i a zeta_k x_n)
            std::fill(spec.begin(), spec.end(), cplx{});
            for (std::size_t n = 0; n < nx; ++n) {
                if (f[n] == 0.0) continue;
                const double ax_n = a * xg[n];
                cplx ph = std::polar(f[n], zeta_max * ax_n);
                const cplx stepw = std::polar(1.0, -dz * ax_n);
                for (std::size_t k = 0; k < nz; ++k) {
                    spec[k] += ph;
                    ph *= stepw;
                }
            }
            const double wa = std::abs(a) * xg.step() * dz / two_pi;
            for (std::size_t k = 0; k < nz; ++k) spec[k] *= psi_conj[k] * wa;
            for (std::size_t j = 0; j < nb; ++j) {
                const double b = bx[j];
                cplx ph = std::polar(1.0, -zeta_max * b);
                const cplx stepw = std::polar(1.0, dz * b);
                cplx s{};
                for (std::size_t k = 0; k < nz; ++k) {
                    s += spec[k] * ph;
                    ph *= stepw;
                }
                T.at(i, j) = s;
            }
        }
    });
    return T;
}

RidgeletCoefficients forward_2d(const SampledImage& f, const RidgeletSpec& psi, const ParamGrid& grid,
                                unsigned workers) {
    if (psi.m != 2) throw std::invalid_argument("forward_2d needs a ridgelet with m = 2");
    require_dim(grid, 2);
    RidgeletCoefficients T(grid);
    const detail::GaussianFamily kernel = detail::PsiProfile(psi).gaussian();
    const Grid1D& bx = grid.b_axis();
    const std::size_t nb = bx.size();
    const double cell = f.cell_area();

    struct Pixel {
        double x, y, v;
    };
    std::vector<Pixel> pixels;
    for (std::size_t iy = 0; iy < f.ny(); ++iy)
        for (std::size_t ix = 0; ix < f.nx(); ++ix)
            if (f.at(ix, iy) != 0.0) pixels.push_back({f.grid_x()[ix], f.grid_y()[iy], f.at(ix, iy)});

    auto b_of = [&](std::size_t j) { return bx[j]; };
    parallel_for(grid.a_count(), workers, [&](std::size_t i0, std::size_t i1) {
        std::vector<double> row(nb);
        double a[2];
        for (std::size_t i = i0; i < i1; ++i) {
            grid.a_point(i, a);
            std::fill(row.begin(), row.end(), 0.0);
            for (const Pixel& p : pixels) {
                const double z0 = a[0] * p.x + a[1] * p.y;
                kernel.run(z0, bx.start(), bx.step(), nb, b_of, [&](std::size_t j, double v) { row[j] += p.v * v; });
            }
            const double w = std::hypot(a[0], a[1]) * cell;
            for (std::size_t j = 0; j < nb; ++j) T.at(i, j) = row[j] * w;
        }
    });
    return T;
}

NetworkDescription network_from_coefficients(const RidgeletCoefficients& T, const ActivationSpec& eta, cplx K) {
    const ParamGrid& grid = T.grid();
    NetworkDescription net;
    net.m = static_cast<int>(grid.dim());
    net.eta = eta;
    net.K = K;
    const double cell = grid.cell_measure();
    const Grid1D& bx = grid.b_axis();
    std::vector<double> a(grid.dim());
    for (std::size_t i = 0; i < grid.a_count(); ++i) {
        grid.a_point(i, a);
        const double na = norm(a);
        if (na < grid.a_min()) continue;
        for (std::size_t j = 0; j < bx.size(); ++j) net.add_unit(a, bx[j], T.at(i, j) * (cell / na));
    }
    return net;
}

SampledSignal dual_transform(const RidgeletCoefficients& T, const ActivationSpec& eta, cplx K, const Grid1D& x,
                             unsigned workers) {
    if (K == cplx{}) throw std::invalid_argument("dual transform with K = 0 (non-admissible pair)");
    if (T.grid().dim() != 1) throw std::invalid_argument("1D evaluation of a multi-dimensional coefficient field");
    return evaluate_network(network_from_coefficients(T, eta, K), x, workers);
}

SampledImage dual_transform(const RidgeletCoefficients& T, const ActivationSpec& eta, cplx K, const Grid1D& gx,
                            const Grid1D& gy, unsigned workers) {
    if (K == cplx{}) throw std::invalid_argument("dual transform with K = 0 (non-admissible pair)");
    if (T.grid().dim() != 2) throw std::invalid_argument("image evaluation needs a 2D coefficient field");
    return evaluate_network(network_from_coefficients(T, eta, K), gx, gy, workers);
}

namespace {

template <class Target>
SynthesisResult synthesize_impl(const Target& f, const ActivationSpec& eta, const ParamGrid& grid,
                                std::optional<RidgeletSpec> psi_opt, int m, unsigned workers) {
    const RidgeletSpec psi = psi_opt ? *psi_opt : construct_admissible(eta, m);
    if (psi.m != m) throw std::invalid_argument("ridgelet dimension does not match the target");
    const AdmissibilityReport rep = compute_K(psi, eta);
    if (rep.classification != Classification::Admissible)
        throw ConstructionFailed("pair (" + psi.name() + ", " + eta.name() + ") is " +
                                     to_string(rep.classification) + ", not admissible",
                                 {psi.name() + ": " + to_string(rep.classification)});
    RidgeletCoefficients T = [&] {
        if constexpr (std::is_same_v<Target, SampledSignal>) return forward_1d(f, psi, grid, workers);
        else return forward_2d(f, psi, grid, workers);
    }();
    return {network_from_coefficients(T, eta, rep.K), psi, rep};
}

}  // namespace

SynthesisResult synthesize(const SampledSignal& f, const ActivationSpec& eta, const ParamGrid& grid,
                           std::optional<RidgeletSpec> psi, unsigned workers) {
    require_dim(grid, 1);
    return synthesize_impl(f, eta, grid, psi, 1, workers);
}

SynthesisResult synthesize(const SampledImage& f, const ActivationSpec& eta, const ParamGrid& grid,
                           std::optional<RidgeletSpec> psi, unsigned workers) {
    require_dim(grid, 2);
    return synthesize_impl(f, eta, grid, psi, 2, workers);
}

NetworkDescription synthesize_network(const SampledSignal& f, const ActivationSpec& eta, const ParamGrid& grid,
                                      std::optional<RidgeletSpec> psi, unsigned workers) {
    return synthesize(f, eta, grid, psi, workers).network;
}

NetworkDescription synthesize_network(const SampledImage& f, const ActivationSpec& eta, const ParamGrid& grid,
                                      std::optional<RidgeletSpec> psi, unsigned workers) {
    return synthesize(f, eta, grid, psi, workers).network;
}

PlancherelResult plancherel_check(const SampledSignal& f, const RidgeletSpec& psi, const ParamGrid& grid,
                                  unsigned workers) {
    const AdmissibilityReport rep = compute_K(psi, ridgelet_fourier_data(psi));
    if (rep.classification != Classification::Admissible || !(rep.K.real() > 0.0) ||
        std::abs(rep.K.imag()) > 1e-9 * std::abs(rep.K))
        throw std::invalid_argument("ridgelet " + psi.name() + " is not self-admissible");
    PlancherelResult out;
    for (double v : f.values()) out.rhs += v * v;
    out.rhs *= f.grid().step();
    if (out.rhs == 0.0) return out;

    const RidgeletCoefficients T = forward_1d(f, psi, grid, workers);
    const Grid1D& ax = grid.a_axes()[0];
    const double cell = grid.cell_measure();
    double s = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        const double a = std::abs(ax[i]);
        if (a < grid.a_min()) continue;
        double row = 0.0;
        for (std::size_t j = 0; j < grid.b_axis().size(); ++j) row += std::norm(T.at(i, j));
        s += row * cell / (a * a);
    }
    out.lhs = s / rep.K.real();
    return out;
}

}  // namespace ridgenet
