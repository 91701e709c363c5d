#pragma once

// Inner loops shared by the forward and dual sums.

#include <cmath>
#include <cstddef>

#include "ridgenet/activation.hpp"
#include "ridgenet/admissibility.hpp"
#include "ridgenet/special_functions.hpp"

namespace ridgenet::detail {

constexpr double gaussian_window = 13.0;

/// scale * G^(order)(z * inv_width), i.e. scale * (-1)^order He_order(t) G(t).
struct GaussianFamily {
    int order = 0;
    double scale = 1.0;
    double inv_width = 1.0;

    double radius() const { return gaussian_window / inv_width; }
    double operator()(double z) const {
        const double t = z * inv_width;
        const double he = hermite_he(order, t);
        return scale * (order % 2 ? -he : he) * std::exp(-0.5 * t * t);
    }

    /// Calls out(j, value) for every j in [0, count) with |z0 - (b0 + j db)|
    /// inside the window, in increasing j. The Gaussian factor is advanced
    /// by the exact recurrence G(t - dt) = G(t) exp(t dt - dt^2/2); the
    /// Hermite factor uses the exact argument b_of(j).
    template <class BOf, class Out>
    void run(double z0, double b0, double db, std::size_t count, BOf&& b_of, Out&& out) const {
        const double r = radius();
        const double lo = std::ceil((z0 - r - b0) / db);
        const double hi = std::floor((z0 + r - b0) / db);
        if (hi < 0.0 || lo > static_cast<double>(count) - 1.0 || lo > hi) return;
        const auto j0 = static_cast<std::size_t>(std::max(lo, 0.0));
        const auto j1 = static_cast<std::size_t>(std::min(hi, static_cast<double>(count) - 1.0)) + 1;
        const double dt = db * inv_width;
        double t = (z0 - b_of(j0)) * inv_width;
        double g = std::exp(-0.5 * t * t);
        double q = std::exp(t * dt - 0.5 * dt * dt);
        const double qq = std::exp(-dt * dt);
        const double sgn = order % 2 ? -scale : scale;
        for (std::size_t j = j0; j < j1; ++j) {
            t = (z0 - b_of(j)) * inv_width;
            out(j, sgn * hermite_he(order, t) * g);
            g *= q;
            q *= qq;
        }
    }
};

inline GaussianFamily gaussian_family(const ActivationSpec& s) {
    constexpr double inv_sqrt_two_pi = 0.39894228040143267794;
    switch (s.kind) {
        case ActivationKind::GaussianRBF: return {0, 1.0, s.dilation};
        case ActivationKind::GaussianDeriv: return {s.order, 1.0, s.dilation};
        case ActivationKind::DiracDelta: return {0, inv_sqrt_two_pi / s.width, s.dilation / s.width};
        case ActivationKind::DiracDerivApprox:
            return {s.order, inv_sqrt_two_pi / std::pow(s.width, s.order + 1), s.dilation / s.width};
        default: return {};
    }
}

/// psi = unit * profile(z) with a real profile: unit = i for odd m, 1 for even m.
struct PsiProfile {
    int m = 1;
    int n = 1;  // base_order + m

    explicit PsiProfile(const RidgeletSpec& psi) : m(psi.m), n(psi.base_order + psi.m) {}

    bool is_gaussian() const { return m % 2 == 0; }
    cplx unit() const { return m % 2 ? cplx(0.0, 1.0) : cplx(1.0, 0.0); }
    GaussianFamily gaussian() const { return {n, 1.0, 1.0}; }

    double operator()(double z) const {
        if (m % 2 == 0) return gaussian_derivative(n, z);
        double d[24];
        dawson_scaled_derivatives(n, z, d);
        return 1.12837916709551257390 * d[n];  // 2/sqrt(pi)
    }
};

/// Calls f with a callable equal to spec.eval, specialized for the cheap kinds.
template <class F>
decltype(auto) with_activation(const ActivationSpec& s, F&& f) {
    if (s.kind == ActivationKind::TruncatedPower && s.dilation == 1.0) {
        if (s.order == 0) return f([](double z) { return z > 0.0 ? 1.0 : 0.0; });
        if (s.order == 1) return f([](double z) { return z > 0.0 ? z : 0.0; });
    }
    return f([s](double z) { return s.eval(z); });
}

}  // namespace ridgenet::detail
