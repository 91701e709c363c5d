#include "ridgenet/spectral.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace ridgenet {

namespace {

// fftw planning is not thread safe; execution is
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

SpectralMultiplier SpectralMultiplier::power(int m) {
    if (m < 1) throw std::invalid_argument("multiplier order must be >= 1");
    return {Kind::Power, m};
}

SpectralMultiplier SpectralMultiplier::sign() { return {Kind::Sign, 0}; }

cplx SpectralMultiplier::operator()(double omega) const {
    if (omega == 0.0) return {0.0, 0.0};
    if (kind == Kind::Sign) return {omega > 0 ? 1.0 : -1.0, 0.0};
    static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return ipow[m % 4] * std::pow(std::abs(omega), m);
}

double dft_frequency(std::size_t k, std::size_t n, double step) {
    const auto kk = static_cast<double>(k);
    const auto nn = static_cast<double>(n);
    const double idx = (2 * k < n) ? kk : kk - nn;
    return two_pi * idx / (nn * step);
}

void dft_inplace(std::span<cplx> data, int sign) {
    if (data.empty()) return;
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), p, p, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

std::vector<cplx> apply_multiplier(std::span<const cplx> signal, double step, const SpectralMultiplier& multiplier,
                                   std::size_t min_length) {
    if (signal.size() < 2) throw std::invalid_argument("multiplier needs at least two samples");
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("sample step must be positive");
    const std::size_t n = std::bit_ceil(std::max(signal.size(), min_length));
    std::vector<cplx> buf(n, cplx{});
    std::copy(signal.begin(), signal.end(), buf.begin());
    dft_inplace(buf, -1);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) buf[k] *= multiplier(dft_frequency(k, n, step)) * inv_n;
    dft_inplace(buf, +1);
    buf.resize(signal.size());
    return buf;
}

std::vector<cplx> hilbert_discrete(std::span<const cplx> signal, double step) {
    return apply_multiplier(signal, step, SpectralMultiplier::sign());
}

}  // namespace ridgenet
