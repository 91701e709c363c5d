#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ridgenet/types.hpp"

namespace ridgenet {

/// DFT multiplier: i^m |omega|^m (the backprojection filter) or sgn(omega)
/// (the Hilbert transform). The DC bin is always zeroed.
struct SpectralMultiplier {
    enum class Kind { Power, Sign };
    Kind kind = Kind::Power;
    int m = 1;

    static SpectralMultiplier power(int m);
    static SpectralMultiplier sign();
    cplx operator()(double omega) const;
};

/// Angular frequency of DFT bin k for length n and sample step.
double dft_frequency(std::size_t k, std::size_t n, double step);

/// Zero-pads to the next power of two >= max(size, min_length), applies the
/// multiplier and returns the first size() samples.
std::vector<cplx> apply_multiplier(std::span<const cplx> signal, double step,
                                   const SpectralMultiplier& multiplier, std::size_t min_length = 0);
std::vector<cplx> hilbert_discrete(std::span<const cplx> signal, double step);

/// In-place unnormalized DFT of any length; sign -1 forward, +1 backward.
void dft_inplace(std::span<cplx> data, int sign);

}  // namespace ridgenet
