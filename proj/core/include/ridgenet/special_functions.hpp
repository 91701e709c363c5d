#pragma once

#include "ridgenet/types.hpp"

namespace ridgenet {

/// G(z) = exp(-z^2/2).
double gaussian(double z);
/// Probabilists' Hermite polynomial He_n(z).
double hermite_he(int n, double z);
/// G^(order)(z) = (-1)^order He_order(z) G(z).
double gaussian_derivative(int order, double z);

/// Dawson function F(z) = exp(-z^2) * integral_0^z exp(w^2) dw.
/// Adaptive Gauss-Kronrod for |z| <= 6, asymptotic series beyond.
double dawson(double z);
/// Piecewise Chebyshev interpolant of dawson(); agrees with it to ~1e-14
/// and is used inside the transform loops.
double dawson_fast(double z);

/// order-th derivative of the Hilbert transform of G, (2i/sqrt(pi)) F(z/sqrt 2).
/// Purely imaginary.
cplx hilbert_gaussian(int order, double z);

/// Fills out[0..=max_order] with the derivatives of h(z) = F(z/sqrt 2).
void dawson_scaled_derivatives(int max_order, double z, double* out);

}  // namespace ridgenet
