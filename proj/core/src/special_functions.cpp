#include "ridgenet/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace ridgenet {

namespace {

constexpr double sqrt_half = 0.70710678118654752440;

// 1/(2z) sum_k (2k-1)!!/(2z^2)^k, truncated well before the smallest term
double dawson_asymptotic(double z) {
    const double x2 = 2.0 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= (2.0 * k - 1.0) / x2;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum / (2.0 * z);
}

constexpr double cheb_hi = 16.0;
constexpr int cheb_intervals = 128;
constexpr int cheb_degree = 16;

struct ChebTable {
    double width = cheb_hi / cheb_intervals;
    std::vector<std::array<double, cheb_degree + 1>> coeffs;

    ChebTable() : coeffs(cheb_intervals) {
        constexpr int n = cheb_degree + 1;
        for (int k = 0; k < cheb_intervals; ++k) {
            const double lo = k * width;
            std::array<double, n> f{};
            for (int j = 0; j < n; ++j) {
                const double t = std::cos(pi * (j + 0.5) / n);
                f[j] = dawson(lo + 0.5 * width * (t + 1.0));
            }
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j = 0; j < n; ++j) s += f[j] * std::cos(pi * i * (j + 0.5) / n);
                coeffs[k][i] = (i == 0 ? 1.0 : 2.0) * s / n;
            }
        }
    }

    double operator()(double z) const {
        auto k = static_cast<int>(z / width);
        if (k >= cheb_intervals) k = cheb_intervals - 1;
        const double t = 2.0 * (z - k * width) / width - 1.0;
        const auto& c = coeffs[k];
        double b1 = 0.0, b2 = 0.0;
        for (int i = cheb_degree; i >= 1; --i) {
            const double b0 = 2.0 * t * b1 - b2 + c[i];
            b2 = b1;
            b1 = b0;
        }
        return t * b1 - b2 + c[0];
    }
};

const ChebTable& cheb_table() {
    static const ChebTable table;
    return table;
}

}  // namespace

double gaussian(double z) { return std::exp(-0.5 * z * z); }

double hermite_he(int n, double z) {
    if (n < 0) throw std::invalid_argument("Hermite order must be >= 0");
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = z;
    for (int k = 1; k < n; ++k) {
        const double next = z * cur - k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double gaussian_derivative(int order, double z) {
    if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
    const double he = hermite_he(order, z);
    return ((order & 1) ? -he : he) * gaussian(z);
}

double dawson(double z) {
    if (std::isnan(z)) return z;
    const double a = std::abs(z);
    double v;
    if (a == 0.0) {
        v = 0.0;
    } else if (a <= 6.0) {
        auto integrand = [a](double w) { return std::exp((w - a) * (w + a)); };
        v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, a, 8, 1e-14);
    } else {
        v = dawson_asymptotic(a);
    }
    return z < 0 ? -v : v;
}

namespace {

// Fixed-length asymptotic series for |z| >= 16: (2k-1)!!/(2z^2)^k < 1e-18 at k = 10.
double dawson_tail(double z) {
    const double u = 1.0 / (2.0 * z * z);
    double sum = 1.0;
    for (int k = 10; k >= 1; --k) sum = 1.0 + (2.0 * k - 1.0) * u * sum;
    return sum / (2.0 * z);
}

}  // namespace

double dawson_fast(double z) {
    if (std::isnan(z)) return z;
    const double a = std::abs(z);
    const double v = a < cheb_hi ? cheb_table()(a) : dawson_tail(a);
    return z < 0 ? -v : v;
}

void dawson_scaled_derivatives(int max_order, double z, double* out) {
    if (max_order < 0) throw std::invalid_argument("derivative order must be >= 0");
    out[0] = dawson_fast(z * sqrt_half);
    if (max_order >= 1) out[1] = sqrt_half - z * out[0];
    for (int n = 1; n < max_order; ++n) out[n + 1] = -n * out[n - 1] - z * out[n];
}

cplx hilbert_gaussian(int order, double z) {
    if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
    constexpr int stack_orders = 16;
    if (order >= stack_orders) throw std::invalid_argument("derivative order too large");
    double d[stack_orders];
    dawson_scaled_derivatives(order, z, d);
    return {0.0, 2.0 / std::sqrt(pi) * d[order]};
}

}  // namespace ridgenet
