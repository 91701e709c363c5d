#include "ridgenet/admissibility.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ridgenet/parallel.hpp"
#include "ridgenet/special_functions.hpp"

namespace ridgenet {

namespace {

constexpr double sqrt_two_pi = 2.50662827463100050242;

cplx ipow(int k) {
    static constexpr cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

// (i c zeta)^n by repeated multiplication so that odd/even symmetry is exact
cplx imag_power(double zeta, int n, double sign) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= zeta;
    return ipow(n) * (n % 2 && sign < 0 ? -r : r);
}

void check_psi(const RidgeletSpec& psi) {
    if (psi.m < 1) throw std::invalid_argument("ridgelet dimension m must be >= 1");
    if (psi.base_order < 0) throw std::invalid_argument("ridgelet base order must be >= 0");
}

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Band {
    cplx value;
    double abs;
};

// Adaptive Kronrod for f(z) = {value, modulus} integrated together. The
// error is measured against the modulus integral, so a component that is
// pure rounding noise cannot force endless bisection.
template <class F>
Band gk_band(const F& f, double lo, double hi, double rel_tol, int depth = 0) {
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = boost::math::quadrature::gauss<double, 15>::weights();
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    const auto [v0, a0] = f(c);
    cplx k = wk[0] * v0, g = wg[0] * v0;
    double a = wk[0] * a0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const auto [vm, am] = f(c - h * x[i]);
        const auto [vp, ap] = f(c + h * x[i]);
        k += wk[i] * (vm + vp);
        a += wk[i] * (am + ap);
        if (i % 2 == 0) g += wg[i / 2] * (vm + vp);
    }
    const double tol = std::max(rel_tol, 64 * std::numeric_limits<double>::epsilon());
    if (std::abs(k - g) * h <= tol * a * h || depth >= 24) return {k * h, a * h};
    const Band l = gk_band(f, lo, c, rel_tol, depth + 1);
    const Band r = gk_band(f, c, hi, rel_tol, depth + 1);
    return {l.value + r.value, l.abs + r.abs};
}

}  // namespace

cplx RidgeletSpec::fourier(double zeta) const {
    double mag = 1.0;
    for (int i = 0; i < m; ++i) mag *= std::abs(zeta);
    return ipow(m) * mag * imag_power(zeta, base_order, 1.0) * (sqrt_two_pi * gaussian(zeta));
}

cplx RidgeletSpec::reduced_conj_fourier(double zeta) const {
    // conj(i^m) conj((i zeta)^l) = (-i)^m (-i zeta)^l
    return ipow(-m) * imag_power(zeta, base_order, -1.0) * (sqrt_two_pi * gaussian(zeta));
}

cplx RidgeletSpec::eval(double z) const {
    check_psi(*this);
    const int n = base_order + m;
    // even m: Lambda^m = d^m; odd m: Lambda^m = H d^m
    if (m % 2 == 0) return {gaussian_derivative(n, z), 0.0};
    return hilbert_gaussian(n, z);
}

std::string RidgeletSpec::name() const {
    return base_order == 0 ? std::string("lg") : "lg" + std::to_string(base_order);
}

RidgeletSpec parse_ridgelet(const std::string& name, int m) {
    if (m < 1 || m > 2) throw std::invalid_argument("ridgelet dimension must be 1 or 2");
    if (name.rfind("lg", 0) != 0) throw std::invalid_argument("unknown ridgelet '" + name + "' (expected lg, lg1, lg2)");
    const std::string digits = name.substr(2);
    if (digits.empty()) return {m, 0};
    if (digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("unknown ridgelet '" + name + "' (expected lg, lg1, lg2)");
    return {m, std::stoi(digits)};
}

FourierData ridgelet_fourier_data(const RidgeletSpec& psi) {
    check_psi(psi);
    FourierData fd;
    fd.regular = [psi](double z) { return psi.fourier(z); };
    return fd;
}

std::string symbol(Classification c) {
    switch (c) {
        case Classification::Admissible: return "+";
        case Classification::Vanishing: return "0";
        case Classification::Divergent: return "inf";
    }
    return "?";
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Admissible: return "admissible";
        case Classification::Vanishing: return "vanishing";
        case Classification::Divergent: return "divergent";
    }
    return "?";
}

AdmissibilityReport compute_K(const RidgeletSpec& psi, const FourierData& eta_hat, const QuadratureParams& q) {
    check_psi(psi);
    if (q.cutoffs < 4) throw std::invalid_argument("need at least four inner cutoffs");
    if (!(q.outer > 1.0)) throw std::invalid_argument("outer cutoff must exceed 1");

    AdmissibilityReport rep;
    const int l = psi.base_order;
    for (std::size_t j = 0; j < eta_hat.delta_coeffs.size(); ++j)
        if (eta_hat.delta_coeffs[j] != cplx{} && static_cast<int>(j) >= psi.m + l) rep.delta_pairing_nonzero = true;

    const double prefactor = std::pow(two_pi, psi.m - 1);
    // (2 pi)^(m-1) conj(psi^) eta^ / |zeta|^m, the |zeta|^m cancelled analytically
    auto g = [&](double z) { return psi.reduced_conj_fourier(z) * eta_hat.regular_at(z); };
    // both half lines at mirrored nodes: odd integrands cancel exactly
    auto sym = [&](double z) {
        const cplx p = g(z), n = g(-z);
        return std::pair{p + n, std::abs(p) + std::abs(n)};
    };
    auto band = [&](double lo, double hi) { return gk_band(sym, lo, hi, q.rel_tol); };

    if (eta_hat.regular_is_zero()) {
        rep.K = 0.0;
        rep.classification = Classification::Vanishing;
        for (int n = 1; n <= q.cutoffs; ++n) rep.cutoff_trace.push_back({std::pow(10.0, -n), cplx{}, 0.0});
        return rep;
    }

    // outer part [eps_1, R], split at 1
    const double eps1 = 0.1;
    Band outer = band(1.0, q.outer);
    const Band mid = band(eps1, 1.0);
    outer.value += mid.value;
    outer.abs += mid.abs;

    cplx partial = outer.value;
    double partial_abs = outer.abs;
    rep.cutoff_trace.push_back({eps1, prefactor * partial, prefactor * partial_abs});
    std::vector<Band> increments;
    for (int n = 1; n < q.cutoffs; ++n) {
        const double hi = std::pow(10.0, -n);
        const double lo = std::pow(10.0, -(n + 1));
        const Band b = band(lo, hi);
        increments.push_back(b);
        partial += b.value;
        partial_abs += b.abs;
        rep.cutoff_trace.push_back({lo, prefactor * partial, prefactor * partial_abs});
    }

    // decide from the last three ratios of the absolute increments
    const std::size_t nb = increments.size();
    int decaying = 0, persisting = 0;
    for (std::size_t i = nb - 3; i < nb; ++i) {
        const double prev = increments[i - 1].abs;
        const double cur = increments[i].abs;
        if (cur <= 1e-15 * partial_abs || cur <= q.decay_ratio * prev) ++decaying;
        else ++persisting;
    }
    rep.K = prefactor * partial;
    rep.reference_abs = prefactor * partial_abs;
    if (persisting == 3) {
        rep.classification = Classification::Divergent;
        return rep;
    }
    if (decaying != 3)
        throw IndeterminateError("inner-cutoff partial integrals neither converge nor diverge for (" + psi.name() +
                                     ", m=" + std::to_string(psi.m) + ")",
                                 rep.cutoff_trace);
    const cplx last_step = prefactor * increments.back().value;
    if (std::abs(last_step) > q.tol_conv * std::max(rep.reference_abs, 1e-300))
        throw IndeterminateError("partial integrals converge too slowly for a Cauchy check", rep.cutoff_trace);

    // convergent, so the integrand is bounded near 0: close the sliver inside the last cutoff
    const Band inner = band(0.0, rep.cutoff_trace.back().cutoff);
    rep.K += prefactor * inner.value;
    rep.reference_abs += prefactor * inner.abs;
    rep.classification = std::abs(rep.K) <= q.tol_zero * rep.reference_abs ? Classification::Vanishing
                                                                           : Classification::Admissible;
    return rep;
}

AdmissibilityReport compute_K(const RidgeletSpec& psi, const ActivationSpec& eta, const QuadratureParams& q) {
    return compute_K(psi, fourier_data(eta), q);
}

RidgeletSpec construct_admissible(const ActivationSpec& eta, int m, int k_max, const QuadratureParams& q) {
    const FourierData fd = fourier_data(eta);
    std::vector<std::string> attempts;
    for (int k = fd.pole_order; k <= k_max; ++k) {
        const RidgeletSpec psi{m, k};
        try {
            const auto rep = compute_K(psi, fd, q);
            if (rep.classification == Classification::Admissible) return psi;
            attempts.push_back(psi.name() + ": " + to_string(rep.classification));
        } catch (const IndeterminateError& e) {
            attempts.push_back(psi.name() + ": indeterminate (" + e.what() + ")");
        }
    }
    if (attempts.empty()) attempts.push_back("pole order " + std::to_string(fd.pole_order) + " exceeds k_max");
    throw ConstructionFailed("no admissible ridgelet Lambda^" + std::to_string(m) + " G^(k) with k <= " +
                                 std::to_string(k_max) + " for activation '" + eta.name() + "'",
                             std::move(attempts));
}

std::vector<DiagnosisRow> diagnose_table(int m, unsigned workers) {
    if (m < 1 || m > 2) throw std::invalid_argument("diagnose_table supports m = 1 or 2");
    std::vector<DiagnosisRow> rows = {
        {"sigmoid'", sigmoid_derivative(1), {}}, {"sigmoid", sigmoid(), {}},
        {"softplus", softplus(), {}},            {"delta", dirac_delta(0.1), {}},
        {"step", step(), {}},                    {"relu", relu(), {}},
        {"linear", linear(), {}},                {"rbf", gaussian_rbf(), {}},
    };
    parallel_for(rows.size() * 3, workers, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            rows[i / 3].cells[i % 3] = compute_K(RidgeletSpec{m, static_cast<int>(i % 3)}, rows[i / 3].eta);
    });
    return rows;
}

}  // namespace ridgenet
