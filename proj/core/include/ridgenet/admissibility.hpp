#pragma once

#include <array>
#include <string>
#include <vector>

#include "ridgenet/activation.hpp"
#include "ridgenet/types.hpp"

namespace ridgenet {

/// psi = Lambda^m G^(base_order). Real for even m, purely imaginary for odd m.
struct RidgeletSpec {
    int m = 1;
    int base_order = 0;

    /// psi^(zeta) = i^m |zeta|^m (i zeta)^l sqrt(2 pi) exp(-zeta^2/2).
    cplx fourier(double zeta) const;
    /// conj(psi^(zeta)) / |zeta|^m, finite at zeta = 0.
    cplx reduced_conj_fourier(double zeta) const;
    cplx eval(double z) const;
    /// "lg", "lg1", "lg2", ...
    std::string name() const;

    bool operator==(const RidgeletSpec&) const = default;
};

/// Accepts lg, lg1, lg2 (and lgN for larger N).
RidgeletSpec parse_ridgelet(const std::string& name, int m);
/// Fourier data of psi itself, so psi can stand in for eta.
FourierData ridgelet_fourier_data(const RidgeletSpec& psi);

enum class Classification { Admissible, Vanishing, Divergent };

/// "+", "0" or "inf".
std::string symbol(Classification c);
/// "admissible", "vanishing" or "divergent".
std::string to_string(Classification c);

struct QuadratureParams {
    double outer = 50.0;       // R
    int cutoffs = 8;           // eps_n = 10^-n, n = 1..cutoffs
    double tol_zero = 1e-8;    // relative to the absolute-value integral
    double tol_conv = 1e-6;    // Cauchy tolerance of the last two partials, relative
    double rel_tol = 1e-12;    // per-band Gauss-Kronrod tolerance
    double decay_ratio = 0.5;  // increments shrinking by at least this factor count as convergent
};

struct AdmissibilityReport {
    cplx K{};
    Classification classification = Classification::Vanishing;
    /// Partial integrals over eps_n <= |zeta| <= R, n = 1..cutoffs.
    std::vector<TraceEntry> cutoff_trace;
    /// (2 pi)^(m-1) int |conj(psi^) eta^_reg| / |zeta|^m over the truncated domain.
    double reference_abs = 0.0;
    /// True when a delta^(j) term of eta^ pairs non-trivially with psi^
    /// (j >= m + base_order).
    bool delta_pairing_nonzero = false;
};

AdmissibilityReport compute_K(const RidgeletSpec& psi, const FourierData& eta_hat, const QuadratureParams& q = {});
AdmissibilityReport compute_K(const RidgeletSpec& psi, const ActivationSpec& eta, const QuadratureParams& q = {});

/// Smallest k' >= pole_order(eta) with (Lambda^m G^(k'), eta) admissible.
RidgeletSpec construct_admissible(const ActivationSpec& eta, int m, int k_max = 8, const QuadratureParams& q = {});

struct DiagnosisRow {
    std::string label;
    ActivationSpec eta;
    std::array<AdmissibilityReport, 3> cells;  // Lambda^m G, G', G''
};

/// Eight activations against Lambda^m G, Lambda^m G', Lambda^m G''.
std::vector<DiagnosisRow> diagnose_table(int m, unsigned workers = 0);

}  // namespace ridgenet
