#include <doctest.h>

#include <chrono>
#include <cmath>

#include "oracles.hpp"
#include "ridgenet/admissibility.hpp"

using namespace ridgenet;

namespace {

using C = Classification;

// (2 pi)^(m-1) int conj(psi^) eta^ / |zeta|^m by trapezoid, for integrands
// that are smooth at the origin
cplx k_trapezoid(const RidgeletSpec& psi, const ActivationSpec& eta) {
    const FourierData fd = fourier_data(eta);
    auto f = [&](double z) {
        if (z == 0.0) z = 1e-9;
        return std::conj(psi.fourier(z)) * fd.regular_at(z) / std::pow(std::abs(z), psi.m);
    };
    return std::pow(two_pi, psi.m - 1) * oracle::trapezoid(f, 14.0, 1e-3);
}

}  // namespace

TEST_SUITE("admissibility") {

TEST_CASE("ridgelet names") {
    CHECK(parse_ridgelet("lg", 1) == RidgeletSpec{1, 0});
    CHECK(parse_ridgelet("lg2", 2) == RidgeletSpec{2, 2});
    CHECK(RidgeletSpec{1, 1}.name() == "lg1");
    CHECK_THROWS_AS(parse_ridgelet("mexhat", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_ridgelet("lg", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_ridgelet("lgx", 1), std::invalid_argument);
}

TEST_CASE("ridgelet transform matches its closed form") {
    // even m: psi real and Gaussian; m = 1 with l = 2 decays like z^-4
    for (const RidgeletSpec psi : {RidgeletSpec{2, 0}, RidgeletSpec{2, 1}, RidgeletSpec{1, 2}, RidgeletSpec{1, 3}}) {
        for (double zeta : {-2.0, -0.5, 0.7, 1.9}) {
            const cplx s = oracle::trapezoid(
                [&](double z) { return oracle::psi_value(psi, z) * std::exp(cplx(0.0, -zeta * z)); }, 400.0, 1.0 / 32);
            INFO(psi.name(), " m=", psi.m, " at ", zeta);
            CHECK(std::abs(s - psi.fourier(zeta)) <= 2e-4);
        }
    }
}

TEST_CASE("ridgelet evaluation matches the oracle") {
    // odd m goes through the tabulated Dawson function, accurate to 1e-12
    for (const RidgeletSpec psi : {RidgeletSpec{1, 0}, RidgeletSpec{1, 1}, RidgeletSpec{1, 2}, RidgeletSpec{2, 0},
                                   RidgeletSpec{2, 2}})
        for (double z = -25.0; z <= 25.0; z += 0.73)
            CHECK(std::abs(psi.eval(z) - oracle::psi_value(psi, z)) <= 2e-12 * std::max(1.0, std::abs(psi.eval(z))));
}

TEST_CASE("admissible cells against closed forms") {
    // K(LambdaG, rbf) = -2 pi^(3/2) i for m = 1 and -4 pi^(5/2) for m = 2
    auto k = compute_K({1, 0}, gaussian_rbf());
    CHECK(k.classification == C::Admissible);
    CHECK(std::abs(k.K - cplx(0.0, -2.0 * std::pow(pi, 1.5))) <= 1e-10);
    k = compute_K({2, 0}, gaussian_rbf());
    CHECK(std::abs(k.K - cplx(-4.0 * std::pow(pi, 2.5), 0.0)) <= 1e-9);

    // exact delta: K(LambdaG) = -2 pi i, K(LambdaG'') = 2 pi i
    k = compute_K({1, 0}, dirac_delta(0.1));
    CHECK(std::abs(k.K - cplx(0.0, -two_pi)) <= 1e-10);
    k = compute_K({1, 2}, dirac_delta(0.1));
    CHECK(std::abs(k.K - cplx(0.0, two_pi)) <= 1e-10);

    // truncated powers: poles cancelled by the ridgelet's zero
    k = compute_K({1, 2}, relu());
    CHECK(k.classification == C::Admissible);
    CHECK(std::abs(k.K - cplx(0.0, -two_pi)) <= 1e-9);
    k = compute_K({1, 1}, step());
    CHECK(k.classification == C::Admissible);
    CHECK(std::abs(k.K - cplx(0.0, two_pi)) <= 1e-9);
}

TEST_CASE("smooth cells against trapezoid") {
    const std::vector<std::pair<RidgeletSpec, ActivationSpec>> cells = {
        {{1, 0}, sigmoid_derivative(1)}, {{1, 2}, sigmoid_derivative(1)}, {{1, 1}, sigmoid()},
        {{1, 2}, softplus()},            {{2, 0}, sigmoid_derivative(1)}, {{2, 2}, gaussian_rbf()},
        {{1, 1}, tanh_activation()}};
    for (const auto& [psi, eta] : cells) {
        const auto rep = compute_K(psi, eta);
        INFO(psi.name(), " m=", psi.m, " ", eta.name());
        CHECK(rep.classification == C::Admissible);
        CHECK(std::abs(rep.K - k_trapezoid(psi, eta)) <= 1e-8 * std::abs(rep.K));
    }
}

TEST_CASE("divergent and vanishing cells") {
    CHECK(compute_K({1, 0}, relu()).classification == C::Divergent);
    CHECK(compute_K({1, 1}, relu()).classification == C::Divergent);
    CHECK(compute_K({1, 0}, step()).classification == C::Divergent);
    CHECK(compute_K({1, 0}, softplus()).classification == C::Divergent);
    for (int l = 0; l < 3; ++l) {
        const auto rep = compute_K({1, l}, linear());
        CHECK(rep.classification == C::Vanishing);
        CHECK(rep.K == cplx{});
    }
    const auto v = compute_K({1, 1}, gaussian_rbf());
    CHECK(v.classification == C::Vanishing);
    CHECK(std::abs(v.K) <= 1e-12);
    CHECK(v.reference_abs > 1.0);
}

TEST_CASE("cutoff trace") {
    const auto rep = compute_K({1, 0}, relu());
    REQUIRE(rep.cutoff_trace.size() == 8);
    CHECK(rep.cutoff_trace.front().cutoff == doctest::Approx(0.1));
    CHECK(rep.cutoff_trace.back().cutoff == doctest::Approx(1e-8));
    // 1/zeta^2 against a nonzero constant: partials grow by about 10 per decade
    for (std::size_t i = 1; i < rep.cutoff_trace.size(); ++i)
        CHECK(rep.cutoff_trace[i].partial_abs > 5.0 * rep.cutoff_trace[i - 1].partial_abs);

    const auto ok = compute_K({1, 2}, relu());
    for (std::size_t i = 1; i < ok.cutoff_trace.size(); ++i)
        CHECK(ok.cutoff_trace[i].partial_abs >= ok.cutoff_trace[i - 1].partial_abs);
}

TEST_CASE("delta pairing flag") {
    // relu carries delta' at the origin; psi^ of Lambda G'' vanishes there to third order, of Lambda G to first
    CHECK_FALSE(compute_K({1, 2}, relu()).delta_pairing_nonzero);
    CHECK(compute_K({1, 0}, relu()).delta_pairing_nonzero);
    CHECK(compute_K({1, 0}, linear()).delta_pairing_nonzero);
    CHECK_FALSE(compute_K({1, 0}, gaussian_rbf()).delta_pairing_nonzero);
}

TEST_CASE("slowly converging integrals are indeterminate") {
    FourierData fd;
    fd.regular = [](double z) { return cplx(std::pow(std::abs(z), -0.6), 0.0); };
    try {
        (void)compute_K({1, 1}, fd);  // odd integrand: cancels exactly, stays determinate
        (void)compute_K({1, 0}, fd);
        FAIL("expected an indeterminate quadrature");
    } catch (const IndeterminateError& e) {
        CHECK(e.trace().size() == 8);
    }
}

TEST_CASE("quadrature parameters are validated") {
    QuadratureParams q;
    q.cutoffs = 2;
    CHECK_THROWS_AS(compute_K({1, 0}, gaussian_rbf(), q), std::invalid_argument);
    q = {};
    q.outer = 0.5;
    CHECK_THROWS_AS(compute_K({1, 0}, gaussian_rbf(), q), std::invalid_argument);
    CHECK_THROWS_AS(compute_K({0, 0}, gaussian_rbf()), std::invalid_argument);
}

TEST_CASE("construction picks the first admissible order") {
    CHECK(construct_admissible(relu(), 1) == RidgeletSpec{1, 2});
    CHECK(construct_admissible(step(), 1) == RidgeletSpec{1, 1});
    CHECK(construct_admissible(softplus(), 1) == RidgeletSpec{1, 2});
    CHECK(construct_admissible(gaussian_rbf(), 2) == RidgeletSpec{2, 0});
    CHECK(construct_admissible(truncated_power(3), 1) == RidgeletSpec{1, 4});
    try {
        (void)construct_admissible(linear(), 1);
        FAIL("linear activation was accepted");
    } catch (const ConstructionFailed& e) {
        CHECK_FALSE(e.attempts().empty());
    }
}

TEST_CASE("diagnosis tables") {
    const std::vector<std::array<const char*, 3>> expected = {
        {"+", "0", "+"},     {"inf", "+", "0"},   {"inf", "inf", "+"}, {"+", "0", "+"},
        {"inf", "+", "0"},   {"inf", "inf", "+"}, {"0", "0", "0"},     {"+", "0", "+"}};
    for (int m : {1, 2}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = diagnose_table(m, 2);
        CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(60));
        REQUIRE(rows.size() == expected.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                INFO("m=", m, " ", rows[r].label, " column ", c);
                CHECK(symbol(rows[r].cells[c].classification) == expected[r][c]);
            }
    }
    CHECK_THROWS_AS(diagnose_table(3), std::invalid_argument);
}

TEST_CASE("classification is independent of the worker count") {
    const auto a = diagnose_table(1, 1);
    const auto b = diagnose_table(1, 4);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(a[r].cells[c].K == b[r].cells[c].K);
}

}  // TEST_SUITE
