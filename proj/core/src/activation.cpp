#include "ridgenet/activation.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "ridgenet/special_functions.hpp"

namespace ridgenet {

namespace {

constexpr double inv_sqrt_two_pi = 0.39894228040143267794;
constexpr double sqrt_two_pi = 2.50662827463100050242;
constexpr double gaussian_cutoff = 13.0;

double logistic(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// sigma^(k) = P_k(s) with s = sigma(z); P_1 = s(1-s), P_{k+1} = P_k'(s) s(1-s).
// Coefficients in powers of s.
std::vector<double> sigmoid_derivative_poly(int k) {
    std::vector<double> p{0.0, 1.0, -1.0};
    for (int n = 1; n < k; ++n) {
        std::vector<double> dp(p.size() - 1);
        for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = static_cast<double>(i) * p[i];
        std::vector<double> q(dp.size() + 2, 0.0);
        for (std::size_t i = 0; i < dp.size(); ++i) {
            q[i + 1] += dp[i];
            q[i + 2] -= dp[i];
        }
        p = std::move(q);
    }
    return p;
}

double sigmoid_derivative_value(int k, double z) {
    // cache the last polynomial; k is tiny in practice
    thread_local int cached_k = -1;
    thread_local std::vector<double> poly;
    if (k != cached_k) {
        poly = sigmoid_derivative_poly(k);
        cached_k = k;
    }
    // sigma^(k)(z) = (-1)^(k+1) sigma^(k)(-z); evaluating at -|z| keeps s small
    const double s = logistic(-std::abs(z));
    double acc = 0.0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * s + poly[i];
    return (z > 0 && k % 2 == 0) ? -acc : acc;
}

int factorial(int k) {
    int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

cplx ipow(int k) {
    static constexpr cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

void require_order(int k, int lo, const char* what) {
    if (k < lo) throw std::invalid_argument(std::string(what) + " order out of range");
}

void require_width(double w) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("mollifier width must be positive");
}

}  // namespace

ActivationSpec truncated_power(int k) {
    require_order(k, 0, "truncated power");
    return {ActivationKind::TruncatedPower, k};
}
ActivationSpec relu() { return truncated_power(1); }
ActivationSpec step() { return truncated_power(0); }
ActivationSpec sigmoid() { return {ActivationKind::Sigmoid, 0}; }
ActivationSpec sigmoid_derivative(int k) {
    require_order(k, 1, "sigmoid derivative");
    return {ActivationKind::SigmoidDeriv, k};
}
ActivationSpec softplus() { return {ActivationKind::Softplus, 0}; }
ActivationSpec tanh_activation() { return {ActivationKind::Tanh, 0}; }
ActivationSpec gaussian_rbf() { return {ActivationKind::GaussianRBF, 0}; }
ActivationSpec gaussian_derivative_activation(int k) {
    require_order(k, 1, "Gaussian derivative");
    return {ActivationKind::GaussianDeriv, k};
}
ActivationSpec dirac_delta(double width) {
    require_width(width);
    return {ActivationKind::DiracDelta, 0, width};
}
ActivationSpec dirac_derivative(int k, double width) {
    require_order(k, 1, "delta derivative");
    require_width(width);
    return {ActivationKind::DiracDerivApprox, k, width};
}
ActivationSpec linear() { return {ActivationKind::Linear, 0}; }

double ActivationSpec::eval(double z) const {
    const double t = dilation * z;
    switch (kind) {
        case ActivationKind::TruncatedPower:
            if (t <= 0.0) return 0.0;
            return order == 0 ? 1.0 : (order == 1 ? t : std::pow(t, order));
        case ActivationKind::Sigmoid: return logistic(t);
        case ActivationKind::SigmoidDeriv: return sigmoid_derivative_value(order, t);
        case ActivationKind::Softplus: return std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t)));
        case ActivationKind::Tanh: return std::tanh(t);
        case ActivationKind::GaussianRBF: return gaussian(t);
        case ActivationKind::GaussianDeriv: return gaussian_derivative(order, t);
        case ActivationKind::DiracDelta: return gaussian(t / width) * inv_sqrt_two_pi / width;
        case ActivationKind::DiracDerivApprox:
            return gaussian_derivative(order, t / width) * inv_sqrt_two_pi / std::pow(width, order + 1);
        case ActivationKind::Linear: return t;
    }
    return 0.0;
}

std::string ActivationSpec::name() const {
    std::string base;
    switch (kind) {
        case ActivationKind::TruncatedPower:
            base = order == 0 ? "step" : order == 1 ? "relu" : "tpow:" + std::to_string(order);
            break;
        case ActivationKind::Sigmoid: base = "sigmoid"; break;
        case ActivationKind::SigmoidDeriv: base = "dsigmoid:" + std::to_string(order); break;
        case ActivationKind::Softplus: base = "softplus"; break;
        case ActivationKind::Tanh: base = "tanh"; break;
        case ActivationKind::GaussianRBF: base = "rbf"; break;
        case ActivationKind::GaussianDeriv: base = "drbf:" + std::to_string(order); break;
        case ActivationKind::DiracDelta: base = "delta"; break;
        case ActivationKind::DiracDerivApprox: base = "ddelta:" + std::to_string(order); break;
        case ActivationKind::Linear: base = "linear"; break;
    }
    if (dilation != 1.0) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "@%.17g", dilation);
        base += buf;
    }
    return base;
}

ActivationSpec parse_activation(const std::string& full_name, double delta_width) {
    std::string name = full_name;
    double dilation = 1.0;
    if (const auto at = name.find('@'); at != std::string::npos) {
        try {
            std::size_t used = 0;
            dilation = std::stod(name.substr(at + 1), &used);
            if (used != name.size() - at - 1 || !(dilation > 0.0)) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad dilation in activation name '" + full_name + "'");
        }
        name = name.substr(0, at);
    }
    std::string head = name;
    int k = -1;
    if (const auto colon = name.find(':'); colon != std::string::npos) {
        head = name.substr(0, colon);
        const std::string digits = name.substr(colon + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
            throw std::invalid_argument("bad order in activation name '" + full_name + "'");
        k = std::stoi(digits);
    }
    auto no_order = [&] {
        if (k >= 0) throw std::invalid_argument("activation '" + head + "' takes no order");
    };
    auto with_order = [&] {
        if (k < 0) throw std::invalid_argument("activation '" + head + "' needs an order, e.g. " + head + ":1");
        return k;
    };
    ActivationSpec spec;
    if (head == "relu") no_order(), spec = relu();
    else if (head == "step") no_order(), spec = step();
    else if (head == "tpow") spec = truncated_power(with_order());
    else if (head == "sigmoid") no_order(), spec = sigmoid();
    else if (head == "dsigmoid") spec = sigmoid_derivative(with_order());
    else if (head == "softplus") no_order(), spec = softplus();
    else if (head == "tanh") no_order(), spec = tanh_activation();
    else if (head == "rbf") no_order(), spec = gaussian_rbf();
    else if (head == "drbf") spec = gaussian_derivative_activation(with_order());
    else if (head == "delta") no_order(), spec = dirac_delta(delta_width);
    else if (head == "ddelta") spec = dirac_derivative(with_order(), delta_width);
    else if (head == "linear") no_order(), spec = linear();
    else
        throw std::invalid_argument("unknown activation '" + full_name +
                                    "' (expected relu, step, tpow:k, sigmoid, dsigmoid:k, softplus, tanh, rbf, "
                                    "drbf:k, delta, ddelta:k, linear)");
    spec.dilation = dilation;
    return spec;
}

FourierData fourier_data(const ActivationSpec& spec) {
    // Convention: eta^(zeta) = int eta(z) exp(-i z zeta) dz.
    FourierData fd;
    const int k = spec.order;
    switch (spec.kind) {
        case ActivationKind::TruncatedPower: {
            // Gel'fand-Shilov: k!/(i zeta)^(k+1) + pi i^k delta^(k)
            const double kf = factorial(k);
            fd.regular = [k, kf](double z) { return kf / std::pow(cplx(0.0, z), k + 1); };
            fd.delta_coeffs.assign(static_cast<std::size_t>(k) + 1, cplx{});
            fd.delta_coeffs[k] = pi * ipow(k);
            fd.pole_order = k + 1;
            break;
        }
        case ActivationKind::Sigmoid:
            // sigma = 1/2 + tanh(z/2)/2 and tanh^ = -i pi / sinh(pi zeta / 2)
            fd.regular = [](double z) { return cplx(0.0, -pi / std::sinh(pi * z)); };
            fd.delta_coeffs = {pi};
            fd.pole_order = 1;
            break;
        case ActivationKind::SigmoidDeriv:
            // (i zeta)^k sigma^ ; the delta part is annihilated by zeta^k
            fd.regular = [k](double z) {
                const double r = z == 0.0 ? 1.0 : pi * z / std::sinh(pi * z);
                return std::pow(cplx(0.0, z), k - 1) * r;
            };
            fd.pole_order = 0;
            break;
        case ActivationKind::Softplus:
            // softplus' = sigma, softplus = z_+ + even Schwartz part
            fd.regular = [](double z) { return cplx(-pi / (z * std::sinh(pi * z)), 0.0); };
            fd.delta_coeffs = {0.0, cplx(0.0, pi)};
            fd.pole_order = 2;
            break;
        case ActivationKind::Tanh:
            fd.regular = [](double z) { return cplx(0.0, -pi / std::sinh(0.5 * pi * z)); };
            fd.pole_order = 1;
            break;
        case ActivationKind::GaussianRBF:
            fd.regular = [](double z) { return cplx(sqrt_two_pi * gaussian(z), 0.0); };
            break;
        case ActivationKind::GaussianDeriv:
            fd.regular = [k](double z) { return std::pow(cplx(0.0, z), k) * (sqrt_two_pi * gaussian(z)); };
            break;
        case ActivationKind::DiracDelta:
            // exact delta limit of the mollifier
            fd.regular = [](double) { return cplx(1.0, 0.0); };
            break;
        case ActivationKind::DiracDerivApprox:
            fd.regular = [k](double z) { return std::pow(cplx(0.0, z), k); };
            break;
        case ActivationKind::Linear:
            fd.delta_coeffs = {0.0, cplx(0.0, two_pi)};
            break;
    }
    if (spec.dilation != 1.0) {
        // eta(d z)^ = (1/d) base^(zeta/d); delta^(j) coefficients pick up d^j
        const double d = spec.dilation;
        if (fd.regular) {
            auto base = std::move(fd.regular);
            fd.regular = [base, d](double z) { return base(z / d) / d; };
        }
        for (std::size_t j = 0; j < fd.delta_coeffs.size(); ++j)
            fd.delta_coeffs[j] *= std::pow(d, static_cast<double>(j));
    }
    return fd;
}

ScaledActivation derivative_spec(const ActivationSpec& spec) {
    ActivationSpec out = spec;
    double mult = 1.0;
    switch (spec.kind) {
        case ActivationKind::TruncatedPower:
            if (spec.order == 0)
                throw NotImplementedError("derivative of the unit step is the Dirac delta; use dirac_delta(width)");
            out.order = spec.order - 1;
            mult = spec.order;
            break;
        case ActivationKind::Sigmoid: out = sigmoid_derivative(1); break;
        case ActivationKind::SigmoidDeriv: out.order = spec.order + 1; break;
        case ActivationKind::Softplus: out = sigmoid(); break;
        case ActivationKind::Tanh:
            // tanh' = 1 - tanh^2 = 4 sigma'(2z)
            out = sigmoid_derivative(1);
            out.dilation = 2.0;
            mult = 4.0;
            break;
        case ActivationKind::GaussianRBF: out = gaussian_derivative_activation(1); break;
        case ActivationKind::GaussianDeriv: out.order = spec.order + 1; break;
        case ActivationKind::DiracDelta: out = dirac_derivative(1, spec.width); break;
        case ActivationKind::DiracDerivApprox: out.order = spec.order + 1; break;
        case ActivationKind::Linear:
            throw NotImplementedError("derivative of the linear activation is a constant, which is not in the zoo");
    }
    if (spec.kind != ActivationKind::Tanh) out.dilation = spec.dilation;
    else out.dilation = 2.0 * spec.dilation;
    // chain rule for the inner dilation
    mult *= spec.dilation;
    return {out, mult};
}

bool has_gaussian_decay(const ActivationSpec& spec) {
    switch (spec.kind) {
        case ActivationKind::GaussianRBF:
        case ActivationKind::GaussianDeriv:
        case ActivationKind::DiracDelta:
        case ActivationKind::DiracDerivApprox: return true;
        default: return false;
    }
}

double support_radius(const ActivationSpec& spec) {
    if (!has_gaussian_decay(spec)) return std::numeric_limits<double>::infinity();
    const bool mollified =
        spec.kind == ActivationKind::DiracDelta || spec.kind == ActivationKind::DiracDerivApprox;
    return gaussian_cutoff * (mollified ? spec.width : 1.0) / spec.dilation;
}

}  // namespace ridgenet
