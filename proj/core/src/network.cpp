#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kernels.hpp"
#include "ridgenet/parallel.hpp"
#include "ridgenet/ridgelet.hpp"

namespace ridgenet {

void NetworkDescription::add_unit(std::span<const double> a_j, double b_j, cplx c_j) {
    if (a_j.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("unit weight has the wrong dimension");
    a.insert(a.end(), a_j.begin(), a_j.end());
    b.push_back(b_j);
    c.push_back(c_j);
}

void NetworkDescription::validate() const {
    if (m < 1) throw std::invalid_argument("network dimension must be >= 1");
    if (b.empty()) throw std::invalid_argument("network has no units");
    if (a.size() != b.size() * static_cast<std::size_t>(m) || c.size() != b.size())
        throw std::invalid_argument("inconsistent unit arrays");
    auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(a.begin(), a.end(), finite) || !std::all_of(b.begin(), b.end(), finite))
        throw std::invalid_argument("non-finite unit parameter");
    for (const cplx& v : c)
        if (!finite(v.real()) || !finite(v.imag())) throw std::invalid_argument("non-finite unit coefficient");
    if (!finite(K.real()) || !finite(K.imag()) || K == cplx{}) throw std::invalid_argument("K must be finite and nonzero");
}

namespace {

// Maximal runs of consecutive units sharing the weight vector a. When the
// biases form an increasing arithmetic progression the Gaussian kernels can
// restrict themselves to a window.
struct Row {
    std::size_t begin = 0;
    std::size_t end = 0;
    double db = 0.0;
    bool uniform = false;
};

std::vector<Row> split_rows(const NetworkDescription& net) {
    const auto m = static_cast<std::size_t>(net.m);
    std::vector<Row> rows;
    std::size_t i = 0;
    const std::size_t n = net.size();
    while (i < n) {
        std::size_t e = i + 1;
        while (e < n && std::equal(net.a.begin() + e * m, net.a.begin() + (e + 1) * m, net.a.begin() + i * m)) ++e;
        Row r{i, e, 0.0, false};
        if (e - i >= 2) {
            r.db = (net.b[e - 1] - net.b[i]) / static_cast<double>(e - 1 - i);
            r.uniform = r.db > 0.0;
            for (std::size_t k = i; r.uniform && k < e; ++k) {
                const double nominal = net.b[i] + static_cast<double>(k - i) * r.db;
                r.uniform = std::abs(net.b[k] - nominal) <= 1e-14 * std::max(1.0, std::abs(net.b[k]));
            }
        }
        rows.push_back(r);
        i = e;
    }
    return rows;
}

cplx pairwise_sum(const cplx* v, std::size_t n) {
    if (n <= 8) {
        cplx s{};
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

class Evaluator {
public:
    explicit Evaluator(const NetworkDescription& net) : net_(net), rows_(split_rows(net)) {
        net.validate();
        gaussian_ = has_gaussian_decay(net.eta);
        if (gaussian_) family_ = detail::gaussian_family(net.eta);
    }

    std::size_t rows() const { return rows_.size(); }

    // sum over all units at point x, row sums reduced pairwise
    cplx operator()(const double* x, std::vector<cplx>& scratch) const {
        scratch.resize(rows_.size());
        const auto m = static_cast<std::size_t>(net_.m);
        detail::with_activation(net_.eta, [&](auto eta) {
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const Row& row = rows_[r];
                const double* a = net_.a.data() + row.begin * m;
                double z0 = 0.0;
                for (std::size_t d = 0; d < m; ++d) z0 += a[d] * x[d];
                cplx s{};
                if (gaussian_ && row.uniform) {
                    const double* bp = net_.b.data() + row.begin;
                    const cplx* cp = net_.c.data() + row.begin;
                    family_.run(
                        z0, bp[0], row.db, row.end - row.begin, [&](std::size_t j) { return bp[j]; },
                        [&](std::size_t j, double v) { s += cp[j] * v; });
                } else if (gaussian_) {
                    const double rad = family_.radius();
                    for (std::size_t k = row.begin; k < row.end; ++k) {
                        const double z = z0 - net_.b[k];
                        if (std::abs(z) <= rad) s += net_.c[k] * family_(z);
                    }
                } else {
                    for (std::size_t k = row.begin; k < row.end; ++k) s += net_.c[k] * eta(z0 - net_.b[k]);
                }
                scratch[r] = s;
            }
        });
        return pairwise_sum(scratch.data(), scratch.size());
    }

private:
    const NetworkDescription& net_;
    std::vector<Row> rows_;
    bool gaussian_ = false;
    detail::GaussianFamily family_;
};

}  // namespace

std::vector<cplx> evaluate_network_raw(const NetworkDescription& net, const Grid1D& x, unsigned workers) {
    if (net.m != 1) throw std::invalid_argument("network input dimension is " + std::to_string(net.m) + ", not 1");
    const Evaluator ev(net);
    std::vector<cplx> out(x.size());
    parallel_for(x.size(), workers, [&](std::size_t b, std::size_t e) {
        std::vector<cplx> scratch;
        for (std::size_t i = b; i < e; ++i) {
            const double p = x[i];
            out[i] = ev(&p, scratch);
        }
    });
    return out;
}

std::vector<cplx> evaluate_network_raw(const NetworkDescription& net, const Grid1D& gx, const Grid1D& gy,
                                       unsigned workers) {
    if (net.m != 2) throw std::invalid_argument("network input dimension is " + std::to_string(net.m) + ", not 2");
    const Evaluator ev(net);
    const std::size_t nx = gx.size();
    std::vector<cplx> out(nx * gy.size());
    parallel_for(out.size(), workers, [&](std::size_t b, std::size_t e) {
        std::vector<cplx> scratch;
        for (std::size_t i = b; i < e; ++i) {
            const double p[2] = {gx[i % nx], gy[i / nx]};
            out[i] = ev(p, scratch);
        }
    });
    return out;
}

SampledSignal evaluate_network(const NetworkDescription& net, const Grid1D& x, unsigned workers) {
    const auto raw = evaluate_network_raw(net, x, workers);
    std::vector<double> v(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) v[i] = (raw[i] / net.K).real();
    return SampledSignal(x, std::move(v));
}

SampledImage evaluate_network(const NetworkDescription& net, const Grid1D& gx, const Grid1D& gy, unsigned workers) {
    const auto raw = evaluate_network_raw(net, gx, gy, workers);
    std::vector<double> v(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) v[i] = (raw[i] / net.K).real();
    return SampledImage(gx, gy, std::move(v));
}

double evaluate_network(const NetworkDescription& net, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(net.m))
        throw std::invalid_argument("point dimension " + std::to_string(x.size()) + " does not match network input " +
                                    std::to_string(net.m));
    const Evaluator ev(net);
    std::vector<cplx> scratch;
    return (ev(x.data(), scratch) / net.K).real();
}

}  // namespace ridgenet
