#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ridgenet/admissibility.hpp"
#include "ridgenet/analysis.hpp"
#include "ridgenet/experiments.hpp"
#include "ridgenet/io.hpp"
#include "ridgenet/parallel.hpp"
#include "ridgenet/phantom.hpp"
#include "ridgenet/radon.hpp"
#include "ridgenet/ridgelet.hpp"

namespace fs = std::filesystem;

namespace ridgenet::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GridFlags {
    std::optional<double> a_range, a_step, b_range, b_step;
    double x_step = 0.01;

    void add(CLI::App* app, bool with_x) {
        auto positive = CLI::PositiveNumber;
        app->add_option("--a-range", a_range, "half width of the a-box [-A, A]")->check(positive);
        app->add_option("--a-step", a_step, "a lattice step")->check(positive);
        app->add_option("--b-range", b_range, "half width of the b-range [-B, B]")->check(positive);
        app->add_option("--b-step", b_step, "b lattice step")->check(positive);
        if (with_x) app->add_option("--x-step", x_step, "sample step of the 1D target on [-1, 1]")->capture_default_str()->check(positive);
    }

    BoxSpec box(BoxSpec defaults) const {
        if (a_range) defaults.a_range = *a_range;
        if (a_step) defaults.a_step = *a_step;
        if (b_range) defaults.b_range = *b_range;
        if (b_step) defaults.b_step = *b_step;
        return defaults;
    }
};

struct Common {
    std::string out_dir = ".";
    unsigned workers = 0;

    void add(CLI::App* app) {
        app->add_option("--out-dir", out_dir, "directory for output files")->capture_default_str();
        app->add_option("--workers", workers, "worker threads (default: RIDGENET_WORKERS or all cores)");
    }

    fs::path dir() const {
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());
        return fs::path(out_dir);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void put_report(Metrics& m, const AdmissibilityReport& rep) {
    m.emplace_back("K_re", rep.K.real());
    m.emplace_back("K_im", rep.K.imag());
    m.emplace_back("classification", to_string(rep.classification));
}

SampledSignal load_1d_target(const std::string& target, double x_step) {
    if (target == "sine") return sine_signal(sine_axis(x_step));
    if (target == "zero") return SampledSignal(sine_axis(x_step));
    if (target == "gaussian") {
        const Grid1D g = sine_axis(x_step);
        std::vector<double> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = std::exp(-0.5 * g[i] * g[i] / (0.3 * 0.3));
        return SampledSignal(g, std::move(v));
    }
    if (!fs::exists(target))
        throw UsageError("target '" + target + "' is neither sine, gaussian, zero nor an existing CSV file");
    return read_signal_csv(target);
}

SampledImage load_2d_target(const std::string& target, std::size_t n) {
    if (target == "shepp-logan") return shepp_logan(n);
    const Grid1D axis = unit_square_axis(n);
    if (target == "blob") return gaussian_blob(axis, axis, {0.0, 0.0}, 0.25);
    if (target == "zero") return SampledImage(axis, axis);
    if (!fs::exists(target))
        throw UsageError("target '" + target + "' is neither shepp-logan, blob, zero nor an existing file");
    if (fs::path(target).extension() == ".pgm") return read_pgm(target);
    return read_image_csv(target);
}

void print_trace(std::ostream& err, const std::vector<std::string>& attempts) {
    for (const auto& a : attempts) err << "  tried " << a << '\n';
}

// ---------------------------------------------------------------- diagnose

int cmd_diagnose(int m, const std::string& csv, unsigned workers, std::ostream& out) {
    const auto rows = diagnose_table(m, workers);
    const std::string psi_labels[3] = {"Lambda^m G", "Lambda^m G'", "Lambda^m G''"};
    out << "m = " << m << '\n' << std::left << std::setw(12) << "eta";
    for (const auto& l : psi_labels) out << std::setw(15) << l;
    out << '\n';
    for (const auto& r : rows) {
        out << std::setw(12) << r.label;
        for (const auto& c : r.cells) out << std::setw(15) << symbol(c.classification);
        out << '\n';
    }
    if (!csv.empty()) {
        std::ostringstream os;
        os << "activation,psi,classification,K_re,K_im\n";
        for (const auto& r : rows)
            for (int j = 0; j < 3; ++j) {
                const auto& c = r.cells[static_cast<std::size_t>(j)];
                os << r.eta.name() << ',' << RidgeletSpec{m, j}.name() << ',' << to_string(c.classification) << ','
                   << format_double(c.K.real()) << ',' << format_double(c.K.imag()) << '\n';
            }
        std::ofstream f(csv);
        if (!(f << os.str())) throw IoError("cannot write '" + csv + "'");
    }
    return exit_ok;
}

// ---------------------------------------------------------------- phantom

int cmd_phantom(const std::string& kind, std::size_t n, double width, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) throw UsageError("--out is required");
    const fs::path p(out_path);
    if (kind == "sine") {
        write_signal_csv(p, sine_signal(sine_axis(2.0 / static_cast<double>(n - 1))));
    } else {
        const Grid1D axis = unit_square_axis(n);
        SampledImage img = kind == "shepp-logan" ? shepp_logan(n) : gaussian_blob(axis, axis, {0.0, 0.0}, width);
        if (p.extension() == ".csv") write_image_csv(p, img);
        else write_pgm(p, img);
    }
    out << "wrote " << p.string() << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- transform

int cmd_transform(const std::string& target, const std::string& psi_name, std::size_t n, const std::string& method,
                  const GridFlags& gf, const Common& common, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool two_d = target == "shepp-logan" || target == "blob" ||
                       (fs::exists(target) && fs::path(target).extension() == ".pgm");
    Metrics m{{"command", std::string("transform")}};
    fs::path dir = common.dir();
    if (two_d) {
        const SampledImage f = load_2d_target(target, n);
        const RidgeletSpec psi = parse_ridgelet(psi_name, 2);
        const auto T = forward_2d(f, psi, gf.box(desk_box_2d()).make(2), common.workers);
        write_coefficients_csv(dir / "coefficients.csv", T);
        m.emplace_back("cells", static_cast<long long>(T.values().size()));
    } else {
        const SampledSignal f = load_1d_target(target, gf.x_step);
        const RidgeletSpec psi = parse_ridgelet(psi_name, 1);
        const ParamGrid grid = gf.box(sine_box()).make(1);
        const auto T = method == "fourier-slice" ? forward_fourier_slice(f, psi, grid, common.workers)
                                                 : forward_1d(f, psi, grid, common.workers);
        write_coefficients_csv(dir / "coefficients.csv", T);
        m.emplace_back("cells", static_cast<long long>(T.values().size()));
    }
    m.emplace_back("psi", psi_name);
    m.emplace_back("wall_time_s", seconds_since(t0));
    write_metrics_json(dir / "metrics.json", m);
    out << "wrote " << (dir / "coefficients.csv").string() << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- reconstruct1d

int cmd_reconstruct1d(const std::string& target, const std::string& psi_name, const std::string& eta_name,
                      const GridFlags& gf, const Common& common, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const BoxSpec box = gf.box(sine_box());
    const SampledSignal f = load_1d_target(target, gf.x_step);
    const RidgeletSpec psi = parse_ridgelet(psi_name, 1);
    const ActivationSpec eta = parse_activation(eta_name, box.b_step);
    const fs::path dir = common.dir();
    const auto r = reconstruct_1d(f, psi, eta, box.make(1), common.workers);
    const auto lp = low_pass_report(r.reconstruction, f);

    write_coefficients_csv(dir / "coefficients.csv", r.coefficients);
    write_signal_csv(dir / "reconstruction.csv", r.reconstruction);
    Metrics m{{"command", std::string("reconstruct1d")}, {"psi", psi.name()}, {"eta", eta.name()}};
    m.emplace_back("relative_l2", r.relative_l2);
    m.emplace_back("max_abs_err", r.max_abs_err);
    put_report(m, r.report);
    m.emplace_back("normalization", to_string(r.normalization));
    m.emplace_back("gain_re", r.gain.real());
    m.emplace_back("gain_im", r.gain.imag());
    m.emplace_back("high_band_ratio", lp.high_band_ratio);
    m.emplace_back("low_band_correlation", lp.low_band_correlation);
    m.emplace_back("wall_time_s", seconds_since(t0));
    write_metrics_json(dir / "metrics.json", m);
    out << "(" << psi.name() << ", " << eta.name() << "): " << to_string(r.report.classification)
        << ", relative L2 error " << format_double(r.relative_l2) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- reconstruct2d

void print_full_estimate(const ParamGrid& grid, std::size_t n, std::ostream& out) {
    const double units = static_cast<double>(grid.size());
    const double pixels = static_cast<double>(n * n);
    out << "full scale: " << grid.size() << " parameter cells x " << n * n << " pixels = " << std::scientific
        << std::setprecision(2) << units * pixels << " unit-pixel products per pass (forward and dual each)"
        << std::defaultfloat << std::setprecision(6) << '\n';
}

int cmd_reconstruct2d(const std::string& target, std::size_t n, bool full, const std::string& psi_name,
                      const std::string& eta_name, const GridFlags& gf, const Common& common, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    BoxSpec defaults = desk_box_2d();
    if (full) {
        n = 256;
        defaults.a_range = 300.0;
    }
    const BoxSpec box = gf.box(defaults);
    const ParamGrid grid = box.make(2);
    if (full) print_full_estimate(grid, n, out);
    const SampledImage f = load_2d_target(target, n);
    const RidgeletSpec psi = parse_ridgelet(psi_name, 2);
    const ActivationSpec eta = parse_activation(eta_name, box.b_step);
    const fs::path dir = common.dir();
    const auto r = reconstruct_2d(f, psi, eta, grid, common.workers);

    write_pgm(dir / "reconstruction.pgm", r.reconstruction);
    Metrics m{{"command", std::string("reconstruct2d")}, {"psi", psi.name()}, {"eta", eta.name()}};
    m.emplace_back("n", static_cast<long long>(f.nx()));
    m.emplace_back("relative_l2", r.relative_l2);
    m.emplace_back("max_abs_err", r.max_abs_err);
    put_report(m, r.report);
    m.emplace_back("normalization", to_string(r.normalization));
    m.emplace_back("high_band_ratio", r.high_band_ratio);
    m.emplace_back("wall_time_s", seconds_since(t0));
    write_metrics_json(dir / "metrics.json", m);
    out << "(" << psi.name() << ", " << eta.name() << "): " << to_string(r.report.classification)
        << ", interior relative L2 error " << format_double(r.relative_l2) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- synth

int cmd_synth(const std::string& target, const std::string& psi_name, const std::string& eta_name,
              const std::string& network_in, const GridFlags& gf, const Common& common, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const BoxSpec box = gf.box(sine_box());
    const SampledSignal f = load_1d_target(target, gf.x_step);
    const fs::path dir = common.dir();
    Metrics m{{"command", std::string("synth")}};
    NetworkDescription net;
    if (!network_in.empty()) {
        net = read_network(network_in);
        m.emplace_back("eta", net.eta.name());
        m.emplace_back("K_re", net.K.real());
        m.emplace_back("K_im", net.K.imag());
    } else {
        const ActivationSpec eta = parse_activation(eta_name, box.b_step);
        std::optional<RidgeletSpec> psi;
        if (!psi_name.empty()) psi = parse_ridgelet(psi_name, 1);
        auto s = synthesize(f, eta, box.make(1), psi, common.workers);
        net = std::move(s.network);
        write_network(dir / "network.ridgenet", net);
        m.emplace_back("psi", s.psi.name());
        m.emplace_back("eta", eta.name());
        put_report(m, s.report);
    }
    const SampledSignal g = evaluate_network(net, f.grid(), common.workers);
    write_signal_csv(dir / "eval.csv", g);
    m.emplace_back("units", static_cast<long long>(net.size()));
    m.emplace_back("relative_l2", relative_l2_error(g, f));
    m.emplace_back("max_abs_err", max_abs_error(g.values(), f.values()));
    m.emplace_back("wall_time_s", seconds_since(t0));
    write_metrics_json(dir / "metrics.json", m);
    out << "network with " << net.size() << " units, relative L2 error "
        << format_double(relative_l2_error(g, f)) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- radoncheck

int cmd_radoncheck(const std::string& target, std::size_t n, const std::string& psi_name, const std::string& eta_name,
                   const GridFlags& gf, const Common& common, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const BoxSpec box = gf.box(desk_box_2d());
    const SampledImage f = load_2d_target(target, n);
    const RidgeletSpec psi = parse_ridgelet(psi_name, 2);
    const ActivationSpec eta = parse_activation(eta_name, box.b_step);
    const fs::path dir = common.dir();
    const auto r = ridgelet_vs_fbp(f, psi, eta, box.make(2), common.workers);
    write_pgm(dir / "fbp.pgm", r.fbp);
    write_pgm(dir / "ridgelet.pgm", r.ridgelet);
    Metrics m{{"command", std::string("radoncheck")}, {"psi", psi.name()}, {"eta", eta.name()}};
    m.emplace_back("n", static_cast<long long>(f.nx()));
    m.emplace_back("deviation", r.deviation);
    m.emplace_back("fbp_relative_l2", relative_l2_error_interior(r.fbp, f, 0.1));
    m.emplace_back("ridgelet_relative_l2", relative_l2_error_interior(r.ridgelet, f, 0.1));
    m.emplace_back("relative_l2", relative_l2_error_interior(r.ridgelet, f, 0.1));
    m.emplace_back("max_abs_err", max_abs_error(r.ridgelet.values(), f.values()));
    put_report(m, r.report);
    m.emplace_back("wall_time_s", seconds_since(t0));
    write_metrics_json(dir / "metrics.json", m);
    out << "ridgelet vs filtered backprojection: relative deviation " << format_double(r.deviation) << '\n';
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ridgelet transforms and backprop-free network synthesis"};
    app.require_subcommand(1);

    int diag_m = 1;
    std::string diag_csv;
    unsigned diag_workers = 0;
    auto* diag = app.add_subcommand("diagnose", "admissibility table for the activation zoo");
    diag->add_option("--m", diag_m, "input dimension")->capture_default_str()->check(CLI::Range(1, 2));
    diag->add_option("--csv", diag_csv, "also write activation,psi,classification,K_re,K_im rows");
    diag->add_option("--workers", diag_workers, "worker threads");

    std::string ph_kind = "shepp-logan", ph_out;
    std::size_t ph_n = 256;
    double ph_width = 0.25;
    auto* phantom = app.add_subcommand("phantom", "write a test target");
    phantom->add_option("--kind", ph_kind, "shepp-logan, blob or sine")->capture_default_str()
        ->check(CLI::IsMember({"shepp-logan", "blob", "sine"}));
    phantom->add_option("--n", ph_n, "pixels per side (samples for sine)")->capture_default_str()->check(CLI::Range(16, 4096));
    phantom->add_option("--width", ph_width, "blob width")->capture_default_str()->check(CLI::PositiveNumber);
    phantom->add_option("--out", ph_out, "output .pgm or .csv")->required();

    std::string target, psi_name, eta_name, method = "direct", network_in;
    std::size_t n = 64;
    bool full = false;
    GridFlags gf;
    Common common;

    auto* transform = app.add_subcommand("transform", "forward ridgelet transform to coefficients.csv");
    transform->add_option("--target", target, "sine, gaussian, zero, shepp-logan, blob or a file")->required();
    transform->add_option("--psi", psi_name, "lg (default), lg1 or lg2");
    transform->add_option("--n", n, "image size for 2D targets")->capture_default_str()->check(CLI::Range(16, 4096));
    transform->add_option("--method", method, "direct or fourier-slice (1D)")->capture_default_str()
        ->check(CLI::IsMember({"direct", "fourier-slice"}));
    gf.add(transform, true);
    common.add(transform);

    auto* rec1 = app.add_subcommand("reconstruct1d", "forward and dual transform of a 1D target");
    rec1->add_option("--target", target, "sine (default), gaussian, zero or a CSV file");
    rec1->add_option("--psi", psi_name, "lg (default), lg1 or lg2");
    rec1->add_option("--eta", eta_name, "activation name (default dsigmoid:1)");
    gf.add(rec1, true);
    common.add(rec1);

    auto* rec2 = app.add_subcommand("reconstruct2d", "forward and dual transform of an image");
    rec2->add_option("--target", target, "shepp-logan (default), blob, zero or a .pgm/.csv file");
    rec2->add_option("--n", n, "pixels per side")->capture_default_str()->check(CLI::Range(16, 4096));
    rec2->add_option("--psi", psi_name, "lg (default), lg1 or lg2");
    rec2->add_option("--eta", eta_name, "activation name (default rbf)");
    rec2->add_flag("--full", full, "256 x 256 with a in [-300, 300]^2 (very expensive)");
    gf.add(rec2, false);
    common.add(rec2);

    auto* synth = app.add_subcommand("synth", "synthesize a network without backpropagation");
    synth->add_option("--target", target, "sine (default), gaussian, zero or a CSV file");
    synth->add_option("--psi", psi_name, "ridgelet (default: constructed from eta)");
    synth->add_option("--eta", eta_name, "activation name (default relu)");
    synth->add_option("--network", network_in, "evaluate an existing network file instead")
        ->check(CLI::ExistingFile);
    gf.add(synth, true);
    common.add(synth);

    auto* radon = app.add_subcommand("radoncheck", "ridgelet reconstruction against filtered backprojection");
    radon->add_option("--target", target, "shepp-logan (default), blob, zero or a .pgm/.csv file");
    radon->add_option("--n", n, "pixels per side")->capture_default_str()->check(CLI::Range(16, 4096));
    radon->add_option("--psi", psi_name, "lg (default), lg1 or lg2");
    radon->add_option("--eta", eta_name, "activation name (default rbf)");
    gf.add(radon, false);
    common.add(radon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    auto or_default = [](std::string& v, const char* d) {
        if (v.empty()) v = d;
    };
    if (*transform) or_default(psi_name, "lg");
    if (*rec1 || *rec2 || *radon) or_default(psi_name, "lg");
    if (*rec1 || *synth) or_default(target, "sine");
    if (*rec2 || *radon) or_default(target, "shepp-logan");
    if (*rec1) or_default(eta_name, "dsigmoid:1");
    if (*rec2 || *radon) or_default(eta_name, "rbf");
    if (*synth) or_default(eta_name, "relu");

    try {
        if (*diag) return cmd_diagnose(diag_m, diag_csv, diag_workers, out);
        if (*phantom) return cmd_phantom(ph_kind, ph_n, ph_width, ph_out, out);
        if (*transform) return cmd_transform(target, psi_name, n, method, gf, common, out);
        if (*rec1) return cmd_reconstruct1d(target, psi_name, eta_name, gf, common, out);
        if (*rec2) return cmd_reconstruct2d(target, n, full, psi_name, eta_name, gf, common, out);
        if (*synth) return cmd_synth(target, psi_name, eta_name, network_in, gf, common, out);
        if (*radon) return cmd_radoncheck(target, n, psi_name, eta_name, gf, common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return exit_io;
    } catch (const ConstructionFailed& e) {
        err << "not admissible: " << e.what() << '\n';
        print_trace(err, e.attempts());
        return exit_non_admissible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace ridgenet::cli
