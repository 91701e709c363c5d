#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>

#include "ridgenet/experiments.hpp"
#include "ridgenet/io.hpp"
#include "ridgenet/phantom.hpp"
#include "ridgenet/ridgelet.hpp"

using namespace ridgenet;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ridgenet-io-" + std::to_string(std::random_device{}()) + "-" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path operator/(const char* name) const { return path / name; }
};

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("doubles round trip") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("signal csv round trip") {
    TempDir d;
    const SampledSignal s = sine_signal(Grid1D::symmetric(1.0, 0.01));
    write_signal_csv(d / "s.csv", s);
    const SampledSignal r = read_signal_csv(d / "s.csv");
    CHECK(r.size() == s.size());
    CHECK(r.grid().step() == doctest::Approx(0.01).epsilon(1e-12));
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(r[i] == s[i]);
}

TEST_CASE("image csv round trip") {
    TempDir d;
    const SampledImage img = shepp_logan(16, 2);
    write_image_csv(d / "i.csv", img);
    const SampledImage r = read_image_csv(d / "i.csv");
    REQUIRE(r.nx() == 16);
    REQUIRE(r.ny() == 16);
    for (std::size_t i = 0; i < img.values().size(); ++i) CHECK(r.values()[i] == img.values()[i]);
}

TEST_CASE("pgm round trip") {
    TempDir d;
    const Grid1D ax = unit_square_axis(32);
    const SampledImage blob = gaussian_blob(ax, ax, {0.0, 0.0}, 0.3);
    write_pgm(d / "b.pgm", blob);
    const SampledImage r = read_pgm(d / "b.pgm");
    REQUIRE(r.nx() == 32);
    CHECK(r.grid_x() == ax);
    double lo = 1e300, hi = -1e300;
    for (double v : blob.values()) lo = std::min(lo, v), hi = std::max(hi, v);
    for (std::size_t i = 0; i < r.values().size(); ++i)
        CHECK(std::abs(r.values()[i] - (blob.values()[i] - lo) / (hi - lo)) <= 0.5 / 255 + 1e-12);

    // a constant image maps to zero
    write_pgm(d / "c.pgm", SampledImage(ax, ax, std::vector<double>(32 * 32, 4.0)));
    const SampledImage c = read_pgm(d / "c.pgm");
    for (double v : c.values()) CHECK(v == 0.0);
}

TEST_CASE("network round trip") {
    TempDir d;
    const ParamGrid grid = BoxSpec{2.0, 0.5, 1.0, 0.5}.make(2);
    RidgeletCoefficients T(grid);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> nd;
    for (auto& v : T.values()) v = {nd(rng), nd(rng)};
    for (const auto& eta : {relu(), dirac_delta(0.37), sigmoid_derivative(2)}) {
        const NetworkDescription net = network_from_coefficients(T, eta, cplx(-1.25, 3.0 / 7.0));
        write_network(d / "n.ridgenet", net);
        const NetworkDescription r = read_network(d / "n.ridgenet");
        CHECK(r.m == 2);
        CHECK(r.eta == eta);
        CHECK(r.K == net.K);
        CHECK(r.a == net.a);
        CHECK(r.b == net.b);
        CHECK(r.c == net.c);
    }
}

TEST_CASE("metrics json") {
    const Metrics m{{"command", std::string("x\"y")}, {"n", 3LL}, {"ok", true},
                    {"err", 0.1},                    {"bad", std::numeric_limits<double>::quiet_NaN()},
                    {"inf", std::numeric_limits<double>::infinity()}};
    const std::string j = metrics_json(m);
    CHECK(j.rfind("{\n  \"schema\": 1,", 0) == 0);
    CHECK(j.find("\"command\": \"x\\\"y\"") != std::string::npos);
    CHECK(j.find("\"n\": 3") != std::string::npos);
    CHECK(j.find("\"ok\": true") != std::string::npos);
    CHECK(j.find("\"err\": 0.10000000000000001") != std::string::npos);
    CHECK(j.find("\"bad\": null") != std::string::npos);
    CHECK(j.find("\"inf\": null") != std::string::npos);
    CHECK(j.find("nan") == std::string::npos);
}

TEST_CASE("malformed input") {
    TempDir d;
    CHECK_THROWS_AS(read_signal_csv(d / "missing.csv"), IoError);
    put(d / "empty.csv", "");
    CHECK_THROWS_AS(read_signal_csv(d / "empty.csv"), IoError);
    put(d / "word.csv", "0,1\n0.1,abc\n");
    CHECK_THROWS_AS(read_signal_csv(d / "word.csv"), IoError);
    put(d / "cols.csv", "0,1,2\n");
    CHECK_THROWS_AS(read_signal_csv(d / "cols.csv"), IoError);
    put(d / "uneven.csv", "0,1\n0.1,1\n0.2,1\n0.4,1\n");
    CHECK_THROWS_AS(read_signal_csv(d / "uneven.csv"), IoError);
    put(d / "p2.pgm", "P2\n2 2\n255\n0 0 0 0\n");
    CHECK_THROWS_AS(read_pgm(d / "p2.pgm"), IoError);
    put(d / "short.pgm", "P5\n4 4\n255\n\x01\x02");
    CHECK_THROWS_AS(read_pgm(d / "short.pgm"), IoError);
    put(d / "net.ridgenet", "ridgenet-v2 m=1 eta=relu K=1,0\n");
    CHECK_THROWS_AS(read_network(d / "net.ridgenet"), IoError);
    put(d / "net.ridgenet", "ridgenet-v1 m=1 eta=relu K=1,0\n1 2 3\n");
    CHECK_THROWS_AS(read_network(d / "net.ridgenet"), IoError);
    put(d / "net.ridgenet", "ridgenet-v1 m=1 eta=swish K=1,0\n1 2 3 4\n");
    CHECK_THROWS_AS(read_network(d / "net.ridgenet"), IoError);
    CHECK_THROWS_AS(write_signal_csv(d.path / "no" / "such" / "dir.csv", sine_signal(unit_square_axis(4))), IoError);
}

}  // TEST_SUITE
