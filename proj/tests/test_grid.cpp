#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ridgenet/experiments.hpp"
#include "ridgenet/grid.hpp"

using namespace ridgenet;

TEST_SUITE("grid") {

TEST_CASE("linspace covers both ends") {
    const Grid1D x = Grid1D::linspace(-1.0, 1.0, 0.01);
    CHECK(x.start() == -1.0);
    CHECK(x.step() == 0.01);
    CHECK(x.size() == 201);

    const Grid1D one = Grid1D::linspace(0.0, 0.0, 1.0);
    CHECK(one.size() == 1);
    CHECK(one[0] == 0.0);

    const Grid1D a = Grid1D::linspace(-30.0, 30.0, 0.1);
    CHECK(a.size() == 601);
    CHECK(a.back() == doctest::Approx(30.0).epsilon(1e-12));
}

TEST_CASE("bad steps and counts are rejected") {
    CHECK_THROWS_AS(Grid1D::linspace(-1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D::linspace(-1.0, 1.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D::linspace(1.0, -1.0, 0.1), std::invalid_argument);
}

TEST_CASE("linspace count is stable under rounding") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(1, 400);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = pick(rng);
        const double step = 1.0 / pick(rng);
        const double start = -0.5 * n * step;
        const Grid1D g = Grid1D::linspace(start, start + n * step, step);
        CHECK(g.size() == static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("cell centers and symmetric grids") {
    const Grid1D c = Grid1D::cell_centers(-1.0, 1.0, 4);
    CHECK(c.size() == 4);
    CHECK(c[0] == doctest::Approx(-0.75));
    CHECK(c.back() == doctest::Approx(0.75));
    const Grid1D s = Grid1D::symmetric(2.0, 0.5);
    CHECK(s.size() == 9);
    CHECK(s[4] == doctest::Approx(0.0));
}

TEST_CASE("signals and images check their shapes") {
    CHECK_THROWS_AS(SampledSignal(Grid1D(0.0, 1.0, 3), {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(SampledImage(Grid1D(0.0, 1.0, 2), Grid1D(0.0, 1.0, 2), {1.0}), std::invalid_argument);
    SampledImage img(Grid1D(0.0, 1.0, 3), Grid1D(0.0, 1.0, 2));
    img.at(2, 1) = 5.0;
    CHECK(img.values()[5] == 5.0);
}

TEST_CASE("relative L2 error") {
    const Grid1D g(0.0, 0.1, 11);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::sin(g[i]) + 0.5;
    const SampledSignal f(g, v);
    CHECK(relative_l2_error(f, f) == 0.0);
    CHECK(relative_l2_error(SampledSignal(g), f) == doctest::Approx(1.0));

    std::vector<double> w = v;
    for (double& x : w) x *= 1.1;
    CHECK(relative_l2_error(SampledSignal(g, w), f) == doctest::Approx(0.1));
    CHECK_THROWS_AS(relative_l2_error(SampledSignal(Grid1D(0.0, 0.1, 5)), f), std::invalid_argument);
    CHECK(max_abs_error(w, v) == doctest::Approx(0.1 * (std::sin(1.0) + 0.5)));
}

TEST_CASE("interior error ignores the border") {
    const Grid1D ax = Grid1D::cell_centers(-1.0, 1.0, 20);
    SampledImage ref(ax, ax, std::vector<double>(400, 1.0));
    SampledImage approx = ref;
    approx.at(0, 0) = 100.0;  // border pixel
    CHECK(relative_l2_error_interior(approx, ref, 0.1) == 0.0);
    CHECK(relative_l2_error(approx, ref) > 1.0);
}

TEST_CASE("parameter grid") {
    const ParamGrid g = sine_box().make(1);
    CHECK(g.dim() == 1);
    CHECK(g.a_axes()[0].size() == 601);
    CHECK(g.b_axis().size() == 601);
    CHECK(g.size() == 601u * 601u);
    CHECK(g.a_min() == doctest::Approx(0.05));
    CHECK(g.cell_measure() == doctest::Approx(0.01));

    const ParamGrid g2 = BoxSpec{2.0, 1.0, 1.0, 0.5}.make(2);
    CHECK(g2.a_count() == 25);
    CHECK(g2.cell_measure() == doctest::Approx(0.5));
    const auto p = g2.a_point(7);  // a1 index 1, a2 index 2
    CHECK(p[0] == doctest::Approx(-1.0));
    CHECK(p[1] == doctest::Approx(0.0));
    CHECK_THROWS_AS(ParamGrid({}, Grid1D(0.0, 1.0, 1)), std::invalid_argument);
}

}  // TEST_SUITE
