#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chirpaf/geometry.hpp"

using namespace chirpaf;
constexpr double pi = std::numbers::pi;

TEST_CASE("curve points at named parameters") {
    const auto arc = ArrayCurve::circular_arc(1000.0, pi);
    CHECK(arc.point_at(0.0).x == doctest::Approx(1000.0));
    CHECK(arc.point_at(0.0).y == doctest::Approx(0.0));
    CHECK(arc.point_at(pi / 2).x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(arc.point_at(pi / 2).y == doctest::Approx(1000.0));

    const auto seg = ArrayCurve::line_segment(500.0);
    CHECK(seg.point_at(-250.0).x == doctest::Approx(-250.0));
    CHECK(seg.point_at(-250.0).y == 0.0);
}

TEST_CASE("tangent norms are constant per curve") {
    CHECK(ArrayCurve::circular_arc(1000.0, pi).tangent_norm_at(1.0) == doctest::Approx(1000.0));
    CHECK(ArrayCurve::circular_arc(3.0, pi / 4).tangent_norm_at(0.0) == doctest::Approx(3.0));
    CHECK(ArrayCurve::line_segment(500.0).tangent_norm_at(10.0) == doctest::Approx(1.0));
}

TEST_CASE("parameters outside the domain are rejected") {
    const auto arc = ArrayCurve::circular_arc(10.0, pi / 2);
    CHECK_THROWS_AS(arc.point_at(2.0), std::domain_error);
    CHECK_THROWS_AS(arc.tangent_norm_at(-2.0), std::domain_error);
    const auto seg = ArrayCurve::line_segment(4.0);
    CHECK_THROWS_AS(seg.point_at(2.5), std::domain_error);
}

TEST_CASE("separation gives the polar form of x_s - x_t") {
    auto sep = separation({0, 0}, {0, 0});
    CHECK(sep.radius == 0.0);
    CHECK(sep.angle == 0.0);

    sep = separation({0, 0}, {-3, 0});
    CHECK(sep.radius == doctest::Approx(3.0));
    CHECK(sep.angle == doctest::Approx(0.0));

    sep = separation({0, 1000}, {0, 900});
    CHECK(sep.radius == doctest::Approx(100.0));
    CHECK(sep.angle == doctest::Approx(pi / 2));
}

TEST_CASE("polar round trip") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
        const Position p{coord(rng), coord(rng)};
        const Position q = to_cartesian(to_polar(p));
        const double scale = std::max(norm(p), 1e-30);
        CHECK(distance(p, q) / scale < 1e-12);
    }
}

TEST_CASE("finite differences recover the tangent norm") {
    const ArrayCurve curves[] = {ArrayCurve::circular_arc(1000.0, pi),
                                 ArrayCurve::circular_arc(2.5, pi / 3),
                                 ArrayCurve::line_segment(500.0)};
    for (const auto& c : curves) {
        const double h = 1e-6 * c.domain_length();
        for (int i = 1; i < 40; ++i) {
            const double tau = c.tau_min() + c.domain_length() * i / 40.0;
            const double fd = distance(c.point_at(tau + h), c.point_at(tau)) / h;
            CHECK(std::abs(fd - c.tangent_norm_at(tau)) / c.tangent_norm_at(tau) < 1e-6);
        }
    }
}

TEST_CASE("sampling grid step and midpoint symmetry") {
    const auto arc = ArrayCurve::circular_arc(1000.0, pi);
    const auto grid = SamplingGrid::over(arc, 256);
    CHECK(grid.delta == doctest::Approx(2 * pi / 256));

    const auto nodes = grid.nodes();
    double mean = 0.0;
    for (double t : nodes) mean += t;
    mean /= nodes.size();
    CHECK(std::abs(mean) < 1e-12);  // symmetric about the domain center
    for (size_t i = 1; i < nodes.size(); ++i)
        CHECK(nodes[i] - nodes[i - 1] == doctest::Approx(grid.delta));
}

TEST_CASE("endpoint placement starts at tau_min") {
    const auto seg = ArrayCurve::line_segment(8.0);
    const auto grid = SamplingGrid::over(seg, 4, NodePlacement::endpoint);
    CHECK(grid.node(0) == doctest::Approx(-4.0));
    CHECK(grid.node(3) == doctest::Approx(2.0));
}

TEST_CASE("riemann sums over the grid converge to curve integrals") {
    const auto arc = ArrayCurve::circular_arc(3.0, pi);  // full circumference 6 pi
    double prev_err = 1e300;
    for (int n : {16, 64, 256, 1024}) {
        const auto grid = SamplingGrid::over(arc, n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += arc.tangent_norm_at(grid.node(i)) * grid.delta;
        const double err = std::abs(sum - 6.0 * pi);
        CHECK(err <= prev_err + 1e-12);
        prev_err = err;
    }
    CHECK(prev_err < 1e-9);
}
