#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "chirpaf/ambiguity.hpp"
#include "chirpaf/specfun.hpp"

using namespace chirpaf;
constexpr double pi = std::numbers::pi;

namespace {

Scenario make_ca(double radius, double psi, Position src) {
    Scenario s;
    s.k = Wavenumber{2 * pi};
    s.curve = ArrayCurve::circular_arc(radius, psi);
    s.source = src;
    return s;
}

Scenario make_ula(double length, Position src) {
    Scenario s;
    s.k = Wavenumber{2 * pi};
    s.curve = ArrayCurve::line_segment(length);
    s.source = src;
    return s;
}

}  // namespace

TEST_CASE("matched continuous ambiguity of the centered full circle") {
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    const auto a = af_continuous(s, s.source);
    CHECK(a.real() == doctest::Approx(2 * pi / 1000.0).epsilon(1e-9));
    CHECK(std::abs(a.imag()) < 1e-12);
}

TEST_CASE("matched discrete ambiguity is the weighted power sum") {
    const Scenario s = make_ula(500.0, {0.0, 1000.0});
    const SamplingGrid grid = SamplingGrid::over(s.curve, 64);
    const auto a = af_discrete(s, grid, s.source);
    double expected = 0.0;
    for (int i = 0; i < grid.count; ++i) {
        const double r = distance(s.curve.point_at(grid.node(i)), s.source);
        expected += grid.delta / (r * r);
    }
    CHECK(a.real() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(a.imag() == 0.0);
}

TEST_CASE("full-circle first null sits at the J0 zero") {
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    const double peak = std::abs(af_continuous(s, s.source));
    const double expected = 2.404825557695773 / (2 * pi);
    double best = 0.0, best_v = 1e300;
    for (double radius = 0.36; radius <= 0.41; radius += 0.001) {
        const double v = std::abs(af_continuous(s, {radius, 0.0})) / peak;
        if (v < best_v) {
            best_v = v;
            best = radius;
        }
    }
    CHECK(std::abs(best / expected - 1.0) < 0.005);
    CHECK(best_v < 0.01);
}

TEST_CASE("matched peak dominates the discrete ambiguity") {
    const Scenario ca = make_ca(1000.0, pi, {4.0, -2.0});
    const SamplingGrid grid_ca = SamplingGrid::over(ca.curve, 512);
    const double peak_ca = std::abs(af_discrete(ca, grid_ca, ca.source));
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    for (int i = 0; i < 500; ++i) {
        const Position t{coord(rng), coord(rng)};
        CHECK(std::abs(af_discrete(ca, grid_ca, t)) <= peak_ca * (1.0 + 1e-12));
    }

    const Scenario ula = make_ula(500.0, {0.0, 1000.0});
    const SamplingGrid grid_u = SamplingGrid::over(ula.curve, 256);
    const double peak_u = std::abs(af_discrete(ula, grid_u, ula.source));
    std::uniform_real_distribution<double> rad(500.0, 3000.0);
    std::uniform_real_distribution<double> ang(0.15 * pi, 0.85 * pi);
    for (int i = 0; i < 500; ++i) {
        const Position t = to_cartesian({rad(rng), ang(rng)});
        CHECK(std::abs(af_discrete(ula, grid_u, t)) <= peak_u * (1.0 + 1e-12));
    }
    // the mirror position attains the peak exactly
    const Position mirror{ula.source.x, -ula.source.y};
    CHECK(std::abs(af_discrete(ula, grid_u, mirror)) ==
          doctest::Approx(peak_u).epsilon(1e-12));
}

TEST_CASE("matched peak dominates the continuous ambiguity") {
    const Scenario s = make_ca(1000.0, pi / 2, {0.0, 0.0});
    AfConfig cfg;
    cfg.rel_tol = 1e-7;
    const double peak = std::abs(af_continuous(s, s.source, cfg));
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> coord(-90.0, 90.0);
    for (int i = 0; i < 30; ++i) {
        const Position t{coord(rng), coord(rng)};
        CHECK(std::abs(af_continuous(s, t, cfg)) <= peak * (1.0 + 1e-6));
    }
}

TEST_CASE("hermitian symmetry in the two positions") {
    const Scenario s = make_ca(1000.0, pi, {7.0, 2.0});
    const SamplingGrid grid = SamplingGrid::over(s.curve, 128);
    Scenario swapped = s;
    const Position t{-20.0, 13.0};
    swapped.source = t;
    const auto a = af_discrete(s, grid, t);
    const auto b = af_discrete(swapped, grid, s.source);
    CHECK(std::abs(a - std::conj(b)) <= 1e-14 * std::abs(a));
}

TEST_CASE("discrete ambiguity converges at the midpoint-rule order") {
    const Scenario s = make_ula(500.0, {0.0, 1000.0});
    const Position t{0.0, 1050.0};
    AfConfig cfg;
    cfg.rel_tol = 1e-10;
    const auto exact = af_continuous(s, t, cfg);
    const double e512 = std::abs(af_discrete(s, SamplingGrid::over(s.curve, 512), t) - exact);
    const double e1024 = std::abs(af_discrete(s, SamplingGrid::over(s.curve, 1024), t) - exact);
    const double e2048 = std::abs(af_discrete(s, SamplingGrid::over(s.curve, 2048), t) - exact);
    CHECK(e512 / e1024 == doctest::Approx(4.0).epsilon(0.12));
    CHECK(e1024 / e2048 == doctest::Approx(4.0).epsilon(0.12));
}

TEST_CASE("dense full-circle sampling reproduces the continuous ambiguity") {
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    const SamplingGrid grid = SamplingGrid::over(s.curve, 4096);
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> rad(0.0, 20.0);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (int i = 0; i < 12; ++i) {
        const Position t = to_cartesian({rad(rng), ang(rng)});
        const auto c = af_continuous(s, t);
        const auto d = af_discrete(s, grid, t);
        CHECK(std::abs(d - c) <= 1e-3 * std::abs(af_continuous(s, s.source)));
    }
}

TEST_CASE("coarse full-circle sampling re-peaks at the aliasing radius") {
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    const SamplingGrid grid = SamplingGrid::over(s.curve, 256);
    const double peak = std::abs(af_discrete(s, grid, s.source));
    const double ring = 128.0 / pi;
    double best = 0.0, best_r = 0.0;
    for (double radius = 0.97 * ring; radius <= 1.03 * ring; radius += 0.01) {
        const double v = std::abs(af_discrete(s, grid, {radius, 0.0})) / peak;
        if (v > best) {
            best = v;
            best_r = radius;
        }
    }
    CHECK(best >= 0.15);
    CHECK(std::abs(best_r / ring - 1.0) < 0.03);
    // the interior of the alias-free disk stays quiet
    double inner = 0.0;
    for (double radius = 25.0; radius <= 35.0; radius += 0.05)
        inner = std::max(inner, std::abs(af_discrete(s, grid, {radius, 0.0})) / peak);
    CHECK(inner < 0.1);
}

TEST_CASE("folding: clean when the condition holds, replicas when it fails") {
    const Scenario s = make_ula(500.0, {0.0, 1000.0});
    AfConfig cfg;
    cfg.rel_tol = 1e-8;

    // N = 1024 keeps 2 pi / delta comfortably above the band
    const SamplingGrid fine = SamplingGrid::over(s.curve, 1024);
    const Position t{0.0, 950.0};
    const auto c = af_continuous(s, t, cfg);
    CHECK(std::abs(af_discrete(s, fine, t) - c) <= 0.01 * std::abs(c));

    // N = 32 aliases; the first angular replica carries most of the peak
    const SamplingGrid coarse = SamplingGrid::over(s.curve, 32);
    const double peak = std::abs(af_discrete(s, coarse, s.source));
    const double cpeak = std::abs(af_continuous(s, s.source, cfg));
    const Position replica = to_cartesian({1000.0, std::acos(32.0 / 500.0)});  // cos = lambda/delta
    CHECK(std::abs(af_discrete(s, coarse, replica)) / peak >= 0.5);
    CHECK(std::abs(af_continuous(s, replica, cfg)) / cpeak <= 0.1);
}

TEST_CASE("field over a single node holds the matched value") {
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    FieldAxes axes;
    axes.kind = FieldAxes::Kind::cartesian;
    axes.axis0 = {0.0, 0.0, 1};
    axes.axis1 = {0.0, 0.0, 1};
    const ComplexField f = af_field(s, nullptr, axes);
    CHECK(f.values.size() == 1);
    CHECK(f.at(0, 0).real() == doctest::Approx(2 * pi / 1000.0).epsilon(1e-8));
    CHECK(f.nan_count == 0);
}

TEST_CASE("radial field profile follows J0 for a dense full circle") {
    // R_ca large enough that the cosine-model curvature residue stays small
    // across the probed radii
    Scenario s = make_ca(20000.0, pi, {0, 0});
    const SamplingGrid grid = SamplingGrid::over(s.curve, 4096);
    FieldAxes axes;
    axes.kind = FieldAxes::Kind::polar;
    axes.axis0 = {0.0, 60.0, 61};
    axes.axis1 = {0.3, 0.3, 1};
    const ComplexField f = af_field(s, &grid, axes);
    const double peak = std::abs(af_discrete(s, grid, s.source));
    double dev = 0.0;
    for (int i = 0; i < 61; ++i) {
        const double radius = axes.coord0(i);
        const double j0 = std::abs(bessel_jn(0, 2 * pi * radius));
        dev = std::max(dev, std::abs(std::abs(f.at(i, 0)) / peak - j0));
    }
    CHECK(dev <= 1e-2);
}

TEST_CASE("nodes on the curve are marked and counted") {
    const Scenario s = make_ula(500.0, {0.0, 1000.0});
    const SamplingGrid grid = SamplingGrid::over(s.curve, 8);
    FieldAxes axes;
    axes.kind = FieldAxes::Kind::cartesian;
    axes.axis0 = {-250.0 + grid.delta / 2, 250.0 - grid.delta / 2, 8};  // antenna x positions
    axes.axis1 = {0.0, 0.0, 1};
    const ComplexField f = af_field(s, &grid, axes);
    CHECK(f.nan_count == 8);
    for (const auto& v : f.values) CHECK(std::isnan(v.real()));
}

TEST_CASE("parallel field equals the serial reference bit for bit") {
    const Scenario s = make_ca(1000.0, pi, {2.0, 5.0});
    const SamplingGrid grid = SamplingGrid::over(s.curve, 256);
    FieldAxes axes;
    axes.kind = FieldAxes::Kind::cartesian;
    axes.axis0 = {-30.0, 30.0, 21};
    axes.axis1 = {-30.0, 30.0, 21};
    const ComplexField a = af_field(s, &grid, axes);
    const ComplexField b = af_field_serial(s, &grid, axes);
    REQUIRE(a.values.size() == b.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}
