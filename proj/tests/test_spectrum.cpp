#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "chirpaf/ambiguity.hpp"
#include "chirpaf/circular.hpp"
#include "chirpaf/spectrum.hpp"
#include "chirpaf/ula.hpp"

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

TEST_CASE("matched full-circle spectrum is the periodic-window kernel") {
    // g = 1/R constant, so G(k) = (2/R) sin(pi k)/k and G(0) = 2 pi / R
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    const SpectrumGrid grid = spectrum_numeric_serial(s, s.source, 4.0, 33);
    for (size_t i = 0; i < grid.k_tau.size(); ++i) {
        const double k = grid.k_tau[i];
        const double expected =
            std::abs(k) < 1e-12 ? 2 * pi / 1000.0 : 2.0 * std::sin(pi * k) / (1000.0 * k);
        CHECK(std::abs(grid.values[i] - std::complex<double>{expected, 0.0}) < 1e-9);
    }
}

TEST_CASE("spectrum at k = 0 equals the continuous ambiguity") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coord(-30.0, 30.0);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        Scenario s;
        Position tentative;
        if (pick(rng) < 0.5) {
            s = make_ca(1000.0, pick(rng) < 0.5 ? pi : pi / 2, {coord(rng), coord(rng)});
            tentative = {coord(rng), coord(rng)};
        } else {
            s = make_ula(500.0, {coord(rng), 1000.0 + coord(rng)});
            tentative = {coord(rng), 1000.0 + coord(rng)};
        }
        const auto g0 = spectrum_at(s, tentative, 0.0);
        const auto af = af_continuous(s, tentative);
        CHECK(std::abs(g0 - af) <= 1e-6 * std::abs(af) + 1e-15);
    }
}

TEST_CASE("conjugate pairing under swapping source and tentative") {
    const Scenario s = make_ca(1000.0, pi / 2, {5.0, -3.0});
    const Position tentative{-12.0, 9.0};
    Scenario swapped = s;
    swapped.source = tentative;
    for (const double k : {0.0, 13.7, -41.2, 88.8}) {
        const auto a = spectrum_at(s, tentative, k);
        const auto b = spectrum_at(swapped, s.source, -k);
        CHECK(std::abs(a - std::conj(b)) <= 1e-6 * std::abs(a) + 1e-12);
    }
}

TEST_CASE("measured band limit of the matched spectrum shrinks with eps") {
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    const SpectrumGrid grid = spectrum_numeric_serial(s, s.source, 40.0, 321);
    double prev = 1e300;
    for (const double eps : {0.01, 0.05, 0.2, 0.6}) {
        const double k = band_limit_measured(grid, eps).k;
        CHECK(k <= prev);
        prev = k;
    }
    CHECK(band_limit_measured(grid, 0.999).k == 0.0);
}

TEST_CASE("band limit threshold at the axis edge is an error") {
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    const Position tentative{20.0, 0.0};
    // support reaches ~ 2 pi * 20; a +-10 window is far too narrow
    const SpectrumGrid grid = spectrum_numeric_serial(s, tentative, 10.0, 65);
    CHECK_THROWS_AS(band_limit_measured(grid, 0.01), std::range_error);
}

TEST_CASE("full-aperture support edge matches the chirp prediction") {
    // brute-force protocol: dense axis, 1% relative threshold
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    const Position tentative{80.0, 0.0};
    const double kc = band_limit_chirp(s, tentative).k;
    CHECK(kc == doctest::Approx(2 * pi * 80.0).epsilon(1e-3));

    SpectrumConfig cfg;
    cfg.samples_per_cycle = 4.0;
    const SpectrumGrid grid = spectrum_numeric(s, tentative, 1.5 * kc + 10.0, 8193, cfg);
    const double km = band_limit_measured(grid, 0.01).k;
    CHECK(std::abs(km - kc) / kc < 0.10);
}

TEST_CASE("line-array support edge against the quadratic-expansion band") {
    // angular mismatch at twice the aperture; the measured support carries
    // the truncation skirt on top of the predicted band
    const Scenario s = make_ula(500.0, {0.0, 1000.0});
    const Position tentative = to_cartesian({1000.0, 0.22 * pi});
    const UlaMismatch m = mismatch(to_polar(s.source), to_polar(tentative));
    const double k_pred = band_limit_ula(m, 500.0, s.k).k;
    const double k_exact = band_limit_chirp(s, tentative).k;
    CHECK(std::abs(k_exact - k_pred) / k_pred < 0.16);

    SpectrumConfig cfg;
    cfg.samples_per_cycle = 4.0;
    const SpectrumGrid grid = spectrum_numeric(s, tentative, 3.0 * k_pred, 4097, cfg);
    const double km = band_limit_measured(grid, 0.01).k;
    CHECK(km >= k_pred);          // the band is reached
    CHECK(km <= 1.6 * k_pred);    // and bounded by prediction plus skirt
    CHECK(std::abs(grid.values[0]) < 0.01 * grid.max_abs());  // quiet axis edges
}

TEST_CASE("chirp band limit closed forms") {
    const Scenario s = make_ca(1000.0, pi, {0, 0});
    CHECK(band_limit_chirp(s, s.source).k == 0.0);

    // circular closed form against the generic maximizer on the cosine phase
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> ang(-pi, pi);
    std::uniform_real_distribution<double> psi_d(0.15, pi);
    std::uniform_real_distribution<double> rad(0.5, 40.0);
    for (int i = 0; i < 100; ++i) {
        const double psi = psi_d(rng), theta = ang(rng), rho = rad(rng);
        const double k = 2 * pi;
        const auto phidot = [&](double tau) { return k * rho * std::sin(tau - theta); };
        const double generic = max_abs_on_interval(phidot, -psi, psi, 2048);
        const double closed = band_limit_ca(rho, theta, psi, Wavenumber{k}).k;
        CHECK(std::abs(generic - closed) <= 1e-3 * closed + 1e-12);
    }
}

TEST_CASE("line-array chirp limit matches the closed form far out") {
    const Scenario s = make_ula(500.0, to_cartesian({5000.0, 0.47 * pi}));
    const Position tentative = to_cartesian({5600.0, 0.53 * pi});
    const UlaMismatch m =
        mismatch(to_polar(s.source), to_polar(tentative));
    const double k_pred = band_limit_ula(m, 500.0, s.k).k;
    const double k_exact = band_limit_chirp(s, tentative).k;
    CHECK(std::abs(k_exact - k_pred) / k_pred < 0.01);
}

TEST_CASE("folding condition") {
    CHECK(no_alias(0.123, BandLimit{0.0, BandLimit::Method::chirp, 0.0}));

    // far-field line array: worst-case K = 2 k, satisfied for all angles
    // exactly when the step is at most half a wavelength
    const BandLimit worst{2.0 * 2 * pi, BandLimit::Method::chirp, 0.0};
    CHECK(no_alias(0.5, worst));
    CHECK(!no_alias(0.5001, worst));

    // circular arc at delta = 2 pi / 256: alias-free up to 128/pi
    const double delta = 2 * pi / 256;
    const double r_lim = 128.0 / pi;
    CHECK(no_alias(delta, band_limit_ca(r_lim, 0.3, pi, Wavenumber{2 * pi})));
    CHECK(!no_alias(delta, band_limit_ca(r_lim * 1.001, 0.3, pi, Wavenumber{2 * pi})));
}

TEST_CASE("spectrum parallel path equals the serial reference") {
    const Scenario s = make_ca(1000.0, pi / 2, {3.0, 1.0});
    const Position tentative{15.0, -4.0};
    const double k_max = default_k_max(s, tentative);
    const SpectrumGrid a = spectrum_numeric(s, tentative, k_max, 65);
    const SpectrumGrid b = spectrum_numeric_serial(s, tentative, k_max, 65);
    for (size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}
