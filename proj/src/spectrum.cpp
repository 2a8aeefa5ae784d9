#include "chirpaf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chirpaf/wavefield.hpp"

namespace chirpaf {

namespace {

// Coarse max |phi_dot| used only to size quadrature panels.
double cycles_bound(const Scenario& s, Position tentative) {
    const double a = s.curve.tau_min(), b = s.curve.tau_max();
    double m = 0.0;
    const int n = 128;
    for (int i = 0; i <= n; ++i) {
        const double tau = a + (b - a) * i / n;
        m = std::max(m, std::abs(local_wavenumber(s.curve, tau, s.source, tentative, s.k)));
    }
    return 1.2 * m;
}

double golden_max(const std::function<double(double)>& f, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80 && (b - a) > 1e-14 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace

double SpectrumGrid::max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

std::complex<double> spectrum_at(const Scenario& s, Position tentative, double k_tau,
                                 const SpectrumConfig& cfg) {
    const double a = s.curve.tau_min(), b = s.curve.tau_max();
    const double cycles =
        (cycles_bound(s, tentative) + std::abs(k_tau)) * (b - a) / (2.0 * std::numbers::pi);
    QuadratureConfig qc;
    qc.rel_tol = cfg.rel_tol;
    qc.samples_per_cycle = cfg.samples_per_cycle;
    const auto integrand = [&](double tau) {
        return pair_product(s.curve, tau, s.source, tentative, s.k) *
               std::polar(1.0, -k_tau * tau);
    };
    return oscillatory_quadrature(integrand, a, b, cycles, qc).value;
}

SpectrumGrid spectrum_numeric_serial(const Scenario& s, Position tentative, double k_max, int m,
                                     SpectrumConfig cfg) {
    cfg.parallel = false;
    return spectrum_numeric(s, tentative, k_max, m, cfg);
}

SpectrumGrid spectrum_numeric(const Scenario& s, Position tentative, double k_max, int m,
                              const SpectrumConfig& cfg) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("spectrum_numeric: node count must be odd and >= 3");
    if (!(k_max > 0.0)) throw std::invalid_argument("spectrum_numeric: k_max must be positive");

    SpectrumGrid grid;
    grid.scenario = s;
    grid.tentative = tentative;
    grid.k_tau.resize(static_cast<size_t>(m));
    grid.values.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        grid.k_tau[static_cast<size_t>(i)] = -k_max + 2.0 * k_max * i / (m - 1);

    const double a = s.curve.tau_min(), b = s.curve.tau_max();
    const double chirp_cycles = cycles_bound(s, tentative) * (b - a) / (2.0 * std::numbers::pi);
    QuadratureConfig qc;
    qc.rel_tol = cfg.rel_tol;
    qc.samples_per_cycle = cfg.samples_per_cycle;

#pragma omp parallel for schedule(dynamic, 4) if (cfg.parallel)
    for (int i = 0; i < m; ++i) {
        const double k_tau = grid.k_tau[static_cast<size_t>(i)];
        const auto integrand = [&](double tau) {
            return pair_product(s.curve, tau, s.source, tentative, s.k) *
                   std::polar(1.0, -k_tau * tau);
        };
        const double cycles =
            chirp_cycles + std::abs(k_tau) * (b - a) / (2.0 * std::numbers::pi);
        grid.values[static_cast<size_t>(i)] =
            oscillatory_quadrature(integrand, a, b, cycles, qc).value;
    }
    return grid;
}

BandLimit band_limit_measured(const SpectrumGrid& grid, double eps_rel, double normalizer) {
    if (!(eps_rel > 0.0) || eps_rel >= 1.0)
        throw std::invalid_argument("band_limit_measured: eps_rel must be in (0, 1)");
    const double ref = std::max(grid.max_abs(), normalizer);
    const double threshold = eps_rel * ref;
    const size_t n = grid.values.size();
    const size_t center = n / 2;

    size_t lo = n, hi = n;  // n means "none"
    for (size_t i = 0; i < n; ++i) {
        if (std::abs(grid.values[i]) > threshold) {
            if (lo == n) lo = i;
            hi = i;
        }
    }
    if (lo == n || (lo == center && hi == center)) return {0.0, BandLimit::Method::measured, eps_rel};
    if (lo == 0 || hi == n - 1)
        throw std::range_error(
            "band_limit_measured: spectrum exceeds the threshold at the axis edge; "
            "re-run with a larger k_max");
    const double k = std::max(std::abs(grid.k_tau[lo]), std::abs(grid.k_tau[hi]));
    return {k, BandLimit::Method::measured, eps_rel};
}

double max_abs_on_interval(const std::function<double(double)>& f, double a, double b,
                           int search_points) {
    if (search_points < 64)
        throw std::invalid_argument("max_abs_on_interval: need at least 64 search points");
    const auto g = [&](double t) { return std::abs(f(t)); };
    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i <= search_points; ++i) {
        const double t = a + (b - a) * i / search_points;
        const double v = g(t);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    const double h = (b - a) / search_points;
    const double lo = std::max(a, a + (best_i - 1) * h);
    const double hi = std::min(b, a + (best_i + 1) * h);
    return std::max(best, golden_max(g, lo, hi));
}

BandLimit band_limit_chirp(const Scenario& s, Position tentative, int search_points) {
    const auto phidot = [&](double tau) {
        return local_wavenumber(s.curve, tau, s.source, tentative, s.k);
    };
    const double k = max_abs_on_interval(phidot, s.curve.tau_min(), s.curve.tau_max(),
                                         search_points);
    return {k, BandLimit::Method::chirp, 0.0};
}

bool no_alias(double delta, const BandLimit& limit) {
    if (!(delta > 0.0)) throw std::invalid_argument("no_alias: delta must be positive");
    return 2.0 * std::numbers::pi / delta >= limit.k;
}

double default_k_max(const Scenario& s, Position tentative) {
    const double K = band_limit_chirp(s, tentative).k;
    return 1.5 * K + 4.0 * std::numbers::pi / s.curve.domain_length();
}

}  // namespace chirpaf
