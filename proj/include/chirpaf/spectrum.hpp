// spectrum.hpp - spatial spectrum G(k_tau) of the pair-product signal, band
// limits measured from it or predicted from the chirp's local wave number,
// and the grid-step folding test.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "chirpaf/scenario.hpp"
#include "chirpaf/specfun.hpp"

namespace chirpaf {

/// G sampled on a symmetric k_tau axis with an odd node count, so k_tau = 0
/// is always a node.
struct SpectrumGrid {
    std::vector<double> k_tau;
    std::vector<std::complex<double>> values;
    Scenario scenario;
    Position tentative{};
    double max_abs() const;
};

struct BandLimit {
    enum class Method { measured, chirp };
    double k = 0.0;
    Method method = Method::chirp;
    double epsilon_rel = 0.0;  // measured only
};

struct SpectrumConfig {
    double rel_tol = 1e-6;
    double samples_per_cycle = 8.0;
    bool parallel = true;
};

/// G(k_tau) at a single wave number, by oscillatory-safe quadrature.
std::complex<double> spectrum_at(const Scenario& s, Position tentative, double k_tau,
                                 const SpectrumConfig& cfg = {});

/// G on m odd nodes spanning [-k_max, k_max]. OpenMP-parallel across nodes;
/// spectrum_numeric_serial is the reference implementation.
SpectrumGrid spectrum_numeric(const Scenario& s, Position tentative, double k_max, int m,
                              const SpectrumConfig& cfg = {});
SpectrumGrid spectrum_numeric_serial(const Scenario& s, Position tentative, double k_max, int m,
                                     SpectrumConfig cfg = {});

/// Largest |k_tau| whose |G| exceeds eps_rel times the reference maximum
/// (the grid maximum unless a larger normalizer is supplied). Throws
/// std::range_error when the support still exceeds the threshold at the axis
/// edge: the grid is too narrow, re-run with a larger k_max.
BandLimit band_limit_measured(const SpectrumGrid& grid, double eps_rel, double normalizer = 0.0);

/// max |phi_dot| over the curve: dense scan plus golden-section refinement.
BandLimit band_limit_chirp(const Scenario& s, Position tentative, int search_points = 2048);

/// Same maximizer for an arbitrary local-wave-number profile on [a, b].
double max_abs_on_interval(const std::function<double(double)>& f, double a, double b,
                           int search_points);

/// Folding criterion: sampling with parametric step delta leaves k_tau = 0
/// untouched when 2*pi/delta >= K.
bool no_alias(double delta, const BandLimit& limit);

/// Default axis half-width: the chirp prediction plus main-lobe bleed.
double default_k_max(const Scenario& s, Position tentative);

}  // namespace chirpaf
