// circular.hpp - closed forms for circular arrays in the far-source regime:
// cosine phase model, visual aperture, band limit, aliasing radius, and
// Bessel-series ambiguity functions for continuous and discrete arcs.

#pragma once

#include <complex>

#include "chirpaf/geometry.hpp"
#include "chirpaf/spectrum.hpp"
#include "chirpaf/wavefield.hpp"

namespace chirpaf {

/// Arc geometry plus the far-source guard: queried source radii must stay
/// within R_ca / eta for the cosine phase model to hold.
struct CircularScenario {
    double radius = 0.0;      // R_ca
    double half_angle = 0.0;  // psi in (0, pi]
    Wavenumber k{};
    double eta = 10.0;

    ArrayCurve curve() const { return ArrayCurve::circular_arc(radius, half_angle); }
    void check_far_source(Position x) const;
};

/// Cosine model of the pair-product phase, -k R_sep cos(tau - theta_sep)
/// with (R_sep, theta_sep) the polar form of x_s - x_t. The sign matches the
/// exact local phase k(|x-x_s| - |x-x_t|).
double phase_approx_ca(double tau, double sep_radius, double sep_angle, Wavenumber k);

/// max over tau in [-psi, psi] of |sin(tau - theta)|, the arc's sensitivity
/// to a displacement direction. Closed form; always in [0, 1].
double visual_aperture(double sep_angle, double half_angle);

/// K_ca = k R_sep * visual_aperture(theta_sep).
BandLimit band_limit_ca(double sep_radius, double sep_angle, double half_angle, Wavenumber k);

/// First aliasing radius lambda_s / (delta_ca * Omega_ca); fronts repeat at
/// every positive integer multiple. +infinity when the aperture vanishes.
double alias_radius(double delta_ca, double sep_angle, double half_angle, double lambda_s = 1.0);

/// Truncated-series evaluation with the tail magnitude of the last kept
/// order; converged is false when the tail test fails for the given n_max.
struct SeriesEval {
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
    bool converged = true;
};

/// Bessel turning-point truncation order for argument z = k R_sep.
int series_order(double z);

/// Continuous-arc ambiguity under the cosine phase model,
///   (2/R_ca) sum_n e^{jn(pi/2 - theta)} J_n(k R) sin(n psi)/n,
/// with the n = 0 term psi J_0(k R). Peak value 2 psi / R_ca at R_sep = 0.
SeriesEval af_ca_series_continuous(double sep_radius, double sep_angle, double half_angle,
                                   double radius, Wavenumber k, int n_max = -1);

/// Discrete-arc series: the sin(n psi)/n factor becomes the N-antenna
/// Dirichlet kernel sin(n psi)/sin(n psi / N) (its limit where the
/// denominator vanishes). Bare sum, peak value N at R_sep = 0.
SeriesEval af_ca_series_discrete(double sep_radius, double sep_angle, double half_angle, int n,
                                 Wavenumber k, int n_max = -1);

}  // namespace chirpaf
