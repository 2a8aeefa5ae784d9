// ula.hpp - closed forms for a centered uniform linear array under the
// order-2 (Fresnel) distance expansion: mismatch parameters, band limit,
// folding condition, and the radial aliasing bounds.

#pragma once

#include <utility>

#include "chirpaf/geometry.hpp"
#include "chirpaf/spectrum.hpp"
#include "chirpaf/wavefield.hpp"

namespace chirpaf {

/// Delta = 1/R_s - 1/R_t and Omega = cos(theta_s) - cos(theta_t); both
/// vanish exactly for matched positions (up to the cosine's reflection
/// equivalence in the angle).
struct UlaMismatch {
    double delta = 0.0;
    double omega = 0.0;
};

/// Order-2 expansion of |x(tau) - x_s|: R_s + tau^2/(2 R_s) - tau cos(theta_s).
double fresnel_distance(double tau, double radius, double angle);

UlaMismatch mismatch(PolarPosition x_s, PolarPosition x_t);

/// Local wave number of the Fresnel-expanded pair product, k (tau Delta - Omega).
/// Affine in tau, so its extremum over the array sits at an endpoint.
double fresnel_local_wavenumber(double tau, const UlaMismatch& m, Wavenumber k);

/// K_ula = k (L/2 |Delta| + |Omega|).
BandLimit band_limit_ula(const UlaMismatch& m, double length, Wavenumber k);

/// True when sampling with N antennas folds the band onto k_tau = 0:
/// 2 pi N / L <= K_ula. Boundary equality counts as aliasing.
bool ula_aliasing(const UlaMismatch& m, double length, int n, Wavenumber k);

/// Radial thresholds along the matched-angle ray: aliasing appears for
/// tentative radii at or below .first and at or above .second. The upper
/// threshold is +infinity when 1/R_s <= 2 N lambda / L^2.
std::pair<double, double> radial_alias_bounds(double source_radius, int n, double length,
                                              double lambda_s = 1.0);

}  // namespace chirpaf
