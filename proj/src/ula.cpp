#include "chirpaf/ula.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace chirpaf {

double fresnel_distance(double tau, double radius, double angle) {
    if (!(radius > 0.0)) throw std::invalid_argument("fresnel_distance: radius must be positive");
    return radius + tau * tau / (2.0 * radius) - tau * std::cos(angle);
}

UlaMismatch mismatch(PolarPosition x_s, PolarPosition x_t) {
    if (!(x_s.radius > 0.0) || !(x_t.radius > 0.0))
        throw std::domain_error("ula mismatch: radii must be positive");
    return {1.0 / x_s.radius - 1.0 / x_t.radius, std::cos(x_s.angle) - std::cos(x_t.angle)};
}

double fresnel_local_wavenumber(double tau, const UlaMismatch& m, Wavenumber k) {
    return k.k * (tau * m.delta - m.omega);
}

BandLimit band_limit_ula(const UlaMismatch& m, double length, Wavenumber k) {
    return {k.k * (0.5 * length * std::abs(m.delta) + std::abs(m.omega)),
            BandLimit::Method::chirp, 0.0};
}

bool ula_aliasing(const UlaMismatch& m, double length, int n, Wavenumber k) {
    if (n < 1) throw std::invalid_argument("ula_aliasing: need at least one antenna");
    return 2.0 * std::numbers::pi * n / length <= band_limit_ula(m, length, k).k;
}

std::pair<double, double> radial_alias_bounds(double source_radius, int n, double length,
                                              double lambda_s) {
    if (!(source_radius > 0.0))
        throw std::invalid_argument("radial_alias_bounds: source radius must be positive");
    if (n < 1) throw std::invalid_argument("radial_alias_bounds: need at least one antenna");
    const double fold = 2.0 * n * lambda_s / (length * length);
    const double lower = 1.0 / (1.0 / source_radius + fold);
    const double inv_upper = 1.0 / source_radius - fold;
    const double upper =
        inv_upper > 0.0 ? 1.0 / inv_upper : std::numeric_limits<double>::infinity();
    return {lower, upper};
}

}  // namespace chirpaf
