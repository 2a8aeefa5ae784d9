#include "chirpaf/wavefield.hpp"

#include <cmath>
#include <numbers>

namespace chirpaf {

namespace {
constexpr double kSingularRange = 1e-9;

double checked_range(Position x, Position src) {
    const double r = distance(x, src);
    if (r < kSingularRange)
        throw singularity_error("source coincides with an antenna point (range < 1e-9)");
    return r;
}
}  // namespace

Wavenumber Wavenumber::from_wavelength(double lambda_s) {
    if (!(lambda_s > 0.0)) throw std::invalid_argument("wavelength must be positive");
    return {2.0 * std::numbers::pi / lambda_s};
}

std::complex<double> propagation_coeff(Position x, Position x_s, Wavenumber k) {
    const double r = checked_range(x, x_s);
    return std::polar(1.0 / r, -k.k * r);
}

std::complex<double> pair_product(const ArrayCurve& curve, double tau, Position x_s,
                                  Position x_t, Wavenumber k) {
    const Position p = curve.point_at(tau);
    const double rs = checked_range(p, x_s);
    const double rt = checked_range(p, x_t);
    const double amp = curve.tangent_norm_at(tau) / (rs * rt);
    return std::polar(amp, -k.k * (rs - rt));
}

double local_phase(const ArrayCurve& curve, double tau, Position x_s, Position x_t,
                   Wavenumber k) {
    const Position p = curve.point_at(tau);
    return k.k * (distance(p, x_s) - distance(p, x_t));
}

double local_wavenumber(const ArrayCurve& curve, double tau, Position x_s, Position x_t,
                        Wavenumber k) {
    const Position p = curve.point_at(tau);
    const Position t = curve.tangent_at(tau);
    const double rs = checked_range(p, x_s);
    const double rt = checked_range(p, x_t);
    return k.k * (dot(p - x_s, t) / rs - dot(p - x_t, t) / rt);
}

ChirpSample chirp_sample(const ArrayCurve& curve, double tau, Position x_s, Position x_t,
                         Wavenumber k) {
    const Position p = curve.point_at(tau);
    const double rs = checked_range(p, x_s);
    const double rt = checked_range(p, x_t);
    ChirpSample s;
    s.tau = tau;
    s.amplitude = curve.tangent_norm_at(tau) / (rs * rt);
    s.phase = k.k * (rs - rt);
    s.local_wavenumber = local_wavenumber(curve, tau, x_s, x_t, k);
    return s;
}

}  // namespace chirpaf
