// wavefield.hpp - spherical-wave propagation coefficient, the pair-product
// signal along a curve, and its exact local phase / amplitude / wave number.

#pragma once

#include <complex>
#include <stdexcept>

#include "chirpaf/geometry.hpp"

namespace chirpaf {

/// Carrier wave number k_s = 2*pi / lambda_s, in rad per length unit.
struct Wavenumber {
    double k = 0.0;
    static Wavenumber from_wavelength(double lambda_s);
};

/// Raised when a source coincides with an antenna point (within 1e-9 length
/// units); the 1/r propagation model has no meaningful value there.
class singularity_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// One sample of the pair-product chirp: amplitude, phase and the phase
/// derivative with respect to the curve parameter.
struct ChirpSample {
    double tau = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;
    double local_wavenumber = 0.0;
};

/// exp(-j k r)/r between an antenna at x and a source at x_s.
std::complex<double> propagation_coeff(Position x, Position x_s, Wavenumber k);

/// z(x(tau); x_s) * conj(z(x(tau); x_t)) * |x'(tau)|.
std::complex<double> pair_product(const ArrayCurve& curve, double tau, Position x_s,
                                  Position x_t, Wavenumber k);

/// phi(tau) = k (|x(tau)-x_s| - |x(tau)-x_t|), the pair-product's local phase.
double local_phase(const ArrayCurve& curve, double tau, Position x_s, Position x_t,
                   Wavenumber k);

/// Analytic derivative of local_phase with respect to tau.
double local_wavenumber(const ArrayCurve& curve, double tau, Position x_s, Position x_t,
                        Wavenumber k);

/// Amplitude, phase and local wave number at one parameter value.
ChirpSample chirp_sample(const ArrayCurve& curve, double tau, Position x_s, Position x_t,
                         Wavenumber k);

}  // namespace chirpaf
