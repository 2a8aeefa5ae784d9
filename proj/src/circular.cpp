#include "chirpaf/circular.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "chirpaf/specfun.hpp"

namespace chirpaf {

namespace {
constexpr double kPi = std::numbers::pi;

// sin(n psi) / sin(n psi / N) with the exact +-N limit where both vanish.
double dirichlet_ratio(int n, double psi, int count) {
    const double denom = std::sin(n * psi / count);
    if (std::abs(denom) < 1e-9)
        return count * std::cos(n * psi) / std::cos(n * psi / count);
    return std::sin(n * psi) / denom;
}

// Shared two-sided sum: coefficient(n) multiplies J_n(kR) paired with its
// mirror order. kernel(0) must be the n = 0 coefficient.
template <class Kernel>
SeriesEval series_sum(double sep_radius, double sep_angle, Kernel&& kernel, Wavenumber k,
                      int n_max) {
    const double z = k.k * sep_radius;
    if (n_max < 0) n_max = series_order(z);
    const std::vector<double> j = bessel_jn_sequence(n_max, z);
    const double beta = 0.5 * kPi - sep_angle;

    std::complex<double> acc{j[0] * kernel(0), 0.0};
    for (int n = 1; n <= n_max; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const std::complex<double> pair =
            std::polar(1.0, n * beta) + sign * std::polar(1.0, -n * beta);
        acc += j[static_cast<size_t>(n)] * kernel(n) * pair;
    }

    SeriesEval out;
    out.value = acc;
    out.tail_bound = std::abs(j[static_cast<size_t>(n_max)] * kernel(n_max)) +
                     (n_max >= 1 ? std::abs(j[static_cast<size_t>(n_max - 1)] * kernel(n_max - 1))
                                 : 0.0);
    out.converged = out.tail_bound <= 1e-9 * (std::abs(acc) + 1.0);
    return out;
}

}  // namespace

void CircularScenario::check_far_source(Position x) const {
    if (norm(x) * eta > radius)
        throw std::domain_error("circular scenario: source radius exceeds R_ca/eta; the "
                                "cosine phase model does not apply");
}

double phase_approx_ca(double tau, double sep_radius, double sep_angle, Wavenumber k) {
    return -k.k * sep_radius * std::cos(tau - sep_angle);
}

double visual_aperture(double sep_angle, double half_angle) {
    if (!(half_angle > 0.0) || half_angle > kPi + 1e-15)
        throw std::invalid_argument("visual_aperture: half angle must be in (0, pi]");
    const double lo = -half_angle, hi = half_angle;
    const double a = wrap_angle(sep_angle + 0.5 * kPi);
    const double b = wrap_angle(sep_angle - 0.5 * kPi);
    if ((a >= lo && a <= hi) || (b >= lo && b <= hi)) return 1.0;
    return std::max(std::abs(std::sin(half_angle - sep_angle)),
                    std::abs(std::sin(half_angle + sep_angle)));
}

BandLimit band_limit_ca(double sep_radius, double sep_angle, double half_angle, Wavenumber k) {
    return {k.k * sep_radius * visual_aperture(sep_angle, half_angle),
            BandLimit::Method::chirp, 0.0};
}

double alias_radius(double delta_ca, double sep_angle, double half_angle, double lambda_s) {
    if (!(delta_ca > 0.0)) throw std::invalid_argument("alias_radius: delta must be positive");
    const double omega = visual_aperture(sep_angle, half_angle);
    if (omega < 1e-15) return std::numeric_limits<double>::infinity();
    return lambda_s / (delta_ca * omega);
}

int series_order(double z) {
    if (z <= 0.0) return 20;
    return static_cast<int>(std::ceil(z + 10.0 * std::cbrt(z) + 20.0));
}

SeriesEval af_ca_series_continuous(double sep_radius, double sep_angle, double half_angle,
                                   double radius, Wavenumber k, int n_max) {
    const auto kernel = [half_angle](int n) {
        return n == 0 ? half_angle : std::sin(n * half_angle) / n;
    };
    SeriesEval out = series_sum(sep_radius, sep_angle, kernel, k, n_max);
    out.value *= 2.0 / radius;
    out.tail_bound *= 2.0 / radius;
    return out;
}

SeriesEval af_ca_series_discrete(double sep_radius, double sep_angle, double half_angle, int n,
                                 Wavenumber k, int n_max) {
    if (n < 1) throw std::invalid_argument("af_ca_series_discrete: need at least one antenna");
    const auto kernel = [half_angle, n](int order) {
        return dirichlet_ratio(order, half_angle, n);
    };
    return series_sum(sep_radius, sep_angle, kernel, k, n_max);
}

}  // namespace chirpaf
