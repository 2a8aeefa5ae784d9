#include "chirpaf/ambiguity.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "chirpaf/spectrum.hpp"
#include "chirpaf/wavefield.hpp"

namespace chirpaf {

double FieldAxes::coord0(int i0) const {
    return axis0.count > 1 ? axis0.lo + (axis0.hi - axis0.lo) * i0 / (axis0.count - 1)
                           : axis0.lo;
}

double FieldAxes::coord1(int i1) const {
    return axis1.count > 1 ? axis1.lo + (axis1.hi - axis1.lo) * i1 / (axis1.count - 1)
                           : axis1.lo;
}

Position FieldAxes::position(int i0, int i1) const {
    const double c0 = coord0(i0), c1 = coord1(i1);
    if (kind == Kind::cartesian) return {c0, c1};
    return to_cartesian(PolarPosition{c0, c1});
}

std::complex<double> af_continuous(const Scenario& s, Position tentative, AfConfig cfg) {
    const double a = s.curve.tau_min(), b = s.curve.tau_max();
    const double K = band_limit_chirp(s, tentative, 256).k;
    const double cycles = 1.2 * K * (b - a) / (2.0 * std::numbers::pi);

    // absolute floor keeps near-zero AF values from demanding impossible
    // relative accuracy
    double gmax = 0.0;
    for (int i = 0; i <= 16; ++i) {
        const double tau = a + (b - a) * i / 16;
        gmax = std::max(gmax, std::abs(pair_product(s.curve, tau, s.source, tentative, s.k)));
    }
    QuadratureConfig qc;
    qc.rel_tol = cfg.rel_tol;
    qc.abs_tol = 1e-13 * gmax * (b - a);
    qc.samples_per_cycle = cfg.samples_per_cycle;

    const auto integrand = [&](double tau) {
        return pair_product(s.curve, tau, s.source, tentative, s.k);
    };
    return oscillatory_quadrature(integrand, a, b, cycles, qc).value;
}

std::complex<double> af_discrete(const Scenario& s, const SamplingGrid& grid,
                                 Position tentative) {
    std::vector<std::complex<double>> terms(static_cast<size_t>(grid.count));
    for (int i = 0; i < grid.count; ++i) {
        const double tau = grid.node(i);
        terms[static_cast<size_t>(i)] =
            pair_product(s.curve, tau, s.source, tentative, s.k) * grid.delta;
    }
    return detail::pairwise_sum(terms);
}

namespace {

void check_axes(const FieldAxes& axes) {
    if (axes.axis0.count < 1 || axes.axis1.count < 1)
        throw std::invalid_argument("af_field: axis counts must be >= 1");
    if (axes.axis0.count > 1 && !(axes.axis0.hi > axes.axis0.lo))
        throw std::invalid_argument("af_field: axis0 range must be increasing");
    if (axes.axis1.count > 1 && !(axes.axis1.hi > axes.axis1.lo))
        throw std::invalid_argument("af_field: axis1 range must be increasing");
}

template <bool Parallel>
ComplexField field_impl(const Scenario& s, const SamplingGrid* grid, const FieldAxes& axes,
                        AfConfig cfg) {
    check_axes(axes);
    ComplexField field;
    field.axes = axes;
    field.scenario = s;
    const int n0 = axes.axis0.count, n1 = axes.axis1.count;
    field.values.assign(static_cast<size_t>(n0) * n1, {0.0, 0.0});

    std::int64_t nan_count = 0;
#pragma omp parallel for collapse(2) schedule(dynamic, 8) reduction(+ : nan_count) if (Parallel)
    for (int i0 = 0; i0 < n0; ++i0) {
        for (int i1 = 0; i1 < n1; ++i1) {
            const Position tentative = axes.position(i0, i1);
            std::complex<double> v;
            try {
                v = grid ? af_discrete(s, *grid, tentative) : af_continuous(s, tentative, cfg);
            } catch (const singularity_error&) {
                v = {std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN()};
                ++nan_count;
            }
            field.values[static_cast<size_t>(i0) * n1 + i1] = v;
        }
    }
    field.nan_count = nan_count;
    return field;
}

}  // namespace

ComplexField af_field(const Scenario& s, const SamplingGrid* grid, const FieldAxes& axes,
                      AfConfig cfg) {
    return field_impl<true>(s, grid, axes, cfg);
}

ComplexField af_field_serial(const Scenario& s, const SamplingGrid* grid, const FieldAxes& axes,
                             AfConfig cfg) {
    return field_impl<false>(s, grid, axes, cfg);
}

}  // namespace chirpaf
