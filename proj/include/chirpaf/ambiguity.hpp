// ambiguity.hpp - matched-filter ambiguity values for continuous and
// discrete arrays, and field evaluation over grids of tentative positions.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "chirpaf/scenario.hpp"
#include "chirpaf/specfun.hpp"

namespace chirpaf {

struct AxisSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

/// Grid of tentative positions: either cartesian (x by y) or polar
/// (R by theta, about the origin).
struct FieldAxes {
    enum class Kind { cartesian, polar };
    Kind kind = Kind::cartesian;
    AxisSpec axis0;  // x or R
    AxisSpec axis1;  // y or theta

    Position position(int i0, int i1) const;
    double coord0(int i0) const;
    double coord1(int i1) const;
};

/// Row-major complex field over the axes; nodes whose evaluation hit the
/// array curve are NaN and counted rather than aborting the job.
struct ComplexField {
    FieldAxes axes;
    std::vector<std::complex<double>> values;
    std::int64_t nan_count = 0;
    Scenario scenario;

    std::complex<double>& at(int i0, int i1) {
        return values[static_cast<size_t>(i0) * axes.axis1.count + i1];
    }
    const std::complex<double>& at(int i0, int i1) const {
        return values[static_cast<size_t>(i0) * axes.axis1.count + i1];
    }
};

struct AfConfig {
    double rel_tol = 1e-8;
    double samples_per_cycle = 8.0;
};

/// Continuous-array ambiguity: quadrature of the pair product over the
/// curve domain. Equals the spectrum at k_tau = 0.
std::complex<double> af_continuous(const Scenario& s, Position tentative, AfConfig cfg = {});

/// Discrete-array ambiguity: midpoint-rule sum over the sampling grid, each
/// antenna weighted by delta |x'(tau_i)| so it converges to af_continuous.
std::complex<double> af_discrete(const Scenario& s, const SamplingGrid& grid,
                                 Position tentative);

/// Field evaluation; discrete when a grid is supplied, continuous otherwise.
/// OpenMP-parallel over nodes, deterministic output; af_field_serial is the
/// reference implementation.
ComplexField af_field(const Scenario& s, const SamplingGrid* grid, const FieldAxes& axes,
                      AfConfig cfg = {});
ComplexField af_field_serial(const Scenario& s, const SamplingGrid* grid, const FieldAxes& axes,
                             AfConfig cfg = {});

}  // namespace chirpaf
