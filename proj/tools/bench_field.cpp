// Benchmark comparing the OpenMP field/spectrum kernels against the serial
// reference implementations. Results must agree bit-exactly.

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chirpaf/ambiguity.hpp"
#include "chirpaf/spectrum.hpp"

using namespace chirpaf;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return 0.0;
#endif
}

double max_diff(const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

int main() {
    constexpr double pi = std::numbers::pi;
    Scenario s;
    s.k = Wavenumber{2.0 * pi};
    s.curve = ArrayCurve::circular_arc(1000.0, pi);
    s.source = {0.0, 0.0};

    const SamplingGrid grid = SamplingGrid::over(s.curve, 1024);
    FieldAxes axes;
    axes.kind = FieldAxes::Kind::polar;
    axes.axis0 = {0.0, 50.0, 96};
    axes.axis1 = {-pi, pi, 96};

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#endif

    double t = now();
    const ComplexField serial = af_field_serial(s, &grid, axes);
    const double t_serial = now() - t;

    t = now();
    const ComplexField parallel = af_field(s, &grid, axes);
    const double t_parallel = now() - t;

    std::printf("af_field   %4d x %-4d serial %8.3f s  parallel %8.3f s  speedup %.2fx  max|diff| %g\n",
                axes.axis0.count, axes.axis1.count, t_serial, t_parallel,
                t_serial / t_parallel, max_diff(serial.values, parallel.values));

    const Position tentative{30.0, 10.0};
    const double k_max = default_k_max(s, tentative);
    t = now();
    const SpectrumGrid sp_serial = spectrum_numeric_serial(s, tentative, k_max, 257);
    const double ts2 = now() - t;
    t = now();
    const SpectrumGrid sp_parallel = spectrum_numeric(s, tentative, k_max, 257);
    const double tp2 = now() - t;
    std::printf("spectrum   %4d nodes     serial %8.3f s  parallel %8.3f s  speedup %.2fx  max|diff| %g\n",
                257, ts2, tp2, ts2 / tp2, max_diff(sp_serial.values, sp_parallel.values));
    return 0;
}
