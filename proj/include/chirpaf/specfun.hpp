// specfun.hpp - numerical kernels: integer-order Bessel J via Miller's
// downward recurrence, and composite Gauss-Legendre quadrature sized for
// oscillatory integrands with a panel-doubling error estimate.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chirpaf {

struct QuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    std::int64_t nodes_used = 0;
};

/// Raised when the node budget runs out before the requested tolerance is
/// met; carries the best value computed so far and its error estimate.
class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_(best) {}
    const QuadratureResult& best() const { return best_; }

  private:
    QuadratureResult best_;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre_rule(int n);

namespace detail {
const GaussLegendreRule& panel_rule();  // cached degree-10 rule

// Pairwise summation in a fixed order, independent of evaluation order.
std::complex<double> pairwise_sum(std::vector<std::complex<double>>& terms);
}  // namespace detail

/// Composite Gauss-Legendre integration of f over [a, b] with a fixed panel
/// count (degree-10 panels). Exposed so callers can probe convergence order.
template <class F>
std::complex<double> composite_gauss_legendre(F&& f, double a, double b, int panels) {
    if (panels < 1) throw std::invalid_argument("composite quadrature: panels must be >= 1");
    const auto& rule = detail::panel_rule();
    const double h = (b - a) / panels;
    std::vector<std::complex<double>> partial(static_cast<size_t>(panels));
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        std::complex<double> acc{0.0, 0.0};
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        partial[static_cast<size_t>(p)] = 0.5 * h * acc;
    }
    return detail::pairwise_sum(partial);
}

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    double samples_per_cycle = 8.0;   // initial density; doubling refines it
    std::int64_t max_nodes = 200'000'000;
};

/// Integrates an oscillatory integrand whose total phase turn count is at
/// most cycles_hint. Starts from samples_per_cycle nodes per cycle and
/// doubles the panel count until the doubling difference meets the
/// tolerance; the returned value is always the finer of the last pair.
template <class F>
QuadratureResult oscillatory_quadrature(F&& f, double a, double b, double cycles_hint,
                                        QuadratureConfig cfg = {}) {
    if (!(b > a)) throw std::invalid_argument("oscillatory quadrature: need b > a");
    const double cycles = std::max(cycles_hint, 0.0);
    const int nodes_per_panel = static_cast<int>(detail::panel_rule().nodes.size());
    int panels = static_cast<int>(
        std::max(8.0, std::ceil(cfg.samples_per_cycle * cycles / nodes_per_panel)));

    std::int64_t nodes = 0;
    std::complex<double> coarse = composite_gauss_legendre(f, a, b, panels);
    nodes += static_cast<std::int64_t>(panels) * nodes_per_panel;
    for (;;) {
        const int fine_panels = 2 * panels;
        const std::complex<double> fine = composite_gauss_legendre(f, a, b, fine_panels);
        nodes += static_cast<std::int64_t>(fine_panels) * nodes_per_panel;
        const double err = std::abs(fine - coarse);
        if (err <= std::max(cfg.rel_tol * std::abs(fine), cfg.abs_tol))
            return {fine, err, nodes};
        if (nodes + 4LL * fine_panels * nodes_per_panel > cfg.max_nodes)
            throw convergence_error("oscillatory quadrature: node budget exceeded",
                                    {fine, err, nodes});
        panels = fine_panels;
        coarse = fine;
    }
}

/// J_n(x) for integer n >= 0 and x >= 0, to ~1e-10 absolute error over the
/// supported domain n, x <= 10^4. Inputs beyond that raise std::range_error.
/// Callers map negative orders/arguments with J_{-n}(x) = J_n(-x) = (-1)^n J_n(x).
double bessel_jn(int n, double x);

/// All of J_0(x)..J_{n_max}(x) from one downward recurrence pass.
std::vector<double> bessel_jn_sequence(int n_max, double x);

}  // namespace chirpaf
