#include "chirpaf/specfun.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace chirpaf {

GaussLegendreRule gauss_legendre_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.assign(static_cast<size_t>(n), 0.0);
    rule.weights.assign(static_cast<size_t>(n), 0.0);
    const int m = (n + 1) / 2;  // roots come in symmetric pairs
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre polynomial and derivative at z by recurrence
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[static_cast<size_t>(i)] = -z;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[static_cast<size_t>(i)] = w;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return rule;
}

namespace detail {

const GaussLegendreRule& panel_rule() {
    static const GaussLegendreRule rule = gauss_legendre_rule(10);
    return rule;
}

std::complex<double> pairwise_sum(std::vector<std::complex<double>>& terms) {
    if (terms.empty()) return {0.0, 0.0};
    size_t n = terms.size();
    while (n > 1) {
        const size_t half = n / 2;
        for (size_t i = 0; i < half; ++i) terms[i] = terms[2 * i] + terms[2 * i + 1];
        if (n % 2 == 1) {
            terms[half] = terms[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return terms[0];
}

}  // namespace detail

namespace {

constexpr double kBesselDomainLimit = 1e4;

// Downward (Miller) recurrence with on-the-fly rescaling; normalized by
// J_0 + 2 * sum_{m>=1} J_{2m} = 1.
std::vector<double> miller_sequence(int n_max, double x) {
    const int top = std::max(n_max, static_cast<int>(std::ceil(x)));
    const int start = top + 40 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(top) + 1.0));
    std::vector<double> out(static_cast<size_t>(n_max) + 1, 0.0);

    double bjp = 0.0;    // b_{m+1}
    double bj = 1e-30;   // b_m
    double even_sum = 0.0;  // 2 * sum of b_m over even m > 0
    for (int m = start; m >= 0; --m) {
        const double bjm = (2.0 * (m + 1)) / x * bj - bjp;
        bjp = bj;
        bj = bjm;
        if (m <= n_max) out[static_cast<size_t>(m)] = bj;
        if (m > 0 && m % 2 == 0) even_sum += 2.0 * bj;
        if (std::abs(bj) > 1e250) {
            bj *= 1e-250;
            bjp *= 1e-250;
            even_sum *= 1e-250;
            for (auto& v : out) v *= 1e-250;
        }
    }
    const double total = even_sum + bj;  // bj now holds b_0
    for (auto& v : out) v /= total;
    return out;
}

}  // namespace

std::vector<double> bessel_jn_sequence(int n_max, double x) {
    if (n_max < 0) throw std::invalid_argument("bessel_jn_sequence: order must be >= 0");
    if (x < 0.0) throw std::invalid_argument("bessel_jn_sequence: argument must be >= 0");
    if (x > kBesselDomainLimit || n_max > static_cast<int>(kBesselDomainLimit))
        throw std::range_error("bessel kernel supports n, x <= 1e4");

    std::vector<double> out(static_cast<size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (x < 1e-8) {
        // leading series terms; higher orders underflow to zero
        out[0] = 1.0 - 0.25 * x * x;
        if (n_max >= 1) out[1] = 0.5 * x;
        if (n_max >= 2) out[2] = 0.125 * x * x;
        return out;
    }
    return miller_sequence(n_max, x);
}

double bessel_jn(int n, double x) {
    if (n < 0) throw std::invalid_argument("bessel_jn: order must be >= 0");
    if (x < 0.0) throw std::invalid_argument("bessel_jn: argument must be >= 0");
    if (x > kBesselDomainLimit || n > static_cast<int>(kBesselDomainLimit))
        throw std::range_error("bessel kernel supports n, x <= 1e4");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (n >= 2) {
        // far below the turning point J_n is astronomically small
        const double lead = n * std::log(0.5 * x) - std::lgamma(static_cast<double>(n) + 1.0);
        if (lead < -700.0) return 0.0;
    }
    return bessel_jn_sequence(n, x)[static_cast<size_t>(n)];
}

}  // namespace chirpaf
