#include "chirpaf/geometry.hpp"

#include <cmath>
#include <numbers>

namespace chirpaf {

double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    return a;
}

PolarPosition to_polar(Position p) {
    const double r = norm(p);
    if (r == 0.0) return {0.0, 0.0};
    return {r, std::atan2(p.y, p.x)};
}

Position to_cartesian(PolarPosition p) {
    return {p.radius * std::cos(p.angle), p.radius * std::sin(p.angle)};
}

PolarPosition separation(Position x_s, Position x_t) { return to_polar(x_s - x_t); }

ArrayCurve ArrayCurve::circular_arc(double radius, double half_angle) {
    if (!(radius > 0.0)) throw std::invalid_argument("circular arc: radius must be positive");
    if (!(half_angle > 0.0) || half_angle > std::numbers::pi + 1e-15)
        throw std::invalid_argument("circular arc: half angle must be in (0, pi]");
    return ArrayCurve(Kind::circular_arc, radius, half_angle, -half_angle, half_angle);
}

ArrayCurve ArrayCurve::line_segment(double length) {
    if (!(length > 0.0)) throw std::invalid_argument("line segment: length must be positive");
    return ArrayCurve(Kind::line_segment, length, 0.0, -0.5 * length, 0.5 * length);
}

double ArrayCurve::radius() const {
    if (kind_ != Kind::circular_arc) throw std::logic_error("radius(): not a circular arc");
    return a_;
}

double ArrayCurve::half_angle() const {
    if (kind_ != Kind::circular_arc) throw std::logic_error("half_angle(): not a circular arc");
    return b_;
}

double ArrayCurve::length() const {
    if (kind_ != Kind::line_segment) throw std::logic_error("length(): not a line segment");
    return a_;
}

bool ArrayCurve::contains(double tau) const {
    const double slack = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max({std::abs(tau_min_), std::abs(tau_max_), 1.0});
    return tau >= tau_min_ - slack && tau <= tau_max_ + slack;
}

void ArrayCurve::check_domain(double tau) const {
    if (!contains(tau))
        throw std::domain_error("curve parameter " + std::to_string(tau) + " outside [" +
                                std::to_string(tau_min_) + ", " + std::to_string(tau_max_) + "]");
}

Position ArrayCurve::point_at(double tau) const {
    check_domain(tau);
    if (kind_ == Kind::circular_arc) return {a_ * std::cos(tau), a_ * std::sin(tau)};
    return {tau, 0.0};
}

Position ArrayCurve::tangent_at(double tau) const {
    check_domain(tau);
    if (kind_ == Kind::circular_arc) return {-a_ * std::sin(tau), a_ * std::cos(tau)};
    return {1.0, 0.0};
}

double ArrayCurve::tangent_norm_at(double tau) const {
    check_domain(tau);
    return kind_ == Kind::circular_arc ? a_ : 1.0;
}

SamplingGrid SamplingGrid::over(const ArrayCurve& curve, int n, NodePlacement placement) {
    if (n < 1) throw std::invalid_argument("sampling grid: need at least one node");
    return {curve.tau_min(), curve.domain_length() / n, n, placement};
}

std::vector<double> SamplingGrid::nodes() const {
    std::vector<double> out(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = node(i);
    return out;
}

}  // namespace chirpaf
