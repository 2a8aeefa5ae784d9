// geometry.hpp - positions, polar coordinates, parametric array curves and
// their uniform discretizations. All lengths are in carrier-wavelength units.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace chirpaf {

struct Position {
    double x = 0.0;
    double y = 0.0;
};

inline Position operator-(Position a, Position b) { return {a.x - b.x, a.y - b.y}; }
inline Position operator+(Position a, Position b) { return {a.x + b.x, a.y + b.y}; }
inline double dot(Position a, Position b) { return a.x * b.x + a.y * b.y; }
inline double norm(Position a) { return std::hypot(a.x, a.y); }
inline double distance(Position a, Position b) { return norm(a - b); }

/// Polar form with radius >= 0 and angle in (-pi, pi].
struct PolarPosition {
    double radius = 0.0;
    double angle = 0.0;
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

PolarPosition to_polar(Position p);
Position to_cartesian(PolarPosition p);

/// Polar form of x_s - x_t; angle is 0 when the radius vanishes.
PolarPosition separation(Position x_s, Position x_t);

/// A 1D antenna curve in the plane: a circular arc of radius R centered at the
/// origin spanning [-psi, psi], or a line segment of length L on the x-axis
/// spanning [-L/2, L/2] in the parameter tau.
class ArrayCurve {
  public:
    enum class Kind { circular_arc, line_segment };

    static ArrayCurve circular_arc(double radius, double half_angle);
    static ArrayCurve line_segment(double length);

    Kind kind() const { return kind_; }
    double radius() const;      // circular arcs only
    double half_angle() const;  // circular arcs only
    double length() const;      // line segments only

    double tau_min() const { return tau_min_; }
    double tau_max() const { return tau_max_; }
    double domain_length() const { return tau_max_ - tau_min_; }
    bool contains(double tau) const;

    Position point_at(double tau) const;
    Position tangent_at(double tau) const;
    double tangent_norm_at(double tau) const;

  private:
    ArrayCurve(Kind k, double a, double b, double lo, double hi)
        : kind_(k), a_(a), b_(b), tau_min_(lo), tau_max_(hi) {}
    void check_domain(double tau) const;

    Kind kind_;
    double a_ = 0.0;  // radius or length
    double b_ = 0.0;  // half angle (arc only)
    double tau_min_ = 0.0;
    double tau_max_ = 0.0;
};

enum class NodePlacement { midpoint, endpoint };

/// Uniform discretization of a curve domain into N nodes with step
/// delta = |T|/N. Midpoint nodes tau_i = tau_min + (i + 1/2) delta are the
/// default; endpoint placement puts tau_i = tau_min + i delta instead.
struct SamplingGrid {
    double tau_min = 0.0;
    double delta = 0.0;
    int count = 0;
    NodePlacement placement = NodePlacement::midpoint;

    static SamplingGrid over(const ArrayCurve& curve, int n,
                             NodePlacement placement = NodePlacement::midpoint);

    double node(int i) const {
        const double off = (placement == NodePlacement::midpoint) ? 0.5 : 0.0;
        return tau_min + (static_cast<double>(i) + off) * delta;
    }
    std::vector<double> nodes() const;
};

}  // namespace chirpaf
