#include "georoute/geometry.hpp"

#include "georoute/errors.hpp"

namespace georoute {

double wrap_angle(double radians) noexcept
{
    double r = std::remainder(radians, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi)
        r += 2.0 * std::numbers::pi;
    return r;
}

double distance(Position a, Position b) noexcept
{
    return std::hypot(b.x - a.x, b.y - a.y);
}

Angle bearing(Position from, Position to)
{
    if (from == to)
        throw DegenerateGeometry("bearing: source and target coincide");
    double theta = std::atan2(to.y - from.y, to.x - from.x);
    // atan2(-0, negative) yields -pi; the half-open range excludes it.
    if (theta == -std::numbers::pi)
        theta = std::numbers::pi;
    return {theta};
}

Angle deviation_angle(Position s, Position candidate, Position d)
{
    if (candidate == s || d == s)
        throw DegenerateGeometry("deviation_angle: ray endpoint coincides with origin");
    const double ux = candidate.x - s.x, uy = candidate.y - s.y;
    const double vx = d.x - s.x, vy = d.y - s.y;
    const double cross = ux * vy - uy * vx;
    const double dot = ux * vx + uy * vy;
    return {std::atan2(std::fabs(cross), dot)};
}

} // namespace georoute
