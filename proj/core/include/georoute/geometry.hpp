#pragma once

#include <cmath>
#include <numbers>

namespace georoute {

// Planar coordinate in meters.
struct Position
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position&, const Position&) = default;

    bool finite() const noexcept { return std::isfinite(x) && std::isfinite(y); }
};

// Radians. Bearings live in (-pi, pi], deviations in [0, pi].
struct Angle
{
    double radians = 0.0;

    double degrees() const noexcept { return radians * 180.0 / std::numbers::pi; }
    static Angle from_degrees(double deg) noexcept { return {deg * std::numbers::pi / 180.0}; }

    friend auto operator<=>(const Angle&, const Angle&) = default;
};

// Maps any finite angle into (-pi, pi].
double wrap_angle(double radians) noexcept;

double distance(Position a, Position b) noexcept;

// Direction of (to - from) from the +x axis, quadrant-aware.
// Throws DegenerateGeometry when from == to.
Angle bearing(Position from, Position to);

// Unsigned angle at `s` between the rays toward `candidate` and toward `d`.
// Zero iff candidate lies on the ray from s through d.
// Throws DegenerateGeometry when candidate == s or d == s.
Angle deviation_angle(Position s, Position candidate, Position d);

} // namespace georoute
