#pragma once

#include "georoute/geometry.hpp"

namespace georoute {

// Disk in which the destination is expected to be found at t1, given its
// position at t0 and its speed.
struct ExpectedZone
{
    Position center;
    double radius = 0.0;
};

// Axis-aligned rectangle; membership is boundary inclusive.
struct RequestZone
{
    Position min_corner;
    Position max_corner;

    bool contains(Position p) const noexcept
    {
        return min_corner.x <= p.x && p.x <= max_corner.x && min_corner.y <= p.y && p.y <= max_corner.y;
    }

    friend bool operator==(const RequestZone&, const RequestZone&) = default;
};

// Throws InvalidArgument if t1 < t0 or dest_speed < 0.
ExpectedZone expected_zone(Position dest_pos_t0, double dest_speed, double t0, double t1);

// Smallest axis-aligned rectangle holding both the zone disk and the source.
RequestZone request_zone(Position source, const ExpectedZone& ez) noexcept;

inline bool in_request_zone(Position p, const RequestZone& rz) noexcept { return rz.contains(p); }

} // namespace georoute
