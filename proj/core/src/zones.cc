#include "georoute/zones.hpp"

#include <algorithm>

#include "georoute/errors.hpp"

namespace georoute {

ExpectedZone expected_zone(Position dest_pos_t0, double dest_speed, double t0, double t1)
{
    if (!(t1 >= t0))
        throw InvalidArgument("expected_zone: t1 precedes t0");
    if (!(dest_speed >= 0.0))
        throw InvalidArgument("expected_zone: negative destination speed");
    return {dest_pos_t0, dest_speed * (t1 - t0)};
}

RequestZone request_zone(Position source, const ExpectedZone& ez) noexcept
{
    const Position& c = ez.center;
    const double r = ez.radius;
    return {
        {std::min(source.x, c.x - r), std::min(source.y, c.y - r)},
        {std::max(source.x, c.x + r), std::max(source.y, c.y + r)},
    };
}

} // namespace georoute
