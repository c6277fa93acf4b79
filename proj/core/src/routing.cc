#include "georoute/routing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <tuple>

#include "georoute/errors.hpp"

namespace georoute {

NetworkSnapshot::NetworkSnapshot(std::vector<Vehicle> vehicles, double transmission_range)
    : vehicles_(std::move(vehicles)), range_(transmission_range)
{
    if (!(range_ > 0.0) || !std::isfinite(range_))
        throw InvalidArgument("snapshot: transmission_range must be positive and finite");
    std::sort(vehicles_.begin(), vehicles_.end(), [](const Vehicle& a, const Vehicle& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vehicles_.size(); ++i) {
        Vehicle& v = vehicles_[i];
        if (i > 0 && vehicles_[i - 1].id == v.id)
            throw InvalidArgument("snapshot: duplicate vehicle id " + std::to_string(v.id));
        if (!v.position.finite())
            throw InvalidArgument("snapshot: non-finite position for vehicle " + std::to_string(v.id));
        if (!(v.speed >= 0.0) || !std::isfinite(v.speed) || !std::isfinite(v.heading.radians))
            throw InvalidArgument("snapshot: bad kinematics for vehicle " + std::to_string(v.id));
        v.heading.radians = wrap_angle(v.heading.radians);
    }
}

const Vehicle* NetworkSnapshot::find(VehicleId id) const noexcept
{
    auto it = std::lower_bound(vehicles_.begin(), vehicles_.end(), id,
                               [](const Vehicle& v, VehicleId key) { return v.id < key; });
    return it != vehicles_.end() && it->id == id ? &*it : nullptr;
}

const Vehicle& NetworkSnapshot::at(VehicleId id) const
{
    if (const Vehicle* v = find(id))
        return *v;
    throw UnknownVehicle("unknown vehicle id " + std::to_string(id));
}

bool NetworkSnapshot::linked(const Vehicle& a, const Vehicle& b) const noexcept
{
    return distance(a.position, b.position) <= range_;
}

std::string_view to_string(Protocol p) noexcept
{
    switch (p) {
    case Protocol::dir: return "dir";
    case Protocol::lar: return "lar";
    case Protocol::dlar: return "dlar";
    }
    return "?";
}

Protocol parse_protocol(std::string_view name)
{
    if (name == "dir")
        return Protocol::dir;
    if (name == "lar")
        return Protocol::lar;
    if (name == "dlar")
        return Protocol::dlar;
    throw InvalidArgument("unknown protocol '" + std::string(name) + "' (expected dir, lar or dlar)");
}

std::string_view to_string(RouteOutcome o) noexcept
{
    switch (o) {
    case RouteOutcome::delivered: return "delivered";
    case RouteOutcome::void_drop: return "void_drop";
    case RouteOutcome::ttl_drop: return "ttl_drop";
    case RouteOutcome::loop_drop: return "loop_drop";
    case RouteOutcome::zone_unreachable: return "zone_unreachable";
    }
    return "?";
}

Packet Packet::make(VehicleId source, VehicleId dest, Position dest_last_pos, double dest_speed, double t0, int ttl)
{
    return {source, dest, dest_last_pos, dest_speed, t0, {source}, ttl};
}

Packet Packet::from_snapshot(VehicleId source, VehicleId dest, const NetworkSnapshot& snapshot, double now, int ttl)
{
    const Vehicle& d = snapshot.at(dest);
    return make(source, dest, d.position, d.speed, now, ttl);
}

bool Packet::was_visited(VehicleId id) const noexcept
{
    return std::find(visited.begin(), visited.end(), id) != visited.end();
}

std::vector<Vehicle> neighbors(VehicleId id, const NetworkSnapshot& snapshot)
{
    const Vehicle& self = snapshot.at(id);
    std::vector<Vehicle> out;
    for (const Vehicle& v : snapshot.vehicles())
        if (v.id != id && snapshot.linked(self, v))
            out.push_back(v);
    return out;
}

namespace {

bool contains(std::span<const VehicleId> ids, VehicleId id)
{
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::optional<Vehicle> min_deviation(Position here, Position dest_pos, const std::vector<Vehicle>& candidates)
{
    std::optional<Vehicle> best;
    std::tuple<double, double, VehicleId> best_key;
    for (const Vehicle& c : candidates) {
        const double dev =
            c.position == here ? std::numbers::pi : deviation_angle(here, c.position, dest_pos).radians;
        std::tuple key{dev, distance(c.position, dest_pos), c.id};
        if (!best || key < best_key) {
            best = c;
            best_key = key;
        }
    }
    return best;
}

} // namespace

std::vector<Vehicle> dir_candidates(const Vehicle& current, const NetworkSnapshot& snapshot,
                                    std::span<const VehicleId> visited)
{
    std::vector<Vehicle> out = neighbors(current.id, snapshot);
    std::erase_if(out, [&](const Vehicle& v) { return contains(visited, v.id); });
    return out;
}

std::optional<Vehicle> dir_next_hop(const Vehicle& current, Position dest_pos, const NetworkSnapshot& snapshot,
                                    std::span<const VehicleId> visited)
{
    if (dest_pos == current.position)
        throw DegenerateGeometry("dir_next_hop: destination position equals current position");
    return min_deviation(current.position, dest_pos, dir_candidates(current, snapshot, visited));
}

RequestZone forwarding_zone(const Vehicle& current, const Packet& packet, double now)
{
    return request_zone(current.position, expected_zone(packet.dest_last_pos, packet.dest_speed, packet.t0, now));
}

std::vector<Vehicle> dlar_zone_candidates(const Vehicle& current, const Packet& packet,
                                          const NetworkSnapshot& snapshot, double now)
{
    const RequestZone rz = forwarding_zone(current, packet, now);
    std::vector<Vehicle> out = dir_candidates(current, snapshot, packet.visited);
    std::erase_if(out, [&](const Vehicle& v) { return !rz.contains(v.position); });
    return out;
}

std::vector<Vehicle> dlar_candidates(const Vehicle& current, const Packet& packet, const NetworkSnapshot& snapshot,
                                     double now)
{
    std::vector<Vehicle> zone = dlar_zone_candidates(current, packet, snapshot, now);
    std::vector<Vehicle> aligned;
    for (const Vehicle& v : zone)
        if (std::fabs(wrap_angle(v.heading.radians - current.heading.radians)) <= std::numbers::pi / 2)
            aligned.push_back(v);
    return aligned.empty() ? zone : aligned;
}

std::optional<Vehicle> dlar_next_hop(const Vehicle& current, const Packet& packet, const NetworkSnapshot& snapshot,
                                     double now)
{
    if (packet.dest_last_pos == current.position)
        throw DegenerateGeometry("dlar_next_hop: destination position equals current position");
    return min_deviation(current.position, packet.dest_last_pos, dlar_candidates(current, packet, snapshot, now));
}

namespace {

void check_endpoints(const Packet& packet, const NetworkSnapshot& snapshot)
{
    snapshot.at(packet.source_id);
    snapshot.at(packet.dest_id);
    if (packet.source_id == packet.dest_id)
        throw InvalidArgument("route: source and destination are the same vehicle");
    if (packet.ttl <= 0)
        throw InvalidArgument("route: ttl must be positive");
}

RouteResult finish(RouteOutcome outcome, std::vector<VehicleId> path)
{
    const int hops = path.empty() ? 0 : static_cast<int>(path.size()) - 1;
    return {outcome, std::move(path), hops};
}

} // namespace

RouteResult lar_route_discovery(const Packet& packet, const NetworkSnapshot& snapshot, double now)
{
    check_endpoints(packet, snapshot);
    const Vehicle& source = snapshot.at(packet.source_id);
    const RequestZone rz = forwarding_zone(source, packet, now);

    const auto& all = snapshot.vehicles();
    const auto index_of = [&](VehicleId id) { return static_cast<std::size_t>(snapshot.find(id) - all.data()); };
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(all.size(), kNone);
    std::vector<int> depth(all.size(), -1);
    std::deque<std::size_t> frontier;

    const std::size_t src = index_of(packet.source_id);
    depth[src] = 0;
    frontier.push_back(src);
    bool truncated = false;

    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop_front();
        if (depth[u] >= packet.ttl) {
            truncated = true;
            continue;
        }
        for (std::size_t n = 0; n < all.size(); ++n) {
            if (depth[n] >= 0 || !snapshot.linked(all[u], all[n]))
                continue;
            depth[n] = depth[u] + 1;
            parent[n] = u;
            if (all[n].id == packet.dest_id) {
                std::vector<VehicleId> path;
                for (std::size_t at = n; at != kNone; at = parent[at])
                    path.push_back(all[at].id);
                std::reverse(path.begin(), path.end());
                return finish(RouteOutcome::delivered, std::move(path));
            }
            // Out-of-zone receivers drop the request.
            if (rz.contains(all[n].position))
                frontier.push_back(n);
        }
    }
    return finish(truncated ? RouteOutcome::ttl_drop : RouteOutcome::zone_unreachable, {packet.source_id});
}

RouteResult route(Protocol protocol, const Packet& packet, const NetworkSnapshot& snapshot, double now)
{
    check_endpoints(packet, snapshot);
    if (protocol == Protocol::lar)
        return lar_route_discovery(packet, snapshot, now);

    Packet p = packet;
    if (p.visited.empty() || p.visited.front() != p.source_id)
        p.visited.assign(1, p.source_id);
    const Vehicle& dest = snapshot.at(p.dest_id);
    const Vehicle* current = &snapshot.at(p.visited.back());

    for (;;) {
        if (p.ttl == 0)
            return finish(RouteOutcome::ttl_drop, std::move(p.visited));
        if (snapshot.linked(*current, dest)) {
            p.visited.push_back(dest.id);
            return finish(RouteOutcome::delivered, std::move(p.visited));
        }
        // Sitting on the believed destination spot: no direction to steer by.
        if (current->position == p.dest_last_pos)
            return finish(RouteOutcome::void_drop, std::move(p.visited));

        const std::optional<Vehicle> next = protocol == Protocol::dir
                                                ? dir_next_hop(*current, p.dest_last_pos, snapshot, p.visited)
                                                : dlar_next_hop(*current, p, snapshot, now);
        if (!next)
            return finish(RouteOutcome::void_drop, std::move(p.visited));
        if (p.was_visited(next->id))
            return finish(RouteOutcome::loop_drop, std::move(p.visited));
        --p.ttl;
        p.visited.push_back(next->id);
        current = &snapshot.at(next->id);
    }
}

RouteResult route(Protocol protocol, VehicleId source_id, VehicleId dest_id, const NetworkSnapshot& snapshot,
                  double now, int ttl)
{
    return route(protocol, Packet::from_snapshot(source_id, dest_id, snapshot, now, ttl), snapshot, now);
}

} // namespace georoute
