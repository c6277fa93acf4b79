#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "georoute/geometry.hpp"
#include "georoute/zones.hpp"

namespace georoute {

using VehicleId = std::uint32_t;

inline constexpr int kDefaultTtl = 64;

struct Vehicle
{
    VehicleId id = 0;
    Position position;
    double speed = 0.0;  // m/s, >= 0
    Angle heading;       // direction of motion, (-pi, pi]

    friend bool operator==(const Vehicle&, const Vehicle&) = default;
};

// Immutable view of the network at one instant. Vehicles are kept sorted by
// id; ids must be unique and the transmission range positive.
class NetworkSnapshot
{
  public:
    NetworkSnapshot(std::vector<Vehicle> vehicles, double transmission_range);

    const std::vector<Vehicle>& vehicles() const noexcept { return vehicles_; }
    double transmission_range() const noexcept { return range_; }
    std::size_t size() const noexcept { return vehicles_.size(); }

    const Vehicle* find(VehicleId id) const noexcept;
    // Throws UnknownVehicle.
    const Vehicle& at(VehicleId id) const;

    bool linked(const Vehicle& a, const Vehicle& b) const noexcept;

  private:
    std::vector<Vehicle> vehicles_;
    double range_;
};

enum class Protocol
{
    dir,
    lar,
    dlar,
};

std::string_view to_string(Protocol p) noexcept;
// Throws InvalidArgument for anything but "dir", "lar", "dlar".
Protocol parse_protocol(std::string_view name);

// Route request / data packet. The request zone is not carried; each
// forwarder rebuilds it from the destination fields.
struct Packet
{
    VehicleId source_id = 0;
    VehicleId dest_id = 0;
    Position dest_last_pos;
    double dest_speed = 0.0;
    double t0 = 0.0;  // timestamp of dest_last_pos
    std::vector<VehicleId> visited;
    int ttl = kDefaultTtl;

    static Packet make(VehicleId source, VehicleId dest, Position dest_last_pos, double dest_speed, double t0,
                       int ttl = kDefaultTtl);

    // Destination knowledge taken verbatim from the snapshot, stamped at `now`.
    static Packet from_snapshot(VehicleId source, VehicleId dest, const NetworkSnapshot& snapshot, double now,
                                int ttl = kDefaultTtl);

    bool was_visited(VehicleId id) const noexcept;
};

enum class RouteOutcome
{
    delivered,
    void_drop,
    ttl_drop,
    loop_drop,
    zone_unreachable,
};

std::string_view to_string(RouteOutcome o) noexcept;

struct RouteResult
{
    RouteOutcome outcome = RouteOutcome::void_drop;
    std::vector<VehicleId> path;
    int hop_count = 0;

    friend bool operator==(const RouteResult&, const RouteResult&) = default;
};

// All other vehicles within transmission range (inclusive), ordered by id.
// Throws UnknownVehicle.
std::vector<Vehicle> neighbors(VehicleId id, const NetworkSnapshot& snapshot);

// Unvisited neighbours of `current`: the DIR candidate set.
std::vector<Vehicle> dir_candidates(const Vehicle& current, const NetworkSnapshot& snapshot,
                                    std::span<const VehicleId> visited = {});

// Compass rule: the candidate whose direction from `current` deviates least
// from the direction to dest_pos. Ties go to the candidate nearer dest_pos,
// then to the smaller id. A candidate co-located with `current` has no
// direction and ranks with deviation pi.
std::optional<Vehicle> dir_next_hop(const Vehicle& current, Position dest_pos, const NetworkSnapshot& snapshot,
                                    std::span<const VehicleId> visited = {});

// Request zone anchored at `current` for the packet's destination at `now`.
RequestZone forwarding_zone(const Vehicle& current, const Packet& packet, double now);

// Unvisited neighbours inside forwarding_zone(), before the heading filter.
std::vector<Vehicle> dlar_zone_candidates(const Vehicle& current, const Packet& packet,
                                          const NetworkSnapshot& snapshot, double now);

// Zone candidates moving within pi/2 of current's heading; the heading
// filter is dropped when it would leave nothing.
std::vector<Vehicle> dlar_candidates(const Vehicle& current, const Packet& packet, const NetworkSnapshot& snapshot,
                                     double now);

std::optional<Vehicle> dlar_next_hop(const Vehicle& current, const Packet& packet, const NetworkSnapshot& snapshot,
                                     double now);

// Zone-restricted RREQ flood from packet.source_id. Only members of the
// source-anchored request zone rebroadcast; the destination accepts from
// anywhere. Nodes reached at depth packet.ttl do not rebroadcast. The path
// is the first-arrival BFS path with neighbours expanded in id order.
// Throws UnknownVehicle.
RouteResult lar_route_discovery(const Packet& packet, const NetworkSnapshot& snapshot, double now);

// Drives one packet to completion. Greedy protocols hop until the
// destination is a direct neighbour of the current holder; lar delegates to
// lar_route_discovery(). Throws UnknownVehicle, or InvalidArgument when
// source == dest or ttl <= 0.
RouteResult route(Protocol protocol, const Packet& packet, const NetworkSnapshot& snapshot, double now);

RouteResult route(Protocol protocol, VehicleId source_id, VehicleId dest_id, const NetworkSnapshot& snapshot,
                  double now, int ttl = kDefaultTtl);

} // namespace georoute
