#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "georoute/random.hpp"
#include "georoute/routing.hpp"

namespace georoute {

struct Field
{
    double width = 1000.0;
    double height = 1000.0;

    bool contains(Position p) const noexcept { return 0.0 <= p.x && p.x <= width && 0.0 <= p.y && p.y <= height; }
};

struct SimConfig
{
    double field_width = 1000.0;
    double field_height = 1000.0;
    double density = 1e-4;        // nodes/m^2, used when node_count == 0
    std::int64_t node_count = 0;  // fixed population when > 0
    double tx_range = 250.0;
    double speed_min = 5.0;
    double speed_max = 20.0;
    double beacon_interval = 1.0;
    double duration = 10.0;
    double time_step = 0.1;
    Protocol protocol = Protocol::dlar;
    std::int64_t flows = 100;
    std::uint64_t seed = 1;
    std::int64_t seeds = 1;  // consecutive seeds per sweep cell, starting at `seed`
    int ttl = kDefaultTtl;
    double hop_latency_ms = 2.0;

    Field field() const noexcept { return {field_width, field_height}; }

    // Density actually realised: node_count / area for fixed populations.
    double effective_density() const noexcept;

    // Throws ConfigError naming the violated field.
    void validate() const;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// Poisson(density * area) nodes (or node_count), uniform over the field.
NetworkSnapshot generate_nodes(const SimConfig& config);

// Constant-velocity motion; a vehicle leaving the field is reflected back in
// and its heading mirrored on the crossed axis.
NetworkSnapshot step_mobility(const NetworkSnapshot& snapshot, double dt, Field field);

double last_beacon_time(double sim_time, double beacon_interval);

// Each vehicle's position at the most recent beacon tick, recovered by
// running the motion backwards from sim_time. Throws InvalidArgument when
// beacon_interval <= 0.
std::map<VehicleId, Position> beacon_view(const NetworkSnapshot& snapshot, double sim_time, double beacon_interval,
                                          Field field);

struct CampaignMetrics
{
    Protocol protocol = Protocol::dlar;
    double density = 0.0;
    double tx_range = 0.0;
    std::uint64_t seed = 0;
    std::int64_t sent = 0;
    std::int64_t delivered = 0;
    std::optional<double> pdr;
    std::optional<double> mean_hop_count;
    std::optional<double> mean_path_length_m;
    std::optional<double> mean_delay_ms;
    std::array<std::int64_t, 5> outcomes{};  // indexed by RouteOutcome
    // Digest of every routed snapshot and flow endpoint; equal across
    // protocols run from the same config.
    std::uint64_t scenario_hash = 0;

    std::int64_t count(RouteOutcome o) const noexcept { return outcomes[static_cast<std::size_t>(o)]; }
};

// Throws ConfigError before any simulation work if the config is invalid.
CampaignMetrics run_campaign(const SimConfig& config);

// Runs independent campaigns, possibly concurrently; output order matches
// input order.
std::vector<CampaignMetrics> run_campaigns(std::span<const SimConfig> configs, unsigned threads = 0);

void write_metrics_header(std::ostream& out);
void write_metrics_row(std::ostream& out, const CampaignMetrics& m);

} // namespace georoute
