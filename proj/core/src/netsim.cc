#include "georoute/netsim.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>

#include "georoute/errors.hpp"

namespace georoute {

double SimConfig::effective_density() const noexcept
{
    return node_count > 0 ? static_cast<double>(node_count) / (field_width * field_height) : density;
}

void SimConfig::validate() const
{
    const auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ConfigError(std::string(name) + " must be a positive finite number");
    };
    positive(field_width, "field_width");
    positive(field_height, "field_height");
    if (node_count < 0)
        throw ConfigError("node_count must be >= 0");
    if (node_count == 0)
        positive(density, "density");
    positive(tx_range, "tx_range");
    if (!(speed_min >= 0.0) || !std::isfinite(speed_min))
        throw ConfigError("speed_min must be >= 0");
    if (!(speed_max >= speed_min) || !std::isfinite(speed_max))
        throw ConfigError("speed_max must be >= speed_min");
    positive(beacon_interval, "beacon_interval");
    positive(duration, "duration");
    positive(time_step, "time_step");
    if (time_step > beacon_interval)
        throw ConfigError("time_step must not exceed beacon_interval");
    if (flows < 0)
        throw ConfigError("flows must be >= 0");
    if (seeds < 1)
        throw ConfigError("seeds must be >= 1");
    if (ttl < 1)
        throw ConfigError("ttl must be >= 1");
    if (!(hop_latency_ms >= 0.0) || !std::isfinite(hop_latency_ms))
        throw ConfigError("hop_latency_ms must be >= 0");
}

NetworkSnapshot generate_nodes(const SimConfig& config)
{
    config.validate();
    auto placement = make_stream(config.seed, Stream::placement);
    auto kinematics = make_stream(config.seed, Stream::kinematics);

    std::int64_t count = config.node_count;
    if (count == 0) {
        std::poisson_distribution<std::int64_t> population(config.density * config.field_width * config.field_height);
        count = population(placement);
    }

    std::uniform_real_distribution<double> xs(0.0, config.field_width);
    std::uniform_real_distribution<double> ys(0.0, config.field_height);
    std::uniform_real_distribution<double> headings(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> speeds(config.speed_min, config.speed_max);

    std::vector<Vehicle> vehicles;
    vehicles.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        Vehicle v;
        v.id = static_cast<VehicleId>(i);
        v.position.x = xs(placement);
        v.position.y = ys(placement);
        v.heading.radians = wrap_angle(headings(kinematics));
        v.speed = speeds(kinematics);
        vehicles.push_back(v);
    }
    return NetworkSnapshot(std::move(vehicles), config.tx_range);
}

namespace {

// Reflects one coordinate back into [0, limit]; returns true on an odd
// number of bounces (the velocity component flipped).
bool reflect(double& coord, double limit)
{
    bool flipped = false;
    while (coord < 0.0 || coord > limit) {
        coord = coord < 0.0 ? -coord : 2.0 * limit - coord;
        flipped = !flipped;
    }
    coord = std::clamp(coord, 0.0, limit);
    return flipped;
}

void advance(Vehicle& v, double dt, Field field)
{
    const double h = v.heading.radians;
    v.position.x += v.speed * std::cos(h) * dt;
    v.position.y += v.speed * std::sin(h) * dt;
    double heading = h;
    if (reflect(v.position.x, field.width))
        heading = std::numbers::pi - heading;
    if (reflect(v.position.y, field.height))
        heading = -heading;
    v.heading.radians = wrap_angle(heading);
}

Position rewind(Vehicle v, double lag, Field field)
{
    if (lag <= 0.0 || v.speed == 0.0)
        return v.position;
    v.heading.radians = wrap_angle(v.heading.radians + std::numbers::pi);
    advance(v, lag, field);
    return v.position;
}

} // namespace

NetworkSnapshot step_mobility(const NetworkSnapshot& snapshot, double dt, Field field)
{
    if (!(dt > 0.0))
        throw InvalidArgument("step_mobility: dt must be positive");
    std::vector<Vehicle> moved = snapshot.vehicles();
    for (Vehicle& v : moved)
        advance(v, dt, field);
    return NetworkSnapshot(std::move(moved), snapshot.transmission_range());
}

double last_beacon_time(double sim_time, double beacon_interval)
{
    if (!(beacon_interval > 0.0))
        throw InvalidArgument("beacon_interval must be positive");
    // Absorb representation error of step * time_step landing just under a tick.
    const double tick = std::floor(sim_time / beacon_interval + 1e-9) * beacon_interval;
    return std::min(tick, sim_time);
}

std::map<VehicleId, Position> beacon_view(const NetworkSnapshot& snapshot, double sim_time, double beacon_interval,
                                          Field field)
{
    const double lag = sim_time - last_beacon_time(sim_time, beacon_interval);
    std::map<VehicleId, Position> view;
    for (const Vehicle& v : snapshot.vehicles())
        view.emplace(v.id, rewind(v, lag, field));
    return view;
}

namespace {

std::uint64_t fold(std::uint64_t h, std::uint64_t value)
{
    return mix64(h ^ value);
}

std::uint64_t fold(std::uint64_t h, double value)
{
    return fold(h, std::bit_cast<std::uint64_t>(value));
}

} // namespace

CampaignMetrics run_campaign(const SimConfig& config)
{
    config.validate();
    const Field field = config.field();
    NetworkSnapshot truth = generate_nodes(config);
    auto flow_rng = make_stream(config.seed, Stream::flows);

    const std::int64_t steps = std::max<std::int64_t>(1, std::llround(config.duration / config.time_step));
    const auto scheduled_step = [&](std::int64_t flow) { return flow * steps / config.flows; };

    CampaignMetrics m;
    m.protocol = config.protocol;
    m.density = config.effective_density();
    m.tx_range = config.tx_range;
    m.seed = config.seed;

    std::int64_t hop_sum = 0;
    double length_sum = 0.0;
    std::uint64_t hash = mix64(config.seed);
    std::int64_t next_flow = 0;

    for (std::int64_t step = 0; step < steps; ++step) {
        const double now = static_cast<double>(step) * config.time_step;
        for (; next_flow < config.flows && scheduled_step(next_flow) == step; ++next_flow) {
            const auto n = static_cast<std::int64_t>(truth.size());
            // A population below two has no valid endpoint pair; the flow is not sent.
            if (n < 2)
                continue;
            const auto src_index = std::uniform_int_distribution<std::int64_t>(0, n - 1)(flow_rng);
            auto dst_index = std::uniform_int_distribution<std::int64_t>(0, n - 2)(flow_rng);
            if (dst_index >= src_index)
                ++dst_index;
            const Vehicle& src = truth.vehicles()[static_cast<std::size_t>(src_index)];
            const Vehicle& dst = truth.vehicles()[static_cast<std::size_t>(dst_index)];

            const double t0 = last_beacon_time(now, config.beacon_interval);
            const Packet packet =
                Packet::make(src.id, dst.id, rewind(dst, now - t0, field), dst.speed, t0, config.ttl);
            const RouteResult result = route(config.protocol, packet, truth, now);

            hash = fold(hash, static_cast<std::uint64_t>(src.id) << 32 | dst.id);
            for (const Vehicle& v : truth.vehicles())
                hash = fold(fold(hash, v.position.x), v.position.y);

            ++m.sent;
            ++m.outcomes[static_cast<std::size_t>(result.outcome)];
            if (result.outcome == RouteOutcome::delivered) {
                ++m.delivered;
                hop_sum += result.hop_count;
                for (std::size_t i = 1; i < result.path.size(); ++i)
                    length_sum += distance(truth.at(result.path[i - 1]).position, truth.at(result.path[i]).position);
            }
        }
        if (step + 1 < steps)
            truth = step_mobility(truth, config.time_step, field);
    }

    m.scenario_hash = hash;
    if (m.sent > 0)
        m.pdr = static_cast<double>(m.delivered) / static_cast<double>(m.sent);
    if (m.delivered > 0) {
        const double delivered = static_cast<double>(m.delivered);
        m.mean_hop_count = static_cast<double>(hop_sum) / delivered;
        m.mean_path_length_m = length_sum / delivered;
        m.mean_delay_ms = *m.mean_hop_count * config.hop_latency_ms;
    }
    return m;
}

std::vector<CampaignMetrics> run_campaigns(std::span<const SimConfig> configs, unsigned threads)
{
    for (const SimConfig& c : configs)
        c.validate();

    std::vector<CampaignMetrics> results(configs.size());
    std::vector<std::exception_ptr> errors(configs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                results[i] = run_campaign(configs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, configs.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

void write_metrics_header(std::ostream& out)
{
    out << "protocol,density,tx_range,seed,sent,delivered,pdr,mean_hops,mean_delay_ms,"
           "void_drops,ttl_drops,loop_drops,zone_unreachable\n";
}

void write_metrics_row(std::ostream& out, const CampaignMetrics& m)
{
    const auto real = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    const auto opt = [&](const std::optional<double>& v) { return v ? real(*v) : std::string("null"); };

    out << to_string(m.protocol) << ',' << real(m.density) << ',' << real(m.tx_range) << ',' << m.seed << ','
        << m.sent << ',' << m.delivered << ',' << opt(m.pdr) << ',' << opt(m.mean_hop_count) << ','
        << opt(m.mean_delay_ms) << ',' << m.count(RouteOutcome::void_drop) << ','
        << m.count(RouteOutcome::ttl_drop) << ',' << m.count(RouteOutcome::loop_drop) << ','
        << m.count(RouteOutcome::zone_unreachable) << '\n';
}

} // namespace georoute
