#include "georoute/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "georoute/errors.hpp"
#include "georoute/feasibility.hpp"
#include "georoute/random.hpp"

namespace georoute::cli {

Sweep Sweep::parse(std::string_view text)
{
    const auto [key, range] = split_assignment(text);
    Sweep s;
    s.key = key;

    std::string_view rest = range;
    double parts[3];
    for (int i = 0; i < 3; ++i) {
        const auto colon = rest.find(':');
        if ((i < 2) == (colon == std::string_view::npos))
            throw ConfigError("--sweep expects key=lo:hi:steps, got '" + std::string(text) + "'");
        const std::string_view field = rest.substr(0, colon);
        const char* end = field.data() + field.size();
        auto [ptr, ec] = std::from_chars(field.data(), end, parts[i]);
        if (ec != std::errc{} || ptr != end || field.empty())
            throw ConfigError("--sweep: cannot parse '" + std::string(field) + "'");
        if (colon != std::string_view::npos)
            rest.remove_prefix(colon + 1);
    }
    s.lo = parts[0];
    s.hi = parts[1];
    if (parts[2] < 1 || parts[2] != static_cast<int>(parts[2]))
        throw ConfigError("--sweep: steps must be a positive integer");
    s.steps = static_cast<int>(parts[2]);
    return s;
}

std::vector<double> Sweep::values() const
{
    std::vector<double> out;
    for (int i = 0; i < steps; ++i)
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    std::sort(out.begin(), out.end());
    return out;
}

void cmd_analyze(const AnalyzeConfig& config, std::ostream& out)
{
    config.validate();
    const bool with_mc = config.mc_trials > 0;
    out << "density,k,region,probability" << (with_mc ? ",mc_estimate,mc_stderr" : "") << '\n';

    std::uint64_t cell = 0;
    for (RegionKind region : {RegionKind::full_circle, RegionKind::quarter_circle}) {
        const auto rows = feasibility_table(config.densities, config.tx_range, config.k_max, region);
        if (!with_mc) {
            write_feasibility_csv(out, rows, false);
            continue;
        }
        std::vector<std::uint32_t> counts;
        double counted_density = -1.0;
        char buf[160];
        for (const FeasibilityRow& row : rows) {
            if (row.density != counted_density) {
                counts = sample_region_counts({row.density, config.tx_range, 0}, region, config.mc_trials,
                                              mix64(config.seed + cell++));
                counted_density = row.density;
            }
            const McEstimate mc = estimate_at_least_k(counts, row.k);
            std::snprintf(buf, sizeof buf, "%.10g,%d,%s,%.10g,%.10g,%.10g\n", row.density, row.k,
                          to_string(row.region).data(), row.probability, mc.estimate, mc.stderr_);
            out << buf;
        }
    }
}

std::vector<SimConfig> expand_cells(const SimConfig& base, const std::optional<Sweep>& sweep,
                                    std::span<const Protocol> protocols)
{
    std::vector<SimConfig> points;
    if (sweep) {
        for (double v : sweep->values()) {
            SimConfig c = base;
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            set_key(c, sweep->key, buf);
            points.push_back(c);
        }
    } else {
        points.push_back(base);
    }

    std::vector<SimConfig> cells;
    for (const SimConfig& point : points) {
        for (std::int64_t s = 0; s < point.seeds; ++s) {
            for (Protocol p : protocols) {
                SimConfig c = point;
                c.seed = point.seed + static_cast<std::uint64_t>(s);
                c.protocol = p;
                c.validate();
                cells.push_back(c);
            }
        }
    }
    return cells;
}

namespace {

void run_and_write(const std::vector<SimConfig>& cells, std::ostream& out)
{
    const auto results = run_campaigns(cells);
    write_metrics_header(out);
    for (const CampaignMetrics& m : results)
        write_metrics_row(out, m);
}

} // namespace

void cmd_simulate(const SimConfig& config, const std::optional<Sweep>& sweep, std::ostream& out)
{
    const Protocol only[] = {config.protocol};
    run_and_write(expand_cells(config, sweep, only), out);
}

void cmd_compare(const SimConfig& config, const std::optional<Sweep>& sweep, std::ostream& out)
{
    const Protocol all[] = {Protocol::dir, Protocol::lar, Protocol::dlar};
    run_and_write(expand_cells(config, sweep, all), out);
}

} // namespace georoute::cli
