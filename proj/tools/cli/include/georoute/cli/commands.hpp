#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "georoute/cli/config.hpp"

namespace georoute::cli {

// `--sweep key=lo:hi:steps`: `steps` evenly spaced values from lo to hi
// inclusive, emitted in ascending order.
struct Sweep
{
    std::string key;
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;

    // Throws ConfigError.
    static Sweep parse(std::string_view text);
    std::vector<double> values() const;
};

// Feasibility curves for both region kinds (full circle first). With
// mc_trials > 0 each row also carries mc_estimate,mc_stderr.
void cmd_analyze(const AnalyzeConfig& config, std::ostream& out);

// Expands the sweep (if any) and the seed range into campaign configs, in
// output order: sweep value, then seed, then protocol.
std::vector<SimConfig> expand_cells(const SimConfig& base, const std::optional<Sweep>& sweep,
                                    std::span<const Protocol> protocols);

// One metrics row per (sweep value, seed).
void cmd_simulate(const SimConfig& config, const std::optional<Sweep>& sweep, std::ostream& out);

// As cmd_simulate, but every cell runs dir, lar and dlar on the same seeded
// scenario; config.protocol is ignored.
void cmd_compare(const SimConfig& config, const std::optional<Sweep>& sweep, std::ostream& out);

} // namespace georoute::cli
