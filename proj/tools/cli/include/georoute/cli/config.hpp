#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "georoute/netsim.hpp"

namespace georoute::cli {

// Parameter grid for the `analyze` command.
struct AnalyzeConfig
{
    std::vector<double> densities{0.0002, 0.0004};  // nodes/m^2
    double tx_range = 250.0;
    int k_max = 10;
    std::int64_t mc_trials = 0;  // 0 disables the Monte Carlo columns
    std::uint64_t seed = 1;

    // Throws ConfigError naming the violated field.
    void validate() const;

    friend bool operator==(const AnalyzeConfig&, const AnalyzeConfig&) = default;
};

// Flat `key = value` text with `#` comments. Every key is optional; unknown
// keys and malformed lines raise ConfigError carrying the line number.
SimConfig parse_sim_config(std::string_view text);
AnalyzeConfig parse_analyze_config(std::string_view text);

// Applies one `key = value` assignment. `line` is only used for messages.
void set_key(SimConfig& config, std::string_view key, std::string_view value, std::size_t line = 0);
void set_key(AnalyzeConfig& config, std::string_view key, std::string_view value, std::size_t line = 0);

// Splits `key=value` (whitespace tolerant). Throws ConfigError.
std::pair<std::string, std::string> split_assignment(std::string_view text, std::size_t line = 0);

// Canonical text form; parses back to an equal config.
std::string print_config(const SimConfig& config);
std::string print_config(const AnalyzeConfig& config);

std::string read_file(const std::string& path);

} // namespace georoute::cli
