#include "georoute/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "georoute/errors.hpp"

namespace georoute::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::size_t line, const char* expected)
{
    throw ConfigError(std::string(key) + ": cannot parse '" + std::string(value) + "' as " + expected, line);
}

template <class T>
T parse_value(std::string_view key, std::string_view value, std::size_t line)
{
    if constexpr (std::is_same_v<T, Protocol>) {
        try {
            return parse_protocol(value);
        } catch (const InvalidArgument& e) {
            throw ConfigError(std::string(key) + ": " + e.what(), line);
        }
    } else {
        T out{};
        const char* end = value.data() + value.size();
        auto [ptr, ec] = std::from_chars(value.data(), end, out);
        if (ec != std::errc{} || ptr != end || value.empty())
            bad_value(key, value, line, std::is_floating_point_v<T> ? "a number" : "an integer");
        return out;
    }
}

std::string format_value(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T>
std::string format_value(T v)
{
    if constexpr (std::is_same_v<T, Protocol>)
        return std::string(to_string(v));
    else
        return std::to_string(v);
}

template <class Config>
struct Key
{
    std::string_view name;
    std::function<void(Config&, std::string_view, std::size_t)> set;
    std::function<std::string(const Config&)> get;
};

template <class Config, class T>
Key<Config> member(std::string_view name, T Config::*field)
{
    return {
        name,
        [name, field](Config& c, std::string_view v, std::size_t line) { c.*field = parse_value<T>(name, v, line); },
        [field](const Config& c) { return format_value(c.*field); },
    };
}

const std::vector<Key<SimConfig>>& sim_keys()
{
    static const std::vector<Key<SimConfig>> keys{
        member("field_width", &SimConfig::field_width),
        member("field_height", &SimConfig::field_height),
        member("density", &SimConfig::density),
        member("node_count", &SimConfig::node_count),
        member("tx_range", &SimConfig::tx_range),
        member("speed_min", &SimConfig::speed_min),
        member("speed_max", &SimConfig::speed_max),
        member("beacon_interval", &SimConfig::beacon_interval),
        member("duration", &SimConfig::duration),
        member("time_step", &SimConfig::time_step),
        member("protocol", &SimConfig::protocol),
        member("flows", &SimConfig::flows),
        member("seed", &SimConfig::seed),
        member("seeds", &SimConfig::seeds),
        member("ttl", &SimConfig::ttl),
        member("hop_latency_ms", &SimConfig::hop_latency_ms),
    };
    return keys;
}

std::vector<double> parse_list(std::string_view key, std::string_view value, std::size_t line)
{
    std::vector<double> out;
    while (true) {
        const auto comma = value.find(',');
        out.push_back(parse_value<double>(key, trim(value.substr(0, comma)), line));
        if (comma == std::string_view::npos)
            break;
        value.remove_prefix(comma + 1);
    }
    return out;
}

const std::vector<Key<AnalyzeConfig>>& analyze_keys()
{
    static const std::vector<Key<AnalyzeConfig>> keys{
        {"densities",
         [](AnalyzeConfig& c, std::string_view v, std::size_t line) { c.densities = parse_list("densities", v, line); },
         [](const AnalyzeConfig& c) {
             std::string s;
             for (double d : c.densities)
                 s += (s.empty() ? "" : ", ") + format_value(d);
             return s;
         }},
        member("tx_range", &AnalyzeConfig::tx_range),
        member("k_max", &AnalyzeConfig::k_max),
        member("mc_trials", &AnalyzeConfig::mc_trials),
        member("seed", &AnalyzeConfig::seed),
    };
    return keys;
}

template <class Config>
void set_from_table(const std::vector<Key<Config>>& table, Config& config, std::string_view key,
                    std::string_view value, std::size_t line)
{
    for (const auto& k : table) {
        if (k.name == key) {
            k.set(config, trim(value), line);
            return;
        }
    }
    throw ConfigError("unknown key '" + std::string(key) + "'", line);
}

template <class Config>
Config parse_text(std::string_view text)
{
    Config config;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto [key, value] = split_assignment(line, line_no);
        set_key(config, key, value, line_no);
    }
    config.validate();
    return config;
}

template <class Config>
std::string print_table(const std::vector<Key<Config>>& table, const Config& config)
{
    std::string out;
    for (const auto& k : table)
        out += std::string(k.name) + " = " + k.get(config) + "\n";
    return out;
}

} // namespace

void AnalyzeConfig::validate() const
{
    if (densities.empty())
        throw ConfigError("densities must list at least one value");
    for (double d : densities)
        if (!(d > 0.0) || !std::isfinite(d))
            throw ConfigError("densities must all be positive");
    if (!(tx_range > 0.0) || !std::isfinite(tx_range))
        throw ConfigError("tx_range must be a positive finite number");
    if (k_max < 1)
        throw ConfigError("k_max must be >= 1");
    if (mc_trials < 0)
        throw ConfigError("mc_trials must be >= 0");
}

std::pair<std::string, std::string> split_assignment(std::string_view text, std::size_t line)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("expected 'key = value', got '" + std::string(text) + "'", line);
    const std::string_view key = trim(text.substr(0, eq));
    if (key.empty())
        throw ConfigError("missing key before '='", line);
    return {std::string(key), std::string(trim(text.substr(eq + 1)))};
}

void set_key(SimConfig& config, std::string_view key, std::string_view value, std::size_t line)
{
    set_from_table(sim_keys(), config, key, value, line);
}

void set_key(AnalyzeConfig& config, std::string_view key, std::string_view value, std::size_t line)
{
    set_from_table(analyze_keys(), config, key, value, line);
}

SimConfig parse_sim_config(std::string_view text)
{
    return parse_text<SimConfig>(text);
}

AnalyzeConfig parse_analyze_config(std::string_view text)
{
    return parse_text<AnalyzeConfig>(text);
}

std::string print_config(const SimConfig& config)
{
    return print_table(sim_keys(), config);
}

std::string print_config(const AnalyzeConfig& config)
{
    return print_table(analyze_keys(), config);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace georoute::cli
