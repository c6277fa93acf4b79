// geo-route-sim: feasibility curves and routing campaigns for DIR, LAR and
// D-LAR.
//
//   geo-route-sim <analyze|simulate|compare> [--config PATH] [--out PATH]
//                 [--seed N] [--mc-trials N] [--sweep key=lo:hi:steps]
//                 [key=value ...]
//
// Exit status: 0 success, 1 usage or configuration error, 2 runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "georoute/cli/commands.hpp"
#include "georoute/errors.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct Options
{
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> mc_trials;
    std::string sweep;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--config", opt.config_path, "flat key = value config file");
    cmd->add_option("--out", opt.out_path, "write CSV here instead of stdout");
    cmd->add_option("--seed", opt.seed, "master seed");
    cmd->add_option("overrides", opt.overrides, "key=value overrides applied after the config file");
}

template <class Config>
Config load(const Options& opt, Config (*parse)(std::string_view))
{
    Config config = opt.config_path.empty() ? parse("") : parse(georoute::cli::read_file(opt.config_path));
    for (const std::string& kv : opt.overrides) {
        auto [key, value] = georoute::cli::split_assignment(kv);
        georoute::cli::set_key(config, key, value);
    }
    if (opt.seed)
        config.seed = *opt.seed;
    config.validate();
    return config;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Position-based routing simulator and feasibility analysis"};
    app.require_subcommand(1);
    Options opt;

    auto* analyze = app.add_subcommand("analyze", "at-least-k candidate probabilities for full and quarter disks");
    add_common(analyze, opt);
    analyze->add_option("--mc-trials", opt.mc_trials, "add point-process Monte Carlo columns with N trials");

    auto* simulate = app.add_subcommand("simulate", "run the configured protocol over seeded campaigns");
    add_common(simulate, opt);
    simulate->add_option("--sweep", opt.sweep, "key=lo:hi:steps");

    auto* compare = app.add_subcommand("compare", "run dir, lar and dlar on identical scenarios");
    add_common(compare, opt);
    compare->add_option("--sweep", opt.sweep, "key=lo:hi:steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    using namespace georoute;
    using namespace georoute::cli;

    std::optional<AnalyzeConfig> analyze_config;
    std::optional<SimConfig> sim_config;
    std::optional<Sweep> sweep;
    try {
        if (analyze->parsed()) {
            analyze_config = load(opt, &parse_analyze_config);
            if (opt.mc_trials)
                analyze_config->mc_trials = *opt.mc_trials;
            analyze_config->validate();
        } else {
            sim_config = load(opt, &parse_sim_config);
            if (!opt.sweep.empty()) {
                sweep = Sweep::parse(opt.sweep);
                // Surface bad sweep keys or values before any campaign runs.
                const Protocol probe[] = {sim_config->protocol};
                expand_cells(*sim_config, sweep, probe);
            }
        }
    } catch (const Error& e) {
        std::cerr << "geo-route-sim: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        std::ofstream file;
        if (!opt.out_path.empty()) {
            file.open(opt.out_path, std::ios::binary | std::ios::trunc);
            if (!file)
                throw std::runtime_error("cannot open output file '" + opt.out_path + "'");
        }
        std::ostream& out = opt.out_path.empty() ? std::cout : file;

        if (analyze_config)
            cmd_analyze(*analyze_config, out);
        else if (simulate->parsed())
            cmd_simulate(*sim_config, sweep, out);
        else
            cmd_compare(*sim_config, sweep, out);

        out.flush();
        if (!out)
            throw std::runtime_error("write failed");
    } catch (const ConfigError& e) {
        std::cerr << "geo-route-sim: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "geo-route-sim: " << e.what() << '\n';
        return kRuntimeError;
    }
    return 0;
}
