#include "georoute/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "georoute/errors.hpp"
#include "georoute/random.hpp"

namespace georoute {

void FeasibilityParams::validate() const
{
    if (!(density > 0.0) || !std::isfinite(density))
        throw InvalidArgument("density must be positive");
    if (!(tx_range > 0.0) || !std::isfinite(tx_range))
        throw InvalidArgument("tx_range must be positive");
    if (k < 0)
        throw InvalidArgument("k must be non-negative");
}

std::string_view to_string(RegionKind r) noexcept
{
    return r == RegionKind::full_circle ? "full_circle" : "quarter_circle";
}

double region_area(double tx_range, RegionKind region) noexcept
{
    const double full = std::numbers::pi * tx_range * tx_range;
    return region == RegionKind::full_circle ? full : full / 4.0;
}

double mean_node_count(const FeasibilityParams& params, RegionKind region)
{
    params.validate();
    return params.density * region_area(params.tx_range, region);
}

double poisson_pmf(int n, double mean)
{
    if (n < 0)
        throw InvalidArgument("poisson_pmf: negative count");
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw InvalidArgument("poisson_pmf: mean must be finite and non-negative");
    if (mean == 0.0)
        return n == 0 ? 1.0 : 0.0;
    // n! overflows past 170, so stay in log space throughout.
    return std::exp(n * std::log(mean) - mean - std::lgamma(n + 1.0));
}

double prob_at_least_k(int k, double mean)
{
    if (k < 0)
        throw InvalidArgument("prob_at_least_k: negative k");
    double below = 0.0;
    for (int n = 0; n < k; ++n)
        below += poisson_pmf(n, mean);
    if (below <= 0.5)
        return std::clamp(1.0 - below, 0.0, 1.0);

    // 1 - below cancels catastrophically here; sum the upper tail instead.
    double tail = 0.0;
    double term = poisson_pmf(k, mean);
    for (int n = k; term > 0.0; ++n) {
        tail += term;
        if (n > mean && term < tail * 1e-17)
            break;
        term *= mean / (n + 1);
    }
    return std::clamp(tail, 0.0, 1.0);
}

std::vector<std::uint32_t> sample_region_counts(const FeasibilityParams& params, RegionKind region,
                                                std::int64_t trials, std::uint64_t seed)
{
    params.validate();
    if (trials < 1)
        throw InvalidArgument("monte carlo: trials must be >= 1");

    const double r = params.tx_range;
    const double r2 = r * r;
    // Bounding box: [-R, R]^2 for the disk, [0, R]^2 for the first quadrant.
    const double lo = region == RegionKind::full_circle ? -r : 0.0;
    const double box_mean = params.density * (r - lo) * (r - lo);

    std::vector<std::uint32_t> counts(static_cast<std::size_t>(trials));
    for (std::int64_t t = 0; t < trials; ++t) {
        auto rng = make_stream(seed, Stream::monte_carlo, static_cast<std::uint64_t>(t));
        std::poisson_distribution<std::uint32_t> scatter(box_mean);
        std::uniform_real_distribution<double> coord(lo, r);
        const std::uint32_t points = scatter(rng);
        std::uint32_t inside = 0;
        for (std::uint32_t i = 0; i < points; ++i) {
            const double x = coord(rng);
            const double y = coord(rng);
            if (x * x + y * y <= r2)
                ++inside;
        }
        counts[static_cast<std::size_t>(t)] = inside;
    }
    return counts;
}

McEstimate estimate_at_least_k(std::span<const std::uint32_t> counts, int k)
{
    if (counts.empty())
        throw InvalidArgument("monte carlo: no trials");
    const auto hits = std::count_if(counts.begin(), counts.end(),
                                    [k](std::uint32_t c) { return static_cast<std::int64_t>(c) >= k; });
    const auto n = static_cast<std::int64_t>(counts.size());
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

McEstimate monte_carlo_at_least_k(const FeasibilityParams& params, RegionKind region, std::int64_t trials,
                                  std::uint64_t seed)
{
    return estimate_at_least_k(sample_region_counts(params, region, trials, seed), params.k);
}

std::vector<FeasibilityRow> feasibility_table(std::span<const double> densities, double tx_range, int k_max,
                                              RegionKind region)
{
    if (k_max < 1)
        throw InvalidArgument("feasibility_table: k_max must be >= 1");
    std::vector<double> sorted(densities.begin(), densities.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<FeasibilityRow> rows;
    rows.reserve(sorted.size() * static_cast<std::size_t>(k_max));
    for (double density : sorted) {
        const double mean = mean_node_count({density, tx_range, 0}, region);
        for (int k = 1; k <= k_max; ++k)
            rows.push_back({density, k, region, prob_at_least_k(k, mean)});
    }
    return rows;
}

void write_feasibility_csv(std::ostream& out, std::span<const FeasibilityRow> rows, bool header)
{
    if (header)
        out << "density,k,region,probability\n";
    char buf[96];
    for (const FeasibilityRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%.10g,%d,%s,%.10g\n", row.density, row.k, to_string(row.region).data(),
                      row.probability);
        out << buf;
    }
}

} // namespace georoute
