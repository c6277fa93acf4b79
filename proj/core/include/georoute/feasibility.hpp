#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace georoute {

// Homogeneous Poisson field around a forwarder.
struct FeasibilityParams
{
    double density = 0.0002;  // nodes per square meter
    double tx_range = 250.0;  // meters
    int k = 1;                // minimum candidate count

    // Throws InvalidArgument naming the offending field.
    void validate() const;
};

enum class RegionKind
{
    full_circle,
    quarter_circle,
};

std::string_view to_string(RegionKind r) noexcept;

double region_area(double tx_range, RegionKind region) noexcept;

// density * area of the region.
double mean_node_count(const FeasibilityParams& params, RegionKind region);

// P(N = n) for N ~ Poisson(mean), evaluated in log space.
double poisson_pmf(int n, double mean);

// P(N >= k) = 1 - sum_{n<k} pmf(n), clamped to [0, 1]. When that sum is
// close to 1 the upper tail is summed directly to avoid cancellation.
double prob_at_least_k(int k, double mean);

struct McEstimate
{
    double estimate = 0.0;
    double stderr_ = 0.0;  // binomial standard error of the estimate
    std::int64_t trials = 0;
};

// Point-process sampler: each trial scatters a Poisson number of points over
// the region's bounding box and counts those that land inside the disk or
// quarter disk. Trial i draws from its own stream derived from (seed, i).
std::vector<std::uint32_t> sample_region_counts(const FeasibilityParams& params, RegionKind region,
                                                std::int64_t trials, std::uint64_t seed);

McEstimate estimate_at_least_k(std::span<const std::uint32_t> counts, int k);

// Throws InvalidArgument when trials < 1.
McEstimate monte_carlo_at_least_k(const FeasibilityParams& params, RegionKind region, std::int64_t trials,
                                  std::uint64_t seed);

struct FeasibilityRow
{
    double density = 0.0;
    int k = 0;
    RegionKind region = RegionKind::full_circle;
    double probability = 0.0;
};

// Rows ordered by (density ascending, k ascending), k = 1..k_max.
// Throws InvalidArgument when k_max < 1 or any density/tx_range <= 0.
std::vector<FeasibilityRow> feasibility_table(std::span<const double> densities, double tx_range, int k_max,
                                              RegionKind region);

// `density,k,region,probability`, probabilities to 10 significant digits.
void write_feasibility_csv(std::ostream& out, std::span<const FeasibilityRow> rows, bool header = true);

} // namespace georoute
